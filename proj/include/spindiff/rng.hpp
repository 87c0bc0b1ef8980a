#pragma once

#include <cmath>
#include <cstdint>

namespace spindiff {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ull;

/// SplitMix64 finalizer. Bijective on 64-bit values.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

/// Keyed combination of two 64-bit values into one well-mixed key.
inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
    return mix64(a + kGoldenGamma + mix64(b + kGoldenGamma));
}

/// Stateless counter-based draw: the value depends only on (key, counter),
/// never on construction or call order. Used for quenched disorder.
inline std::uint64_t counter_hash(std::uint64_t key, std::uint64_t counter) {
    return mix64(hash_combine(key, counter));
}

/**
 * Splittable pseudo-random stream (SplitMix64 core).
 *
 * Contract:
 *  - identical (seed, stream_id) reproduces the identical variate sequence;
 *  - distinct stream_ids give statistically independent sequences;
 *  - fork() derives a child stream from the stream's *identity*, not from
 *    its current position, so forked streams are reproducible no matter how
 *    many variates the parent has already consumed.
 */
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : key_(hash_combine(seed, stream_id)), state_(key_) {}

    /// Identity of the stream; forks key off this value.
    std::uint64_t key() const { return key_; }

    RandomStream fork(std::uint64_t id) const {
        return RandomStream(from_key{}, hash_combine(key_, id));
    }
    RandomStream fork(std::uint64_t a, std::uint64_t b) const {
        return RandomStream(from_key{}, hash_combine(hash_combine(key_, a), b));
    }

    std::uint64_t next_u64() {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    /// Uniform on the open interval (0,1): 53-bit mantissa, half-ulp offset,
    /// endpoints unreachable.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform on (−1,1). Never returns exactly 0, +1 or −1, so sign
    /// comparisons against it cannot tie.
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

    bool next_bool() { return (next_u64() >> 63) != 0; }

    /// Standard normal via Marsaglia's polar method; the spare variate is
    /// cached, keeping the draw count deterministic per call sequence.
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = next_symmetric();
            v = next_symmetric();
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

private:
    struct from_key {};
    RandomStream(from_key, std::uint64_t key) : key_(key), state_(key) {}

    std::uint64_t key_;
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace spindiff
