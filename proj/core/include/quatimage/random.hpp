#pragma once

#include <cstdint>

#include "quatimage/quaternion.hpp"

namespace quatimage {

/// SplitMix64: platform-independent 64-bit generator used for every seeded
/// draw in the library, so identical seeds give identical streams everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n), n >= 1. Modulo bias is irrelevant here;
    /// only determinism and coverage matter.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

/// The finalizer step of SplitMix64, usable as a standalone 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Independent substream for one work item: the documented split rule for
/// parallel sampling. Stream `index` of seed s is SplitMix64 seeded with
/// mix64(s + (index+1) * golden).
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL));
}

/// Rational with numerator in [-bound, bound] and denominator in [1, bound].
/// Draws the numerator first, then the denominator.
inline BigRational random_rational(SplitMix64& rng, long long bound) {
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    const long long num =
        static_cast<long long>(rng.below(span)) - bound;
    const long long den =
        static_cast<long long>(rng.below(static_cast<std::uint64_t>(bound))) + 1;
    return BigRational(BigInt(num), BigInt(den));
}

/// Quaternion with four random_rational coordinates, drawn in re, i, j, k
/// order.
inline Quaternion random_quaternion(SplitMix64& rng, long long bound) {
    ExactScalar re{random_rational(rng, bound)};
    ExactScalar ci{random_rational(rng, bound)};
    ExactScalar cj{random_rational(rng, bound)};
    ExactScalar ck{random_rational(rng, bound)};
    return Quaternion(std::move(re), std::move(ci), std::move(cj), std::move(ck));
}

}  // namespace quatimage
