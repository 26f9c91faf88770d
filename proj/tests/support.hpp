#pragma once

// Shared seeded generators for the suites. Everything is exact and
// deterministic: a fixed seed reproduces the exact failing input.

#include <vector>

#include "quatimage/polynomial.hpp"
#include "quatimage/random.hpp"

namespace qtest {

using namespace quatimage;

/// Fisher-Yates permutation of {1..m}.
inline std::vector<int> random_permutation(SplitMix64& rng, int m) {
    std::vector<int> word(static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t) word[static_cast<std::size_t>(t)] = t + 1;
    for (int t = m - 1; t > 0; --t) {
        const auto other = static_cast<std::size_t>(
            rng.below(static_cast<std::uint64_t>(t + 1)));
        std::swap(word[static_cast<std::size_t>(t)], word[other]);
    }
    return word;
}

/// Nonzero rational with |num| <= bound, den <= bound.
inline BigRational random_nonzero_rational(SplitMix64& rng, long long bound) {
    for (;;) {
        BigRational r = random_rational(rng, bound);
        if (r != 0) return r;
    }
}

/// Nonzero multilinear polynomial in m variables: 1..max_terms permutation
/// words with nonzero coefficients. Repeated words merge and can cancel, so
/// redraw until something survives.
inline Polynomial random_multilinear(SplitMix64& rng, int m,
                                     long long coeff_bound = 10,
                                     int max_terms = 6) {
    for (;;) {
        Polynomial p;
        p.num_vars = m;
        const int terms = 1 + static_cast<int>(rng.below(
                                  static_cast<std::uint64_t>(max_terms)));
        for (int t = 0; t < terms; ++t) {
            Monomial mono;
            mono.coeff = random_nonzero_rational(rng, coeff_bound);
            mono.word = random_permutation(rng, m);
            p.monomials.push_back(std::move(mono));
        }
        p = canonicalize(std::move(p));
        if (!p.is_zero()) return p;
    }
}

/// Random tuple of quaternion arguments.
inline std::vector<Quaternion> random_args(SplitMix64& rng, int m,
                                           long long bound) {
    std::vector<Quaternion> args;
    args.reserve(static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t) args.push_back(random_quaternion(rng, bound));
    return args;
}

/// Nonzero vector quaternion.
inline Quaternion random_nonzero_vector(SplitMix64& rng, long long bound) {
    for (;;) {
        ExactScalar ci{random_rational(rng, bound)};
        ExactScalar cj{random_rational(rng, bound)};
        ExactScalar ck{random_rational(rng, bound)};
        Quaternion v(ExactScalar(0), std::move(ci), std::move(cj),
                     std::move(ck));
        if (!v.is_zero()) return v;
    }
}

}  // namespace qtest
