#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quatimage/polynomial.hpp"
#include "quatimage/random.hpp"

namespace quatimage {

enum class SampleVerdict { ZERO, R_ALL, R_NONNEG, R_NONPOS, V_ONLY, DENSE_H };

const char* to_string(SampleVerdict v);

struct SampleCounts {
    long long zero = 0;
    long long positive_scalar = 0;
    long long negative_scalar = 0;
    long long vector = 0;
    long long mixed = 0;
};

/// Outcome of seeded exact sampling. The verdict is evidence, not a proof;
/// DENSE_H in particular means "consistent with a Zariski dense image".
struct SampleReport {
    SampleVerdict verdict = SampleVerdict::ZERO;
    long long n = 0;
    std::uint64_t seed = 0;
    long long bound = 0;
    SampleCounts counts;
    long long nonpositive_re = 0;  // samples with Re <= 0
    long long nonnegative_re = 0;  // samples with Re >= 0
    std::vector<std::string> notes;
};

constexpr long long kDefaultSampleBound = 100;

/// Draws n quaternion tuples with random rational coordinates (sample t uses
/// substream(seed, t); coordinates drawn per variable in re, i, j, k order,
/// numerators and denominators bounded by `bound`), evaluates exactly, and
/// categorizes each value exactly, with no tolerances anywhere. Verdict:
/// all zero -> ZERO; scalars only -> R_ALL / R_NONNEG / R_NONPOS by the signs
/// present (the one-sided verdicts need a strictly nonzero sample); vectors
/// (some nonzero) and zeros only -> V_ONLY; anything else -> DENSE_H.
SampleReport sample_image(const Polynomial& p, long long n, std::uint64_t seed,
                          long long bound = kDefaultSampleBound);

/// Exact check of p(c^{w_1} a_1, ..., c^{w_m} a_m) = c^d p(a_1, ..., a_m) on
/// `trials` seeded draws (c != 0; negative weights use powers of 1/c).
/// Returns false on the first counterexample, so an invalid certificate is
/// reported rather than rejected up front.
bool check_cone_identity(const Polynomial& p, const WeightVector& w,
                         long long trials, std::uint64_t seed,
                         long long bound = kDefaultSampleBound);

/// Exact complex number re + im*sqrt(-1) over the scalar tower.
struct ComplexScalar {
    ExactScalar re, im;

    ComplexScalar() = default;
    ComplexScalar(ExactScalar r, ExactScalar i)
        : re(std::move(r)), im(std::move(i)) {}
    explicit ComplexScalar(long long r) : re(r) {}

    friend ComplexScalar operator+(const ComplexScalar& x, const ComplexScalar& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend ComplexScalar operator-(const ComplexScalar& x, const ComplexScalar& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend ComplexScalar operator*(const ComplexScalar& x, const ComplexScalar& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend bool operator==(const ComplexScalar& x, const ComplexScalar& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend bool operator!=(const ComplexScalar& x, const ComplexScalar& y) {
        return !(x == y);
    }
};

/// Row-major 2x2 complex matrix with exact entries.
struct ComplexMatrix2 {
    ComplexScalar a11, a12, a21, a22;

    friend bool operator==(const ComplexMatrix2&, const ComplexMatrix2&) = default;
};

ComplexMatrix2 m2_add(const ComplexMatrix2& x, const ComplexMatrix2& y);
ComplexMatrix2 m2_mul(const ComplexMatrix2& x, const ComplexMatrix2& y);
ComplexScalar m2_trace(const ComplexMatrix2& x);
ComplexScalar m2_det(const ComplexMatrix2& x);

/// The embedding of H into 2x2 complex matrices, scaled by z:
/// a+bi+cj+dk -> z * [[a+bi, c+di], [-c+di, a-bi]]. With z = 1 it is a ring
/// homomorphism; trace = 2*Re(q) and det = norm_sq(q).
ComplexMatrix2 phi(const Quaternion& q, const ComplexScalar& z);

/// Eigenvalue data of phi(q, 1): the eigenvalues are alpha +- sqrt(n_sq)*i
/// with alpha = Re(q) and n_sq = norm_sq(Ve(q)) >= 0.
struct EigenPair {
    ExactScalar alpha;
    ExactScalar n_sq;

    friend bool operator==(const EigenPair&, const EigenPair&) = default;
};

EigenPair eigenvalues(const Quaternion& q);

/// A point (a+bi)/(a-bi) of the complex unit circle, (a, b) != (0, 0).
struct RatioPoint {
    BigRational a, b;
};

using RatioSet = std::vector<RatioPoint>;

/// The real factor -a_c^2 (l1-l2)^2 - b_c^2 (l1+l2)^2 of the eigenvalues
/// l1, l2 of q, computed as 4*(a_c^2 * n_sq - b_c^2 * alpha^2). Zero exactly
/// when the eigenvalue ratio of q is the circle point of c or its inverse.
/// Throws InvalidRatioPointError on (0, 0).
ExactScalar ratio_factor(const Quaternion& q, const RatioPoint& c);

/// q scaled by the product of ratio_factor(q, c) over c in S: a real
/// multiple of q that is zero or has eigenvalue ratio outside S.
Quaternion ratio_avoiding_eval(const Quaternion& q, const RatioSet& s);

}  // namespace quatimage
