#pragma once

#include <string>
#include <vector>

#include "quatimage/classify.hpp"

namespace quatimage {

/// A similarity move v -> lambda * h * v * h^{-1}.
struct ConjugationMove {
    Quaternion h;        // invertible
    ExactScalar lambda;
};

/// lambda * h * v * h^{-1}.
Quaternion apply_move(const ConjugationMove& move, const Quaternion& v);

/// Finds a move with lambda*h*v*h^{-1} = u exactly, for nonzero vectors v, u.
/// Each side is aligned with the i axis (for t = ai+bj+ck with (b,c) != (0,0)
/// the conjugator is h = 1 + yj + zk, y = -c/(a+s), z = b/(a+s),
/// s = sqrt(a^2+b^2+c^2), which satisfies h i h^{-1} = t/s; a negative
/// multiple of i routes through h = j instead), then the two alignments are
/// composed. Throws NotAVectorError / ZeroVectorError.
ConjugationMove solve_vector_conjugation(const Quaternion& v, const Quaternion& u);

/// Pivot data for the full-image blend: with f(w) := evaluate(p, base with
/// coordinate `index` replaced by w), f(w0) = s (nonzero scalar) and
/// f(w1) = a + v with v a nonzero vector. `index` is 1-based.
struct PivotConfig {
    std::vector<Quaternion> base;
    int index = 1;
    Quaternion w0;
    Quaternion w1;
    ExactScalar s;
    ExactScalar a;
    Quaternion v;
};

/// An exact preimage: evaluate(p, args) = target, re-checked before return.
struct WitnessResult {
    std::vector<Quaternion> args;
    Quaternion target;
    bool verified = false;
    std::vector<std::string> trace;
};

/// Exact check evaluate(p, args) == t. Throws ArityMismatchError.
bool verify_witness(const Polynomial& p, const std::vector<Quaternion>& args,
                    const Quaternion& t);

/// Preimage of a real target t: scales coordinate 1 of the scalar-evidence
/// tuple by t/s (t = 0 zeroes the coordinate). Requires verdict SCALARS_R or
/// FULL_H; throws ClassMismatchError otherwise.
WitnessResult witness_scalar(const Polynomial& p, const ImageClassML& cls,
                             const ExactScalar& t);

/// Preimage of a vector target u: conjugates the vector-evidence tuple by
/// the move sending the evidence value to u, folding lambda into
/// coordinate 1. Requires verdict VECTORS_V or FULL_H; throws
/// ClassMismatchError, and NotAVectorError when u is not a vector.
WitnessResult witness_vector(const Polynomial& p, const ImageClassML& cls,
                             const Quaternion& u);

constexpr int kDefaultPivotBudget = 4;

/// Finds a PivotConfig for a FULL_H polynomial. Search stages, each
/// deterministic and each candidate checked by exact evaluation:
///   1. walk the coordinate-flip chain from the scalar-evidence tuple to the
///      vector-evidence tuple and take the first scalar->nonscalar crossing;
///   2. scan all pairs of basis tuples differing in one coordinate
///      (index ascending, tuple lexicographic, replacement axis ascending);
///   3. allow one base coordinate to range over small integer-combination
///      quaternions with at most two nonzero coordinates bounded by a stage
///      value growing to `budget`, solving exactly for a rational scalar
///      direction w0 in the kernel of the vector part of w -> f(w).
/// Throws ClassMismatchError unless verdict is FULL_H, and
/// SearchBudgetExceededError when every stage is exhausted.
PivotConfig find_mixed_pivot(const Polynomial& p, const ImageClassML& cls,
                             int budget = kDefaultPivotBudget);

/// Preimage of an arbitrary target t for a FULL_H polynomial via the pivot
/// blend: coordinate `index` becomes x*w0 + y*w1 with y = lambda of the move
/// sending pivot.v to Ve(t), x = (Re(t) - y*a)/s, and every coordinate is
/// conjugated by the move's h. Throws ClassMismatchError.
WitnessResult witness_full(const Polynomial& p, const ImageClassML& cls,
                           const Quaternion& t);

}  // namespace quatimage
