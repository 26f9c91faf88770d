#pragma once

#include <optional>
#include <vector>

#include "quatimage/polynomial.hpp"

namespace quatimage {

/// One basic-quaternion substitution per variable.
using BasisTuple = std::vector<BasisAxis>;

/// coeff * axis; coeff may be zero (then the axis is E by convention).
struct BasisValue {
    BigRational coeff;
    BasisAxis axis = BasisAxis::E;

    friend bool operator==(const BasisValue&, const BasisValue&) = default;
};

enum class MLVerdict { ZERO_PI, SCALARS_R, VECTORS_V, FULL_H };

const char* to_string(MLVerdict v);

/// A basis tuple together with the nonzero scalar the polynomial takes there.
struct ScalarEvidence {
    BasisTuple tuple;
    BigRational value;
};

/// A basis tuple together with the nonzero coeff*axis (axis != E) value.
struct VectorEvidence {
    BasisTuple tuple;
    BasisValue value;
};

/// Image verdict for a multilinear polynomial over the quaternions, with the
/// lexicographically first basis tuples witnessing each side.
struct ImageClassML {
    MLVerdict verdict = MLVerdict::ZERO_PI;
    std::optional<ScalarEvidence> scalar_evidence;  // SCALARS_R, FULL_H
    std::optional<VectorEvidence> vector_evidence;  // VECTORS_V, FULL_H
};

/// The quaternion tuple a BasisTuple denotes.
std::vector<Quaternion> embed_tuple(const BasisTuple& t);

/// Advances t in lexicographic order (E < I < J < K, last coordinate
/// fastest); returns false after the all-K tuple wraps to all-E.
bool next_basis_tuple(BasisTuple& t);

/// Evaluates a multilinear polynomial on a basis tuple entirely in the Q8
/// sign algebra: one word product per monomial, rational accumulation per
/// axis. The result always lies on a single axis and equals
/// evaluate(p, embed_tuple(t)). Throws NotMultilinearError.
BasisValue eval_on_basis_tuple(const Polynomial& p, const BasisTuple& t);

constexpr int kDefaultArityCap = 8;

/// Decides the image of a multilinear polynomial by enumerating all 4^m
/// basis substitutions: no nonzero value -> ZERO_PI, only scalars ->
/// SCALARS_R, only vectors -> VECTORS_V, both -> FULL_H. The zero polynomial
/// classifies as ZERO_PI directly. Throws NotMultilinearError and, when
/// num_vars exceeds arity_cap, ArityCapExceededError.
ImageClassML classify(const Polynomial& p, int arity_cap = kDefaultArityCap);

}  // namespace quatimage
