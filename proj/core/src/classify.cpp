#include "quatimage/classify.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace quatimage {

const char* to_string(MLVerdict v) {
    switch (v) {
        case MLVerdict::ZERO_PI: return "ZERO_PI";
        case MLVerdict::SCALARS_R: return "SCALARS_R";
        case MLVerdict::VECTORS_V: return "VECTORS_V";
        case MLVerdict::FULL_H: return "FULL_H";
    }
    throw std::logic_error("invalid MLVerdict");
}

std::vector<Quaternion> embed_tuple(const BasisTuple& t) {
    std::vector<Quaternion> out;
    out.reserve(t.size());
    for (BasisAxis axis : t) out.push_back(Quaternion::unit(axis));
    return out;
}

bool next_basis_tuple(BasisTuple& t) {
    for (std::size_t pos = t.size(); pos-- > 0;) {
        if (t[pos] != BasisAxis::K) {
            t[pos] = static_cast<BasisAxis>(axis_index(t[pos]) + 1);
            return true;
        }
        t[pos] = BasisAxis::E;
    }
    return false;
}

namespace {

// Q8 word product + per-axis rational accumulation. Assumes multilinearity;
// the single-axis conclusion is still checked on every call because a
// violation would invalidate the verdict.
BasisValue eval_on_basis_tuple_unchecked(const Polynomial& p,
                                         const BasisTuple& t) {
    std::array<BigRational, 4> acc{};
    for (const Monomial& m : p.monomials) {
        SignedBasis prod{+1, BasisAxis::E};
        for (int idx : m.word) {
            prod = q8_mul(prod, {+1, t[static_cast<std::size_t>(idx - 1)]});
        }
        BigRational& slot = acc[static_cast<std::size_t>(axis_index(prod.axis))];
        if (prod.sign > 0) {
            slot += m.coeff;
        } else {
            slot -= m.coeff;
        }
    }
    BasisValue out{BigRational(0), BasisAxis::E};
    bool found = false;
    for (BasisAxis axis : kAllAxes) {
        const BigRational& c = acc[static_cast<std::size_t>(axis_index(axis))];
        if (c.is_zero()) continue;
        if (found) {
            throw std::logic_error(
                "basis evaluation landed on two axes; input cannot be "
                "multilinear");
        }
        out = BasisValue{c, axis};
        found = true;
    }
    return out;
}

}  // namespace

BasisValue eval_on_basis_tuple(const Polynomial& p, const BasisTuple& t) {
    if (!is_multilinear(p)) {
        throw NotMultilinearError("eval_on_basis_tuple needs a multilinear polynomial");
    }
    if (t.size() != static_cast<std::size_t>(p.num_vars)) {
        throw ArityMismatchError(
            "basis tuple length " + std::to_string(t.size()) +
            " does not match arity " + std::to_string(p.num_vars));
    }
    return eval_on_basis_tuple_unchecked(p, t);
}

ImageClassML classify(const Polynomial& p, int arity_cap) {
    if (p.is_zero()) {
        return ImageClassML{MLVerdict::ZERO_PI, std::nullopt, std::nullopt};
    }
    if (!is_multilinear(p)) {
        throw NotMultilinearError("classify needs a multilinear polynomial");
    }
    if (p.num_vars > arity_cap) {
        throw ArityCapExceededError(
            "arity " + std::to_string(p.num_vars) + " exceeds cap " +
            std::to_string(arity_cap) + " (4^m substitutions)");
    }

    ImageClassML out;
    BasisTuple t(static_cast<std::size_t>(p.num_vars), BasisAxis::E);
    do {
        const BasisValue v = eval_on_basis_tuple_unchecked(p, t);
        if (v.coeff.is_zero()) continue;
        if (v.axis == BasisAxis::E) {
            if (!out.scalar_evidence) {
                out.scalar_evidence = ScalarEvidence{t, v.coeff};
            }
        } else if (!out.vector_evidence) {
            out.vector_evidence = VectorEvidence{t, v};
        }
        if (out.scalar_evidence && out.vector_evidence) break;
    } while (next_basis_tuple(t));

    if (out.scalar_evidence && out.vector_evidence) {
        out.verdict = MLVerdict::FULL_H;
    } else if (out.scalar_evidence) {
        out.verdict = MLVerdict::SCALARS_R;
    } else if (out.vector_evidence) {
        out.verdict = MLVerdict::VECTORS_V;
    } else {
        out.verdict = MLVerdict::ZERO_PI;
    }
    return out;
}

}  // namespace quatimage
