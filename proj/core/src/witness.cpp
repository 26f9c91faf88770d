#include "quatimage/witness.hpp"

#include <array>
#include <cstdlib>
#include <string>
#include <utility>

namespace quatimage {

namespace {

Quaternion to_quaternion(const BasisValue& v) {
    return q_scale(ExactScalar(BigRational(v.coeff)),
                   Quaternion::unit(v.axis));
}

std::string describe_args(const std::vector<Quaternion>& args) {
    std::string out = "(";
    for (std::size_t t = 0; t < args.size(); ++t) {
        if (t > 0) out += ", ";
        out += args[t].str();
    }
    return out + ")";
}

// Aligns the i axis with a nonzero vector t: lambda * h * i * h^{-1} = t.
// For t = a i + b j + c k with (b, c) != (0, 0) the cone construction
// h = 1 + y j + z k, y = -c/(a+s), z = b/(a+s) gives h i h^{-1} = t/s with
// s = sqrt(a^2+b^2+c^2) > |a|, so the denominator a+s is never zero there;
// pure multiples of i use h = 1 or the j-conjugation flip instead.
ConjugationMove move_to_i(const Quaternion& t) {
    const ExactScalar& a = t.ci;
    const ExactScalar& b = t.cj;
    const ExactScalar& c = t.ck;
    if (b.is_zero() && c.is_zero()) {
        if (a.sign() > 0) {
            return ConjugationMove{Quaternion::one(), a};
        }
        return ConjugationMove{Quaternion::unit(BasisAxis::J), -a};
    }
    const ExactScalar s = scalar_sqrt(a * a + b * b + c * c);
    const ExactScalar d = a + s;
    const ExactScalar y = -(c / d);
    const ExactScalar z = b / d;
    return ConjugationMove{
        Quaternion(ExactScalar(1), ExactScalar(0), y, z), s};
}

}  // namespace

Quaternion apply_move(const ConjugationMove& move, const Quaternion& v) {
    return q_scale(move.lambda, conjugate_by(v, move.h));
}

ConjugationMove solve_vector_conjugation(const Quaternion& v,
                                         const Quaternion& u) {
    if (!v.is_vector() || !u.is_vector()) {
        throw NotAVectorError("solve_vector_conjugation needs vector arguments");
    }
    if (v.is_zero() || u.is_zero()) {
        throw ZeroVectorError("solve_vector_conjugation needs nonzero vectors");
    }
    const ConjugationMove to_v = move_to_i(v);
    const ConjugationMove to_u = move_to_i(u);
    // conj_{h2} after conj_{h1}^{-1} is conj_{h2 * conj(h1)} (the norm_sq(h1)
    // factor cancels inside a conjugation).
    return ConjugationMove{q_mul(to_u.h, q_conj(to_v.h)),
                           to_u.lambda / to_v.lambda};
}

bool verify_witness(const Polynomial& p, const std::vector<Quaternion>& args,
                    const Quaternion& t) {
    return evaluate(p, args) == t;
}

WitnessResult witness_scalar(const Polynomial& p, const ImageClassML& cls,
                             const ExactScalar& t) {
    if ((cls.verdict != MLVerdict::SCALARS_R &&
         cls.verdict != MLVerdict::FULL_H) ||
        !cls.scalar_evidence) {
        throw ClassMismatchError(
            std::string("scalar witness needs verdict SCALARS_R or FULL_H, got ") +
            to_string(cls.verdict));
    }
    const ScalarEvidence& ev = *cls.scalar_evidence;
    WitnessResult out;
    out.target = Quaternion(t);
    out.args = embed_tuple(ev.tuple);
    const ExactScalar s{BigRational(ev.value)};
    out.trace.push_back("scalar evidence: value " + s.str() + " at " +
                        describe_args(out.args));
    if (t.is_zero()) {
        out.args[0] = Quaternion::zero();
        out.trace.push_back("target 0: coordinate 1 set to 0");
    } else {
        const ExactScalar factor = t / s;
        out.args[0] = q_scale(factor, out.args[0]);
        out.trace.push_back("coordinate 1 scaled by t/s = " + factor.str());
    }
    out.verified = verify_witness(p, out.args, out.target);
    return out;
}

WitnessResult witness_vector(const Polynomial& p, const ImageClassML& cls,
                             const Quaternion& u) {
    if ((cls.verdict != MLVerdict::VECTORS_V &&
         cls.verdict != MLVerdict::FULL_H) ||
        !cls.vector_evidence) {
        throw ClassMismatchError(
            std::string("vector witness needs verdict VECTORS_V or FULL_H, got ") +
            to_string(cls.verdict));
    }
    if (!u.is_vector()) {
        throw NotAVectorError("vector witness target must be a vector, got " +
                              u.str());
    }
    const VectorEvidence& ev = *cls.vector_evidence;
    WitnessResult out;
    out.target = u;
    out.args = embed_tuple(ev.tuple);
    out.trace.push_back("vector evidence: value " +
                        to_quaternion(ev.value).str() + " at " +
                        describe_args(out.args));
    if (u.is_zero()) {
        out.args[0] = Quaternion::zero();
        out.trace.push_back("target 0: coordinate 1 set to 0");
    } else {
        const ConjugationMove move =
            solve_vector_conjugation(to_quaternion(ev.value), u);
        for (Quaternion& arg : out.args) {
            arg = conjugate_by(arg, move.h);
        }
        out.args[0] = q_scale(move.lambda, out.args[0]);
        out.trace.push_back("conjugated by h = " + move.h.str() +
                            ", lambda = " + move.lambda.str() +
                            " folded into coordinate 1");
    }
    out.verified = verify_witness(p, out.args, out.target);
    return out;
}

namespace {

bool pivot_valid(const Polynomial& p, const PivotConfig& cfg) {
    if (cfg.s.is_zero() || !cfg.v.is_vector() || cfg.v.is_zero()) return false;
    std::vector<Quaternion> args = cfg.base;
    const std::size_t at = static_cast<std::size_t>(cfg.index - 1);
    args[at] = cfg.w0;
    if (evaluate(p, args) != Quaternion(cfg.s)) return false;
    args[at] = cfg.w1;
    return evaluate(p, args) == q_add(Quaternion(cfg.a), cfg.v);
}

// Chain from the scalar-evidence tuple to the vector-evidence tuple: entry r
// takes its first r coordinates from the vector tuple.
std::vector<BasisTuple> evidence_chain(const ImageClassML& cls) {
    const BasisTuple& from = cls.scalar_evidence->tuple;
    const BasisTuple& to = cls.vector_evidence->tuple;
    std::vector<BasisTuple> chain;
    chain.reserve(from.size() + 1);
    BasisTuple cur = from;
    chain.push_back(cur);
    for (std::size_t r = 0; r < from.size(); ++r) {
        cur[r] = to[r];
        chain.push_back(cur);
    }
    return chain;
}

std::optional<PivotConfig> pivot_from_chain(const Polynomial& p,
                                            const ImageClassML& cls) {
    const std::vector<BasisTuple> chain = evidence_chain(cls);
    BasisValue prev = eval_on_basis_tuple(p, chain.front());
    for (std::size_t r = 1; r < chain.size(); ++r) {
        const BasisValue cur = eval_on_basis_tuple(p, chain[r]);
        const bool prev_scalar_nonzero =
            prev.axis == BasisAxis::E && !prev.coeff.is_zero();
        const bool cur_nonscalar =
            cur.axis != BasisAxis::E && !cur.coeff.is_zero();
        if (prev_scalar_nonzero && cur_nonscalar) {
            PivotConfig cfg;
            cfg.base = embed_tuple(chain[r - 1]);
            cfg.index = static_cast<int>(r);
            cfg.w0 = Quaternion::unit(chain[r - 1][r - 1]);
            cfg.w1 = Quaternion::unit(chain[r][r - 1]);
            cfg.s = ExactScalar(BigRational(prev.coeff));
            cfg.a = ExactScalar(0);
            cfg.v = to_quaternion(cur);
            return cfg;
        }
        prev = cur;
    }
    return std::nullopt;
}

std::size_t tuple_rank(const BasisTuple& t) {
    std::size_t rank = 0;
    for (BasisAxis axis : t) {
        rank = rank * 4 + static_cast<std::size_t>(axis_index(axis));
    }
    return rank;
}

// Scans every pair of basis tuples differing in exactly one coordinate.
std::optional<PivotConfig> pivot_from_basis_pairs(const Polynomial& p) {
    const std::size_t m = static_cast<std::size_t>(p.num_vars);
    std::vector<BasisValue> values;
    values.reserve(static_cast<std::size_t>(1) << (2 * m));
    BasisTuple t(m, BasisAxis::E);
    do {
        values.push_back(eval_on_basis_tuple(p, t));
    } while (next_basis_tuple(t));

    for (std::size_t index = 1; index <= m; ++index) {
        const std::size_t stride =
            static_cast<std::size_t>(1) << (2 * (m - index));
        BasisTuple base(m, BasisAxis::E);
        do {
            const BasisValue& at_base = values[tuple_rank(base)];
            if (at_base.axis != BasisAxis::E || at_base.coeff.is_zero()) {
                continue;
            }
            const std::size_t rank0 =
                tuple_rank(base) -
                stride * static_cast<std::size_t>(axis_index(base[index - 1]));
            for (BasisAxis axis : kAllAxes) {
                if (axis == base[index - 1]) continue;
                const BasisValue& flipped =
                    values[rank0 + stride * static_cast<std::size_t>(
                                                axis_index(axis))];
                if (flipped.axis == BasisAxis::E || flipped.coeff.is_zero()) {
                    continue;
                }
                PivotConfig cfg;
                cfg.base = embed_tuple(base);
                cfg.index = static_cast<int>(index);
                cfg.w0 = Quaternion::unit(base[index - 1]);
                cfg.w1 = Quaternion::unit(axis);
                cfg.s = ExactScalar(BigRational(at_base.coeff));
                cfg.a = ExactScalar(0);
                cfg.v = to_quaternion(flipped);
                return cfg;
            }
        } while (next_basis_tuple(base));
    }
    return std::nullopt;
}

// Stage-B candidate quaternions: integer combinations of at most two basis
// directions with max coefficient magnitude exactly B, in a fixed order.
std::vector<Quaternion> stage_candidates(int bound) {
    std::vector<long> coeffs;
    for (long mag = 1; mag <= bound; ++mag) {
        coeffs.push_back(mag);
        coeffs.push_back(-mag);
    }
    std::vector<Quaternion> out;
    for (BasisAxis axis : kAllAxes) {
        for (long sign : {+1L, -1L}) {
            out.push_back(q_scale(ExactScalar(sign * bound),
                                  Quaternion::unit(axis)));
        }
    }
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            for (long ca : coeffs) {
                for (long cb : coeffs) {
                    if (std::labs(ca) != bound && std::labs(cb) != bound) {
                        continue;
                    }
                    Quaternion q;
                    q.coord(static_cast<BasisAxis>(a)) = ExactScalar(ca);
                    q.coord(static_cast<BasisAxis>(b)) = ExactScalar(cb);
                    out.push_back(std::move(q));
                }
            }
        }
    }
    return out;
}

// Kernel basis of a rows x cols rational matrix.
std::vector<std::vector<BigRational>> nullspace(
    std::vector<std::vector<BigRational>> rows, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const BigRational inv_lead = BigRational(1) / rows[r][col];
        for (std::size_t t = col; t < cols; ++t) rows[r][t] *= inv_lead;
        for (std::size_t other = 0; other < rows.size(); ++other) {
            if (other == r || rows[other][col].is_zero()) continue;
            const BigRational factor = rows[other][col];
            for (std::size_t t = col; t < cols; ++t) {
                rows[other][t] -= factor * rows[r][t];
            }
        }
        pivot_cols.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t col : pivot_cols) is_pivot[col] = true;
    std::vector<std::vector<BigRational>> kernel;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<BigRational> v(cols);
        v[free_col] = 1;
        for (std::size_t t = 0; t < pivot_cols.size(); ++t) {
            v[pivot_cols[t]] = -rows[t][free_col];
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Given exact values of the linear map w -> f(w) on the four units, finds
// rational w0 with f(w0) a nonzero scalar (kernel of the vector part) and a
// unit w1 with f(w1) nonscalar.
struct LinearPivotParts {
    Quaternion w0;
    ExactScalar s;
    Quaternion w1;
    ExactScalar a;
    Quaternion v;
};

std::optional<LinearPivotParts> solve_linear_pivot(
    const std::array<Quaternion, 4>& on_units) {
    for (const Quaternion& f : on_units) {
        if (!f.re.is_rational() || !f.ci.is_rational() ||
            !f.cj.is_rational() || !f.ck.is_rational()) {
            return std::nullopt;
        }
    }
    std::optional<std::size_t> nonscalar_unit;
    for (std::size_t ax = 0; ax < 4; ++ax) {
        if (!ve_part(on_units[ax]).is_zero()) {
            nonscalar_unit = ax;
            break;
        }
    }
    if (!nonscalar_unit) return std::nullopt;

    std::vector<std::vector<BigRational>> rows(4,
                                               std::vector<BigRational>(4));
    for (std::size_t ax = 0; ax < 4; ++ax) {
        rows[0][ax] = on_units[ax].ci.rational_value();
        rows[1][ax] = on_units[ax].cj.rational_value();
        rows[2][ax] = on_units[ax].ck.rational_value();
        rows[3][ax] = on_units[ax].re.rational_value();
    }
    const std::vector<BigRational> scalar_row = rows[3];
    rows.pop_back();
    for (const std::vector<BigRational>& k : nullspace(std::move(rows), 4)) {
        BigRational s_val = 0;
        for (std::size_t ax = 0; ax < 4; ++ax) s_val += scalar_row[ax] * k[ax];
        if (s_val.is_zero()) continue;
        BigInt mult = 1;
        for (const BigRational& x : k) mult = lcm(mult, denominator(x));
        Quaternion w0;
        for (std::size_t ax = 0; ax < 4; ++ax) {
            w0.coord(static_cast<BasisAxis>(ax)) =
                ExactScalar(numerator(k[ax] * BigRational(mult)));
        }
        LinearPivotParts parts;
        parts.w0 = std::move(w0);
        parts.s = ExactScalar(s_val * BigRational(mult));
        parts.w1 = Quaternion::unit(static_cast<BasisAxis>(*nonscalar_unit));
        parts.a = on_units[*nonscalar_unit].re;
        parts.v = ve_part(on_units[*nonscalar_unit]);
        return parts;
    }
    return std::nullopt;
}

constexpr long kPivotEvalBudget = 200000;

// Stage 3: one chain coordinate ranges over integer-combination candidates;
// w0 is solved for exactly through the kernel of the vector part of f.
std::optional<PivotConfig> pivot_from_staged_search(const Polynomial& p,
                                                    const ImageClassML& cls,
                                                    int budget,
                                                    long& evals_left) {
    const std::size_t m = static_cast<std::size_t>(p.num_vars);
    const std::vector<BasisTuple> chain = evidence_chain(cls);
    for (int bound = 1; bound <= budget; ++bound) {
        const std::vector<Quaternion> cands = stage_candidates(bound);
        for (const BasisTuple& anchor : chain) {
            for (std::size_t dpos = 1; dpos <= m; ++dpos) {
                for (const Quaternion& cand : cands) {
                    std::vector<Quaternion> base = embed_tuple(anchor);
                    base[dpos - 1] = cand;
                    for (std::size_t index = 1; index <= m; ++index) {
                        if (index == dpos && m > 1) continue;
                        if ((evals_left -= 4) < 0) {
                            throw SearchBudgetExceededError(
                                "pivot search exceeded its evaluation budget");
                        }
                        std::array<Quaternion, 4> on_units;
                        for (std::size_t ax = 0; ax < 4; ++ax) {
                            base[index - 1] =
                                Quaternion::unit(static_cast<BasisAxis>(ax));
                            on_units[ax] = evaluate(p, base);
                        }
                        const auto parts = solve_linear_pivot(on_units);
                        if (!parts) continue;
                        PivotConfig cfg;
                        cfg.base = base;
                        cfg.base[index - 1] = parts->w0;
                        cfg.index = static_cast<int>(index);
                        cfg.w0 = parts->w0;
                        cfg.w1 = parts->w1;
                        cfg.s = parts->s;
                        cfg.a = parts->a;
                        cfg.v = parts->v;
                        if (pivot_valid(p, cfg)) return cfg;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

PivotConfig find_mixed_pivot(const Polynomial& p, const ImageClassML& cls,
                             int budget) {
    if (cls.verdict != MLVerdict::FULL_H || !cls.scalar_evidence ||
        !cls.vector_evidence) {
        throw ClassMismatchError(
            std::string("pivot search needs verdict FULL_H, got ") +
            to_string(cls.verdict));
    }
    if (auto cfg = pivot_from_chain(p, cls)) {
        if (pivot_valid(p, *cfg)) return *cfg;
    }
    if (auto cfg = pivot_from_basis_pairs(p)) {
        if (pivot_valid(p, *cfg)) return *cfg;
    }
    long evals_left = kPivotEvalBudget;
    if (auto cfg = pivot_from_staged_search(p, cls, budget, evals_left)) {
        return *cfg;
    }
    throw SearchBudgetExceededError(
        "pivot search exhausted all stages (budget " + std::to_string(budget) +
        ")");
}

WitnessResult witness_full(const Polynomial& p, const ImageClassML& cls,
                           const Quaternion& t) {
    if (cls.verdict != MLVerdict::FULL_H) {
        throw ClassMismatchError(
            std::string("full witness needs verdict FULL_H, got ") +
            to_string(cls.verdict));
    }
    const PivotConfig pivot = find_mixed_pivot(p, cls);
    const std::size_t at = static_cast<std::size_t>(pivot.index - 1);

    WitnessResult out;
    out.target = t;
    out.args = pivot.base;
    out.trace.push_back("pivot: index " + std::to_string(pivot.index) +
                        ", f(" + pivot.w0.str() + ") = " + pivot.s.str() +
                        ", f(" + pivot.w1.str() + ") = " +
                        q_add(Quaternion(pivot.a), pivot.v).str());

    const Quaternion tv = ve_part(t);
    if (tv.is_zero()) {
        const ExactScalar x = re_part(t) / pivot.s;
        out.args[at] = q_scale(x, pivot.w0);
        out.trace.push_back("scalar target: coordinate " +
                            std::to_string(pivot.index) + " = x*w0 with x = " +
                            x.str());
    } else {
        const ConjugationMove move = solve_vector_conjugation(pivot.v, tv);
        const ExactScalar& y = move.lambda;
        const ExactScalar x = (re_part(t) - y * pivot.a) / pivot.s;
        out.args[at] = q_add(q_scale(x, pivot.w0), q_scale(y, pivot.w1));
        out.trace.push_back("blend: coordinate " + std::to_string(pivot.index) +
                            " = x*w0 + y*w1 with x = " + x.str() + ", y = " +
                            y.str());
        for (Quaternion& arg : out.args) {
            arg = conjugate_by(arg, move.h);
        }
        out.trace.push_back("conjugated all coordinates by h = " +
                            move.h.str());
    }
    out.verified = verify_witness(p, out.args, out.target);
    return out;
}

}  // namespace quatimage
