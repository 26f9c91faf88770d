#include "quatimage/homogeneous.hpp"

#include <stdexcept>

namespace quatimage {

const char* to_string(SampleVerdict v) {
    switch (v) {
        case SampleVerdict::ZERO: return "ZERO";
        case SampleVerdict::R_ALL: return "R_ALL";
        case SampleVerdict::R_NONNEG: return "R_NONNEG";
        case SampleVerdict::R_NONPOS: return "R_NONPOS";
        case SampleVerdict::V_ONLY: return "V_ONLY";
        case SampleVerdict::DENSE_H: return "DENSE_H";
    }
    throw std::logic_error("invalid SampleVerdict");
}

SampleReport sample_image(const Polynomial& p, long long n, std::uint64_t seed,
                          long long bound) {
    SampleReport report;
    report.n = n;
    report.seed = seed;
    report.bound = bound;
    const std::size_t m = static_cast<std::size_t>(p.num_vars);

    for (long long t = 0; t < n; ++t) {
        SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(t));
        std::vector<Quaternion> args;
        args.reserve(m);
        for (std::size_t var = 0; var < m; ++var) {
            args.push_back(random_quaternion(rng, bound));
        }
        const Quaternion value = evaluate(p, args);
        const int re_sign = value.re.sign();
        if (re_sign <= 0) ++report.nonpositive_re;
        if (re_sign >= 0) ++report.nonnegative_re;
        if (value.is_zero()) {
            ++report.counts.zero;
        } else if (value.is_scalar()) {
            if (re_sign > 0) {
                ++report.counts.positive_scalar;
            } else {
                ++report.counts.negative_scalar;
            }
        } else if (value.is_vector()) {
            ++report.counts.vector;
        } else {
            ++report.counts.mixed;
        }
    }

    const SampleCounts& c = report.counts;
    const bool any_scalar = c.positive_scalar > 0 || c.negative_scalar > 0;
    if (c.zero == n) {
        report.verdict = SampleVerdict::ZERO;
        report.notes.push_back("every sample evaluated to 0");
    } else if (c.vector + c.zero == n) {
        report.verdict = SampleVerdict::V_ONLY;
        report.notes.push_back("every sample was a vector (or 0)");
    } else if (any_scalar && c.vector == 0 && c.mixed == 0) {
        if (c.positive_scalar > 0 && c.negative_scalar > 0) {
            report.verdict = SampleVerdict::R_ALL;
            report.notes.push_back("scalar samples of both signs");
        } else if (c.positive_scalar > 0) {
            report.verdict = SampleVerdict::R_NONNEG;
            report.notes.push_back(
                "scalar samples, all >= 0, at least one > 0");
        } else {
            report.verdict = SampleVerdict::R_NONPOS;
            report.notes.push_back(
                "scalar samples, all <= 0, at least one < 0");
        }
    } else {
        report.verdict = SampleVerdict::DENSE_H;
        report.notes.push_back(
            "mixed sample categories: consistent with a Zariski dense image");
        if (report.nonpositive_re == n) {
            report.notes.push_back("all sampled real parts <= 0");
        } else if (report.nonnegative_re == n) {
            report.notes.push_back("all sampled real parts >= 0");
        }
    }
    report.notes.push_back("verdict is sampling evidence, not a proof");
    return report;
}

bool check_cone_identity(const Polynomial& p, const WeightVector& w,
                         long long trials, std::uint64_t seed,
                         long long bound) {
    if (static_cast<int>(w.weights.size()) != p.num_vars) return false;
    const std::size_t m = static_cast<std::size_t>(p.num_vars);
    for (long long t = 0; t < trials; ++t) {
        SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(t));
        BigRational c = random_rational(rng, bound);
        while (c.is_zero()) c = random_rational(rng, bound);
        const ExactScalar cs{c};
        std::vector<Quaternion> args;
        std::vector<Quaternion> scaled;
        args.reserve(m);
        scaled.reserve(m);
        for (std::size_t var = 0; var < m; ++var) {
            Quaternion q = random_quaternion(rng, bound);
            const long long wj = w.weights[var].convert_to<long long>();
            scaled.push_back(q_scale(pow(cs, wj), q));
            args.push_back(std::move(q));
        }
        const long long d = w.degree.convert_to<long long>();
        if (evaluate(p, scaled) != q_scale(pow(cs, d), evaluate(p, args))) {
            return false;
        }
    }
    return true;
}

ComplexMatrix2 m2_add(const ComplexMatrix2& x, const ComplexMatrix2& y) {
    return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
}

ComplexMatrix2 m2_mul(const ComplexMatrix2& x, const ComplexMatrix2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

ComplexScalar m2_trace(const ComplexMatrix2& x) { return x.a11 + x.a22; }

ComplexScalar m2_det(const ComplexMatrix2& x) {
    return x.a11 * x.a22 - x.a12 * x.a21;
}

ComplexMatrix2 phi(const Quaternion& q, const ComplexScalar& z) {
    const ComplexScalar a11{q.re, q.ci};
    const ComplexScalar a12{q.cj, q.ck};
    const ComplexScalar a21{-q.cj, q.ck};
    const ComplexScalar a22{q.re, -q.ci};
    return {z * a11, z * a12, z * a21, z * a22};
}

EigenPair eigenvalues(const Quaternion& q) {
    return EigenPair{re_part(q), norm_sq(ve_part(q))};
}

ExactScalar ratio_factor(const Quaternion& q, const RatioPoint& c) {
    if (c.a.is_zero() && c.b.is_zero()) {
        throw InvalidRatioPointError("ratio point (0, 0) is not on the circle");
    }
    const EigenPair eig = eigenvalues(q);
    const ExactScalar ac{BigRational(c.a)};
    const ExactScalar bc{BigRational(c.b)};
    return ExactScalar(4) * (ac * ac * eig.n_sq - bc * bc * eig.alpha * eig.alpha);
}

Quaternion ratio_avoiding_eval(const Quaternion& q, const RatioSet& s) {
    ExactScalar factor(1);
    for (const RatioPoint& c : s) {
        factor = factor * ratio_factor(q, c);
    }
    return q_scale(factor, q);
}

}  // namespace quatimage
