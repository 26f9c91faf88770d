#include "quatimage/corpus.hpp"

namespace quatimage {

namespace {

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;

    CorpusEntry s4;
    s4.name = "s4";
    s4.text = "s4";
    s4.check = CorpusCheck::MULTILINEAR_CLASS;
    s4.expected_class = MLVerdict::ZERO_PI;
    s4.expected_sample = SampleVerdict::ZERO;
    s4.note =
        "Amitsur-Levitzki: the standard polynomial s4 vanishes on 2x2 "
        "matrices, hence on the quaternions.";
    out.push_back(std::move(s4));

    CorpusEntry lie;
    lie.name = "lie-bracket";
    lie.text = "[x1,x2]";
    lie.check = CorpusCheck::MULTILINEAR_CLASS;
    lie.expected_class = MLVerdict::VECTORS_V;
    lie.expected_sample = SampleVerdict::V_ONLY;
    lie.note =
        "Commutators of quaternions are vectors, and every vector arises as "
        "a commutator value.";
    out.push_back(std::move(lie));

    CorpusEntry central;
    central.name = "sym-bracket-product";
    central.text = "[x1,x2][x3,x4]+[x3,x4][x1,x2]";
    central.check = CorpusCheck::MULTILINEAR_CLASS;
    central.expected_class = MLVerdict::SCALARS_R;
    central.expected_sample = SampleVerdict::R_ALL;
    central.note =
        "Vectors square to scalars, so this symmetrized product of two "
        "commutators is a nonzero central polynomial.";
    out.push_back(std::move(central));

    CorpusEntry identity;
    identity.name = "identity-map";
    identity.text = "x1";
    identity.check = CorpusCheck::MULTILINEAR_CLASS;
    identity.expected_class = MLVerdict::FULL_H;
    identity.expected_sample = SampleVerdict::DENSE_H;
    identity.note = "The identity polynomial attains every quaternion.";
    out.push_back(std::move(identity));

    CorpusEntry bsq;
    bsq.name = "bracket-square";
    bsq.text = "[x1,x2]^2";
    bsq.check = CorpusCheck::SAMPLER;
    bsq.expected_sample = SampleVerdict::R_NONPOS;
    bsq.note =
        "A commutator is a vector and (ai+bj+ck)^2 = -(a^2+b^2+c^2), so "
        "values are nonpositive reals.";
    out.push_back(std::move(bsq));

    CorpusEntry bsq_neg;
    bsq_neg.name = "bracket-square-neg";
    bsq_neg.text = "-[x1,x2]^2";
    bsq_neg.check = CorpusCheck::SAMPLER;
    bsq_neg.expected_sample = SampleVerdict::R_NONNEG;
    bsq_neg.note = "Negation of bracket-square; values are nonnegative reals.";
    out.push_back(std::move(bsq_neg));

    CorpusEntry halfplane;
    halfplane.name = "bracket-square-plus-square-bracket";
    halfplane.text = "[x1,x2]^2+[x1^2,x2^2]";
    halfplane.check = CorpusCheck::SAMPLER;
    halfplane.expected_sample = SampleVerdict::DENSE_H;
    halfplane.expect_nonpositive_re = true;
    halfplane.note =
        "Sum of a nonpositive-scalar-valued term and a vector-valued term, "
        "so every value has nonpositive real part.";
    out.push_back(std::move(halfplane));

    CorpusEntry except_scalars;
    except_scalars.name = "bracket-square-times-x";
    except_scalars.text = "[x1,x2]^2*x1";
    except_scalars.check = CorpusCheck::SAMPLER;
    except_scalars.expected_sample = SampleVerdict::DENSE_H;
    except_scalars.note =
        "Vanishes whenever the first argument is scalar yet is not "
        "identically zero; its image avoids the nonzero scalars, a set "
        "outside the sampler's six-way taxonomy, so the sampler can only "
        "report DENSE_H evidence.";
    out.push_back(std::move(except_scalars));

    CorpusEntry ratio;
    ratio.name = "ratio-avoiding";
    ratio.text = "x1";
    ratio.check = CorpusCheck::RATIO_PROPERTY;
    ratio.ratio_set = {RatioPoint{BigRational(0), BigRational(1)},
                       RatioPoint{BigRational(1), BigRational(1)},
                       RatioPoint{BigRational(2), BigRational(1)}};
    ratio.note =
        "Scaling x by real factors that vanish exactly on prescribed "
        "eigenvalue ratios keeps every nonzero value's ratio outside the "
        "set.";
    out.push_back(std::move(ratio));

    return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build_corpus();
    return entries;
}

const CorpusEntry* find_corpus_entry(const std::string& name) {
    for (const CorpusEntry& e : corpus()) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

namespace {

CorpusRunResult run_entry(const CorpusEntry& e, long long n,
                          std::uint64_t seed, long long bound) {
    CorpusRunResult r;
    r.name = e.name;
    const Polynomial p = parse(e.text);

    if (e.check == CorpusCheck::MULTILINEAR_CLASS) {
        const ImageClassML cls = classify(p);
        const SampleReport report = sample_image(p, n, seed, bound);
        const bool class_ok = cls.verdict == *e.expected_class;
        const bool sample_ok = report.verdict == *e.expected_sample;
        r.passed = class_ok && sample_ok;
        r.detail = std::string("class ") + to_string(cls.verdict) +
                   " (expected " + to_string(*e.expected_class) +
                   "), sample " + to_string(report.verdict) + " (expected " +
                   to_string(*e.expected_sample) + ")";
        return r;
    }

    if (e.check == CorpusCheck::SAMPLER) {
        const SampleReport report = sample_image(p, n, seed, bound);
        bool ok = report.verdict == *e.expected_sample;
        r.detail = std::string("sample ") + to_string(report.verdict) +
                   " (expected " + to_string(*e.expected_sample) + ")";
        if (e.expect_nonpositive_re) {
            const bool re_ok = report.nonpositive_re == report.n;
            ok = ok && re_ok;
            r.detail += re_ok ? ", all real parts <= 0"
                              : ", some real part > 0";
        }
        r.passed = ok;
        return r;
    }

    // RATIO_PROPERTY: every scaled value is zero or avoids the ratio set.
    long long checked = 0;
    bool ok = true;
    for (long long t = 0; t < 200 && ok; ++t) {
        SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(t));
        const Quaternion q = random_quaternion(rng, bound);
        const Quaternion value = ratio_avoiding_eval(q, e.ratio_set);
        if (value.is_zero()) continue;
        for (const RatioPoint& c : e.ratio_set) {
            if (ratio_factor(value, c).is_zero()) {
                ok = false;
                break;
            }
        }
        ++checked;
    }
    r.passed = ok;
    r.detail = ok ? std::to_string(checked) +
                        " nonzero draws all avoided the ratio set"
                  : "a draw landed on an excluded eigenvalue ratio";
    return r;
}

}  // namespace

std::vector<CorpusRunResult> run_corpus(long long n, std::uint64_t seed,
                                        long long bound) {
    std::vector<CorpusRunResult> results;
    results.reserve(corpus().size());
    for (const CorpusEntry& e : corpus()) {
        results.push_back(run_entry(e, n, seed, bound));
    }
    return results;
}

}  // namespace quatimage
