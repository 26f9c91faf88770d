#include "json_io.hpp"

namespace quatimage::cli {

Json to_json(const BigRational& r) {
    return r.str();
}

Json to_json(const ExactScalar& s) {
    if (s.is_rational()) {
        return s.rational_value().str();
    }
    Json j;
    j["a"] = to_json(s.ext_a());
    j["b"] = to_json(s.ext_b());
    j["n"] = to_json(s.ext_n());
    return j;
}

Json to_json(const Quaternion& q) {
    Json j;
    j["re"] = to_json(q.re);
    j["i"] = to_json(q.ci);
    j["j"] = to_json(q.cj);
    j["k"] = to_json(q.ck);
    return j;
}

Json to_json(const std::vector<BasisAxis>& tuple) {
    Json j = Json::array();
    for (BasisAxis a : tuple) {
        j.push_back(std::string(1, axis_char(a)));
    }
    return j;
}

Json to_json(const BasisValue& v) {
    Json j;
    j["coeff"] = to_json(v.coeff);
    j["axis"] = std::string(1, axis_char(v.axis));
    return j;
}

Json to_json(const ImageClassML& cls) {
    Json j;
    j["class"] = to_string(cls.verdict);
    if (cls.scalar_evidence) {
        Json e;
        e["tuple"] = to_json(cls.scalar_evidence->tuple);
        e["value"] = to_json(cls.scalar_evidence->value);
        j["scalar_evidence"] = e;
    } else {
        j["scalar_evidence"] = nullptr;
    }
    if (cls.vector_evidence) {
        Json e;
        e["tuple"] = to_json(cls.vector_evidence->tuple);
        e["value"] = to_json(cls.vector_evidence->value);
        j["vector_evidence"] = e;
    } else {
        j["vector_evidence"] = nullptr;
    }
    return j;
}

Json to_json(const WitnessResult& w) {
    Json j;
    j["verified"] = w.verified;
    j["target"] = to_json(w.target);
    Json args = Json::array();
    for (const Quaternion& q : w.args) {
        args.push_back(to_json(q));
    }
    j["args"] = args;
    j["trace"] = w.trace;
    return j;
}

Json to_json(const SampleReport& r) {
    Json j;
    j["verdict"] = to_string(r.verdict);
    j["n"] = r.n;
    j["seed"] = r.seed;
    j["bound"] = r.bound;
    Json counts;
    counts["zero"] = r.counts.zero;
    counts["positive_scalar"] = r.counts.positive_scalar;
    counts["negative_scalar"] = r.counts.negative_scalar;
    counts["vector"] = r.counts.vector;
    counts["mixed"] = r.counts.mixed;
    j["counts"] = counts;
    j["nonpositive_re"] = r.nonpositive_re;
    j["nonnegative_re"] = r.nonnegative_re;
    j["notes"] = r.notes;
    return j;
}

Json to_json(const WeightVector& w) {
    Json j;
    Json ws = Json::array();
    for (const BigInt& wi : w.weights) {
        ws.push_back(wi.str());
    }
    j["weights"] = ws;
    j["degree"] = w.degree.str();
    return j;
}

Json to_json(const WeightAnalysis& a) {
    Json j;
    j["has_nonzero_degree"] = a.has_nonzero_degree;
    if (a.certificate) {
        j["certificate"] = to_json(*a.certificate);
    } else {
        j["certificate"] = nullptr;
    }
    Json basis = Json::array();
    for (const WeightVector& w : a.basis) {
        basis.push_back(to_json(w));
    }
    j["basis"] = basis;
    return j;
}

Json to_json(const ComplexScalar& z) {
    Json j;
    j["re"] = to_json(z.re);
    j["im"] = to_json(z.im);
    return j;
}

Json to_json(const ComplexMatrix2& m) {
    return Json::array({Json::array({to_json(m.a11), to_json(m.a12)}),
                        Json::array({to_json(m.a21), to_json(m.a22)})});
}

namespace {

const char* check_name(CorpusCheck c) {
    switch (c) {
        case CorpusCheck::MULTILINEAR_CLASS: return "multilinear_class";
        case CorpusCheck::SAMPLER: return "sampler";
        case CorpusCheck::RATIO_PROPERTY: return "ratio_property";
    }
    return "?";
}

}  // namespace

Json to_json(const EigenPair& e) {
    Json j;
    j["alpha"] = to_json(e.alpha);
    j["n_sq"] = to_json(e.n_sq);
    return j;
}

Json to_json(const CorpusEntry& e) {
    Json j;
    j["name"] = e.name;
    j["poly"] = e.text;
    j["check"] = check_name(e.check);
    j["expected_class"] =
        e.expected_class ? Json(to_string(*e.expected_class)) : Json(nullptr);
    j["expected_sample"] =
        e.expected_sample ? Json(to_string(*e.expected_sample)) : Json(nullptr);
    j["expect_nonpositive_re"] = e.expect_nonpositive_re;
    if (!e.ratio_set.empty()) {
        Json s = Json::array();
        for (const RatioPoint& c : e.ratio_set) {
            Json p;
            p["a"] = to_json(c.a);
            p["b"] = to_json(c.b);
            s.push_back(p);
        }
        j["ratio_set"] = s;
    }
    j["note"] = e.note;
    return j;
}

Json to_json(const CorpusRunResult& r) {
    Json j;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    return j;
}

Json error_json(const Error& e) {
    const char* kind = "domain";
    switch (e.kind()) {
        case ErrorKind::Parse: kind = "parse"; break;
        case ErrorKind::ClassMismatch: kind = "class_mismatch"; break;
        case ErrorKind::Budget: kind = "budget"; break;
        case ErrorKind::Domain: kind = "domain"; break;
    }
    return error_json(e.type(), kind, e.what());
}

Json error_json(const std::string& type, const std::string& kind,
                const std::string& message) {
    Json inner;
    inner["type"] = type;
    inner["kind"] = kind;
    inner["message"] = message;
    Json j;
    j["error"] = inner;
    return j;
}

}  // namespace quatimage::cli
