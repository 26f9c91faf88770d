#pragma once

#include <json.hpp>

#include <vector>

#include "quatimage/classify.hpp"
#include "quatimage/corpus.hpp"
#include "quatimage/errors.hpp"
#include "quatimage/homogeneous.hpp"
#include "quatimage/polynomial.hpp"
#include "quatimage/witness.hpp"

namespace quatimage::cli {

/// All CLI output uses ordered_json: field order is insertion order, so
/// identical invocations serialize byte-identically.
using Json = nlohmann::ordered_json;

/// Rational as decimal text "p" or "p/q" (arbitrary precision survives).
Json to_json(const BigRational& r);
/// Rational scalars as text, extensions as nested {a, b, n}.
Json to_json(const ExactScalar& s);
/// {re, i, j, k}.
Json to_json(const Quaternion& q);
/// Array of "e" / "i" / "j" / "k".
Json to_json(const std::vector<BasisAxis>& tuple);
/// {coeff, axis}.
Json to_json(const BasisValue& v);
/// {class, scalar_evidence, vector_evidence}.
Json to_json(const ImageClassML& cls);
/// {verified, target, args, trace}.
Json to_json(const WitnessResult& w);
/// {verdict, n, seed, bound, counts, nonpositive_re, nonnegative_re, notes}.
Json to_json(const SampleReport& r);
/// {weights, degree}, integers as text.
Json to_json(const WeightVector& w);
/// {has_nonzero_degree, certificate, basis}.
Json to_json(const WeightAnalysis& a);
/// {re, im}.
Json to_json(const ComplexScalar& z);
/// 2x2 nested array, row major.
Json to_json(const ComplexMatrix2& m);
/// {alpha, n_sq}.
Json to_json(const EigenPair& e);
/// One corpus table row.
Json to_json(const CorpusEntry& e);
/// {name, passed, detail}.
Json to_json(const CorpusRunResult& r);

/// {error: {type, kind, message}}; the stderr payload.
Json error_json(const Error& e);
Json error_json(const std::string& type, const std::string& kind,
                const std::string& message);

}  // namespace quatimage::cli
