// quatimage: exact polynomial image analysis on the Hamilton quaternions.
//
// One subcommand per invocation; JSON on stdout, human text and error JSON
// on stderr. Exit codes: 0 success, 1 internal or domain failure, 2 parse or
// usage error, 3 target outside the image class, 4 budget or cap exceeded.

#include <CLI11.hpp>

#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "quatimage/classify.hpp"
#include "quatimage/corpus.hpp"
#include "quatimage/errors.hpp"
#include "quatimage/homogeneous.hpp"
#include "quatimage/polynomial.hpp"
#include "quatimage/witness.hpp"

namespace {

using namespace quatimage;
using cli::Json;

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return 2;
        case ErrorKind::ClassMismatch: return 3;
        case ErrorKind::Budget: return 4;
        case ErrorKind::Domain: return 1;
    }
    return 1;
}

/// Classifier cap, overridable via QUATIMAGE_ARITY_CAP.
int arity_cap() {
    const char* raw = std::getenv("QUATIMAGE_ARITY_CAP");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultArityCap;
    }
    const std::string text(raw);
    bool digits = !text.empty();
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
    }
    int value = 0;
    if (digits) {
        try {
            value = std::stoi(text);
        } catch (const std::exception&) {
            digits = false;
        }
    }
    if (!digits || value < 1) {
        throw Error(ErrorKind::Parse, "InvalidEnvironment",
                    "QUATIMAGE_ARITY_CAP must be a positive integer, got \"" +
                        text + "\"");
    }
    return value;
}

/// Literal grammar: quat := [sign] term ([sign] term)* ;
/// term := rational ['i'|'j'|'k'] | 'i'|'j'|'k' ; rational := nat ['/' nat].
/// A bare unit means coefficient 1; repeated components accumulate.
Quaternion parse_quaternion_literal(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    auto at_digit = [&] {
        return pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]));
    };
    auto read_nat = [&]() -> BigInt {
        const std::size_t start = pos;
        while (at_digit()) ++pos;
        if (pos == start) {
            throw SyntaxError("expected a number", start);
        }
        return BigInt(text.substr(start, pos - start));
    };

    std::array<BigRational, 4> comp;
    skip_ws();
    if (pos == text.size()) {
        throw SyntaxError("empty quaternion literal", 0);
    }
    while (true) {
        skip_ws();
        int sgn = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sgn = (text[pos] == '-') ? -1 : 1;
            ++pos;
            skip_ws();
        }
        BigRational mag;
        bool have_coeff = false;
        if (at_digit()) {
            const BigInt num = read_nat();
            BigInt den = 1;
            if (pos < text.size() && text[pos] == '/') {
                const std::size_t slash = pos;
                ++pos;
                den = read_nat();
                if (den == 0) {
                    throw SyntaxError("zero denominator", slash + 1);
                }
            }
            mag = BigRational(num, den);
            have_coeff = true;
        }
        int axis = 0;
        if (pos < text.size() &&
            (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
            axis = (text[pos] == 'i') ? 1 : (text[pos] == 'j') ? 2 : 3;
            ++pos;
            if (!have_coeff) mag = 1;
        } else if (!have_coeff) {
            throw SyntaxError("expected a rational component or unit i/j/k",
                              pos);
        }
        comp[static_cast<std::size_t>(axis)] += mag * sgn;
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '+' && text[pos] != '-') {
            throw SyntaxError("expected '+' or '-' before the next term", pos);
        }
    }
    return Quaternion(ExactScalar(comp[0]), ExactScalar(comp[1]),
                      ExactScalar(comp[2]), ExactScalar(comp[3]));
}

/// Signed "p" or "p/q"; the whole string must match.
BigRational parse_rational_literal(const std::string& text) {
    std::size_t pos = 0;
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    int sgn = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        sgn = (text[pos] == '-') ? -1 : 1;
        ++pos;
    }
    const std::size_t num_start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos == num_start) {
        throw SyntaxError("expected a rational number", pos);
    }
    const BigInt num(text.substr(num_start, pos - num_start));
    BigInt den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const std::size_t den_start = pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == den_start) {
            throw SyntaxError("expected a denominator", pos);
        }
        den = BigInt(text.substr(den_start, pos - den_start));
        if (den == 0) {
            throw SyntaxError("zero denominator", den_start);
        }
    }
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos != text.size()) {
        throw SyntaxError("trailing characters after rational", pos);
    }
    return BigRational(num * sgn, den);
}

void emit(const Json& j) {
    std::cout << j.dump(2) << "\n";
}

Json run_classify(const std::string& poly_text) {
    const Polynomial p = parse(poly_text);
    return cli::to_json(classify(p, arity_cap()));
}

Json run_witness(const std::string& poly_text, const std::string& target_text) {
    const Polynomial p = parse(poly_text);
    const Quaternion t = parse_quaternion_literal(target_text);
    const ImageClassML cls = classify(p, arity_cap());
    WitnessResult res;
    switch (cls.verdict) {
        case MLVerdict::ZERO_PI:
            if (!t.is_zero()) {
                throw ClassMismatchError("the image is {0}, target " + t.str() +
                                         " is unreachable");
            }
            res.target = t;
            res.args.assign(static_cast<std::size_t>(p.num_vars),
                            Quaternion::zero());
            res.trace.push_back("identity: every substitution evaluates to 0");
            res.verified = verify_witness(p, res.args, t);
            break;
        case MLVerdict::SCALARS_R:
            if (!t.is_scalar()) {
                throw ClassMismatchError("the image is R, target " + t.str() +
                                         " is not a scalar");
            }
            res = witness_scalar(p, cls, t.re);
            break;
        case MLVerdict::VECTORS_V:
            if (!t.is_vector()) {
                throw ClassMismatchError("the image is V, target " + t.str() +
                                         " is not a vector");
            }
            res = witness_vector(p, cls, t);
            break;
        case MLVerdict::FULL_H:
            res = witness_full(p, cls, t);
            break;
    }
    Json j;
    j["class"] = to_string(cls.verdict);
    j.update(cli::to_json(res));
    return j;
}

Json run_sample(const std::string& poly_text, long long n, std::uint64_t seed,
                long long bound) {
    const Polynomial p = parse(poly_text);
    return cli::to_json(sample_image(p, n, seed, bound));
}

Json run_weights(const std::string& poly_text, long long check_trials,
                 std::uint64_t seed, long long bound) {
    const Polynomial p = parse(poly_text);
    const WeightAnalysis analysis = infer_weights(p);
    Json j;
    j["num_vars"] = p.num_vars;
    j.update(cli::to_json(analysis));
    if (check_trials > 0) {
        if (analysis.certificate) {
            Json c;
            c["trials"] = check_trials;
            c["seed"] = seed;
            c["bound"] = bound;
            c["holds"] = check_cone_identity(p, *analysis.certificate,
                                             check_trials, seed, bound);
            j["cone_identity"] = c;
        } else {
            j["cone_identity"] = nullptr;
        }
    }
    return j;
}

Json run_corpus_cmd(bool run, long long n, std::uint64_t seed, long long bound,
                    bool& all_passed) {
    Json j;
    Json entries = Json::array();
    for (const CorpusEntry& e : corpus()) {
        entries.push_back(cli::to_json(e));
    }
    j["entries"] = entries;
    all_passed = true;
    if (run) {
        j["n"] = n;
        j["seed"] = seed;
        j["bound"] = bound;
        Json results = Json::array();
        for (const CorpusRunResult& r : run_corpus(n, seed, bound)) {
            results.push_back(cli::to_json(r));
            all_passed = all_passed && r.passed;
        }
        j["results"] = results;
        j["all_passed"] = all_passed;
    }
    return j;
}

Json run_phi(const std::string& quat_text, const std::string& zre_text,
             const std::string& zim_text) {
    const Quaternion q = parse_quaternion_literal(quat_text);
    const ComplexScalar z{ExactScalar(parse_rational_literal(zre_text)),
                          ExactScalar(parse_rational_literal(zim_text))};
    const ComplexMatrix2 m = phi(q, z);
    Json j;
    j["matrix"] = cli::to_json(m);
    j["trace"] = cli::to_json(m2_trace(m));
    j["det"] = cli::to_json(m2_det(m));
    j["eigen"] = cli::to_json(eigenvalues(q));
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "quatimage: exact images of noncommutative polynomials on the "
        "Hamilton quaternions"};
    app.require_subcommand(1);

    std::string poly_text;
    std::string target_text;
    std::string quat_text;
    std::string zre_text = "1";
    std::string zim_text = "0";
    long long n = 1000;
    std::uint64_t seed = 42;
    long long bound = kDefaultSampleBound;
    long long check_trials = 0;
    bool run_flag = false;
    int rc = 0;

    CLI::App* c_classify = app.add_subcommand(
        "classify",
        "Decide the image class ZERO_PI / SCALARS_R / VECTORS_V / FULL_H of a "
        "multilinear polynomial");
    c_classify->add_option("-p,--poly", poly_text, "polynomial expression")
        ->required();
    c_classify->callback([&] { emit(run_classify(poly_text)); });

    CLI::App* c_witness = app.add_subcommand(
        "witness", "Construct an exact preimage of a target value");
    c_witness->add_option("-p,--poly", poly_text, "polynomial expression")
        ->required();
    c_witness
        ->add_option("-t,--target", target_text,
                     "target quaternion, e.g. \"3+4i\" or \"1/2-j+2k\"")
        ->required();
    c_witness->callback([&] { emit(run_witness(poly_text, target_text)); });

    CLI::App* c_sample = app.add_subcommand(
        "sample", "Classify an image by seeded exact sampling");
    c_sample->add_option("-p,--poly", poly_text, "polynomial expression")
        ->required();
    c_sample->add_option("-n,--samples", n, "sample count")
        ->check(CLI::PositiveNumber);
    c_sample->add_option("--seed", seed, "PRNG seed");
    c_sample->add_option("--bound", bound, "coordinate bound")
        ->check(CLI::PositiveNumber);
    c_sample->callback([&] { emit(run_sample(poly_text, n, seed, bound)); });

    CLI::App* c_weights = app.add_subcommand(
        "weights", "Infer semihomogeneity weight certificates");
    c_weights->add_option("-p,--poly", poly_text, "polynomial expression")
        ->required();
    c_weights->add_option("--check", check_trials,
                          "verify the cone identity on this many draws")
        ->check(CLI::NonNegativeNumber);
    c_weights->add_option("--seed", seed, "PRNG seed");
    c_weights->add_option("--bound", bound, "coordinate bound")
        ->check(CLI::PositiveNumber);
    c_weights->callback(
        [&] { emit(run_weights(poly_text, check_trials, seed, bound)); });

    CLI::App* c_corpus =
        app.add_subcommand("corpus", "List or run the builtin golden corpus");
    c_corpus->add_flag("--run", run_flag, "run every entry's check");
    c_corpus->add_option("-n,--samples", n, "sample count for --run")
        ->check(CLI::PositiveNumber);
    c_corpus->add_option("--seed", seed, "PRNG seed for --run");
    c_corpus->add_option("--bound", bound, "coordinate bound for --run")
        ->check(CLI::PositiveNumber);
    c_corpus->callback([&] {
        bool all_passed = true;
        emit(run_corpus_cmd(run_flag, n, seed, bound, all_passed));
        if (run_flag && !all_passed) rc = 1;
    });

    CLI::App* c_phi = app.add_subcommand(
        "phi", "Embed a quaternion into M_2(C), with trace and determinant");
    c_phi->add_option("-q,--quat", quat_text, "quaternion literal")
        ->required();
    c_phi->add_option("--zre", zre_text, "real part of the complex scale z");
    c_phi->add_option("--zim", zim_text,
                      "imaginary part of the complex scale z");
    c_phi->callback([&] { emit(run_phi(quat_text, zre_text, zim_text)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, std::cerr, std::cerr);
    } catch (const CLI::ParseError& e) {
        std::cerr << cli::error_json("Usage", "parse", e.what()).dump(2)
                  << "\n";
        return 2;
    } catch (const quatimage::Error& e) {
        std::cerr << cli::error_json(e).dump(2) << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << cli::error_json("Internal", "internal", e.what()).dump(2)
                  << "\n";
        return 1;
    }
    return rc;
}
