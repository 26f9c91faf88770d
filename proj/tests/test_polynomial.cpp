#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace quatimage;
using qtest::random_args;
using qtest::random_multilinear;

namespace {

Quaternion unit(BasisAxis a) { return Quaternion::unit(a); }

}  // namespace

TEST_CASE("parse commutator") {
    const Polynomial p = parse("[x1,x2]");
    REQUIRE(p.monomials.size() == 2);
    CHECK(p.num_vars == 2);
    CHECK(p == poly_sub(parse("x1*x2"), parse("x2*x1")));
}

TEST_CASE("parse commutator square") {
    const Polynomial p = parse("[x1,x2]^2");
    REQUIRE(p.monomials.size() == 4);
    // x1x2x1x2 - x1x2x2x1 - x2x1x1x2 + x2x1x2x1.
    BigRational sum = 0;
    for (const Monomial& m : p.monomials) {
        CHECK((m.coeff == 1 || m.coeff == -1));
        CHECK(m.word.size() == 4);
        sum += m.coeff;
    }
    CHECK(sum == 0);
    CHECK(p == poly_mul(parse("[x1,x2]"), parse("[x1,x2]")));
}

TEST_CASE("parse standard polynomial builtin") {
    const Polynomial p = parse("s4");
    REQUIRE(p.monomials.size() == 24);
    CHECK(p.num_vars == 4);
    BigRational sum = 0;
    for (const Monomial& m : p.monomials) {
        CHECK((m.coeff == 1 || m.coeff == -1));
        sum += m.coeff;
    }
    CHECK(sum == 0);
    CHECK(p == std_poly(4));
    CHECK(parse("s2") == parse("[x1,x2]"));
}

TEST_CASE("parse sign, constants, juxtaposition") {
    CHECK(parse("-x1+x2") == poly_sub(parse("x2"), parse("x1")));
    CHECK(parse("x1x2") == parse("x1*x2"));
    CHECK(parse("2x1") == poly_scale(BigRational(2), parse("x1")));
    CHECK(parse("3/2") ==
          canonicalize(Polynomial{0, {Monomial{BigRational(3, 2), {}}}}));
    CHECK(parse("x1 - x1").is_zero());
    CHECK(parse("(x1+x2)^2") ==
          parse("x1x1 + x1x2 + x2x1 + x2x2"));
    CHECK(parse("1/2[x1,x2]") ==
          poly_scale(BigRational(1, 2), parse("[x1,x2]")));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse(""), SyntaxError);
    CHECK_THROWS_AS(parse("(x1"), SyntaxError);
    CHECK_THROWS_AS(parse("x1 +"), SyntaxError);
    CHECK_THROWS_AS(parse("x0"), VariableIndexOutOfRangeError);
    CHECK_THROWS_AS(parse("t3"), UnknownBuiltinError);
    CHECK_THROWS_AS(parse("s7"), CapExceededError);
    bool threw = false;
    try {
        parse("x1 ? x2");
    } catch (const SyntaxError& e) {
        threw = true;
        CHECK(e.position() == 3);
    }
    CHECK(threw);
}

TEST_CASE("to_string round trips") {
    SplitMix64 rng(23);
    for (int t = 0; t < 50; ++t) {
        const int m = 1 + static_cast<int>(rng.below(4));
        const Polynomial p = random_multilinear(rng, m);
        CHECK(parse(to_string(p)) == p);
    }
    CHECK(to_string(parse("[x1,x2]")) == "x1*x2 - x2*x1");
}

TEST_CASE("canonicalize merges and drops") {
    Polynomial raw;
    raw.num_vars = 2;
    raw.monomials.push_back(Monomial{BigRational(1), {1, 2}});
    raw.monomials.push_back(Monomial{BigRational(2), {1, 2}});
    raw.monomials.push_back(Monomial{BigRational(-3), {1, 2}});
    raw.monomials.push_back(Monomial{BigRational(5), {2}});
    const Polynomial p = canonicalize(raw);
    REQUIRE(p.monomials.size() == 1);
    CHECK(p.monomials[0].word == std::vector<int>{2});
    CHECK(canonicalize(p) == p);
}

TEST_CASE("ring laws on random polynomials") {
    SplitMix64 rng(29);
    for (int t = 0; t < 40; ++t) {
        const Polynomial a = random_multilinear(rng, 2);
        const Polynomial b = random_multilinear(rng, 2);
        const Polynomial c = random_multilinear(rng, 2);
        CHECK(poly_mul(poly_add(a, b), c) ==
              poly_add(poly_mul(a, c), poly_mul(b, c)));
        CHECK(poly_add(a, poly_neg(a)).is_zero());
        CHECK(poly_mul(a, poly_mul(b, c)) == poly_mul(poly_mul(a, b), c));
    }
    const Polynomial p = parse("x1 + x2x1");
    CHECK(poly_pow(p, 3) == poly_mul(p, poly_mul(p, p)));
    // p^0 is the constant 1 in the same variable set.
    const Polynomial one = poly_pow(p, 0);
    CHECK(one.num_vars == p.num_vars);
    REQUIRE(one.monomials.size() == 1);
    CHECK(one.monomials[0].word.empty());
    CHECK(one.monomials[0].coeff == 1);
}

TEST_CASE("evaluate is the Hamilton word sum") {
    const Polynomial bracket = parse("[x1,x2]");
    const Quaternion two_k = q_scale(ExactScalar(2), unit(BasisAxis::K));
    CHECK(evaluate(bracket, {unit(BasisAxis::I), unit(BasisAxis::J)}) ==
          two_k);
    CHECK_THROWS_AS(evaluate(bracket, {unit(BasisAxis::I)}),
                    ArityMismatchError);

    SplitMix64 rng(31);
    for (int t = 0; t < 30; ++t) {
        const Polynomial a = random_multilinear(rng, 3);
        const Polynomial b = random_multilinear(rng, 3);
        const std::vector<Quaternion> args = random_args(rng, 3, 10);
        CHECK(evaluate(poly_add(a, b), args) ==
              q_add(evaluate(a, args), evaluate(b, args)));
        CHECK(evaluate(poly_mul(a, b), args) ==
              q_mul(evaluate(a, args), evaluate(b, args)));
    }
}

TEST_CASE("multidegree and multilinearity") {
    CHECK(multidegree(parse("[x1,x2]^2")) == std::vector<int>{2, 2});
    CHECK(multidegree(parse("s4")) == std::vector<int>{1, 1, 1, 1});
    CHECK_FALSE(multidegree(parse("x1 + x1x2")).has_value());
    CHECK_FALSE(multidegree(parse("x1 - x1")).has_value());
    CHECK(is_multilinear(parse("s4")));
    CHECK(is_multilinear(parse("x1")));
    CHECK_FALSE(is_multilinear(parse("[x1,x2]^2")));
    CHECK_FALSE(is_multilinear(parse("3/2")));
}

TEST_CASE("standard polynomial alternates") {
    // Repeating an argument kills an alternating polynomial.
    SplitMix64 rng(37);
    const Polynomial s3 = std_poly(3);
    REQUIRE(s3.monomials.size() == 6);
    for (int t = 0; t < 20; ++t) {
        std::vector<Quaternion> args = random_args(rng, 3, 10);
        args[2] = args[0];
        CHECK(evaluate(s3, args).is_zero());
    }
    CHECK_THROWS_AS(std_poly(0), CapExceededError);
    CHECK_THROWS_AS(std_poly(7), CapExceededError);
}

TEST_CASE("weights of the commutator square") {
    const WeightAnalysis a = infer_weights(parse("[x1,x2]^2"));
    CHECK(a.has_nonzero_degree);
    REQUIRE(a.certificate.has_value());
    CHECK(a.certificate->weights == std::vector<BigInt>{1, 1});
    CHECK(a.certificate->degree == 4);
    CHECK(certifies(parse("[x1,x2]^2"), *a.certificate));
}

TEST_CASE("weights of mixed-degree semihomogeneous polynomials") {
    // x1 + x2^2 forces w1 = 2*w2.
    const WeightAnalysis a = infer_weights(parse("x1 + x2^2"));
    REQUIRE(a.certificate.has_value());
    CHECK(a.certificate->weights == std::vector<BigInt>{2, 1});
    CHECK(a.certificate->degree == 2);
    CHECK(certifies(parse("x1 + x2^2"), *a.certificate));

    const WeightAnalysis b = infer_weights(parse("[x1,x2]^2 + [x1^2,x2^2]"));
    REQUIRE(b.certificate.has_value());
    CHECK(certifies(parse("[x1,x2]^2 + [x1^2,x2^2]"), *b.certificate));
    CHECK(b.certificate->degree != 0);
}

TEST_CASE("weights reject non-semihomogeneous polynomials") {
    // x1 + x1^2 forces d = w1 = 2w1 = 0.
    const WeightAnalysis a = infer_weights(parse("x1 + x1^2"));
    CHECK_FALSE(a.has_nonzero_degree);
    CHECK_FALSE(a.certificate.has_value());
    CHECK_THROWS_AS(infer_weights(parse("x1 - x1")), ZeroPolynomialError);

    WeightVector wrong;
    wrong.weights = {BigInt(1), BigInt(2)};
    wrong.degree = 4;
    CHECK_FALSE(certifies(parse("[x1,x2]^2"), wrong));
}

TEST_CASE("constant terms force degree zero") {
    const WeightAnalysis a = infer_weights(parse("x1^2 + 3"));
    CHECK_FALSE(a.has_nonzero_degree);
    CHECK_FALSE(a.certificate.has_value());
}
