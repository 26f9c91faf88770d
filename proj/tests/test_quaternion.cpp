#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace quatimage;

namespace {

Quaternion unit(BasisAxis a) { return Quaternion::unit(a); }

}  // namespace

TEST_CASE("q8 multiplication table") {
    const SignedBasis e{1, BasisAxis::E};
    const SignedBasis i{1, BasisAxis::I};
    const SignedBasis j{1, BasisAxis::J};
    const SignedBasis k{1, BasisAxis::K};
    auto neg = [](SignedBasis b) { return SignedBasis{-b.sign, b.axis}; };

    // Hamilton relations, all 16 products.
    CHECK(q8_mul(e, e) == e);
    CHECK(q8_mul(e, i) == i);
    CHECK(q8_mul(i, e) == i);
    CHECK(q8_mul(i, i) == neg(e));
    CHECK(q8_mul(j, j) == neg(e));
    CHECK(q8_mul(k, k) == neg(e));
    CHECK(q8_mul(i, j) == k);
    CHECK(q8_mul(j, i) == neg(k));
    CHECK(q8_mul(j, k) == i);
    CHECK(q8_mul(k, j) == neg(i));
    CHECK(q8_mul(k, i) == j);
    CHECK(q8_mul(i, k) == neg(j));
    CHECK(q8_mul(e, j) == j);
    CHECK(q8_mul(j, e) == j);
    CHECK(q8_mul(e, k) == k);
    CHECK(q8_mul(k, e) == k);
}

TEST_CASE("q8 signs compose") {
    SplitMix64 rng(7);
    for (int t = 0; t < 100; ++t) {
        const SignedBasis a{rng.below(2) ? 1 : -1,
                            kAllAxes[rng.below(4)]};
        const SignedBasis b{rng.below(2) ? 1 : -1,
                            kAllAxes[rng.below(4)]};
        const SignedBasis c{rng.below(2) ? 1 : -1,
                            kAllAxes[rng.below(4)]};
        CHECK(q8_mul(q8_mul(a, b), c) == q8_mul(a, q8_mul(b, c)));
        // q8_mul agrees with the bilinear Hamilton product.
        const Quaternion qa = q_scale(ExactScalar(a.sign),
                                      unit(a.axis));
        const Quaternion qb = q_scale(ExactScalar(b.sign),
                                      unit(b.axis));
        CHECK(q_mul(qa, qb) == Quaternion::from_basis(q8_mul(a, b)));
    }
}

TEST_CASE("unit products") {
    const Quaternion i = unit(BasisAxis::I);
    const Quaternion j = unit(BasisAxis::J);
    const Quaternion k = unit(BasisAxis::K);
    CHECK(q_mul(i, j) == k);
    CHECK(q_mul(j, i) == q_neg(k));
    CHECK(q_mul(i, i) == q_neg(Quaternion::one()));
    CHECK(q_mul(q_mul(i, j), k) == q_neg(Quaternion::one()));
}

TEST_CASE("algebra laws on random quaternions") {
    SplitMix64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const Quaternion a = random_quaternion(rng, 20);
        const Quaternion b = random_quaternion(rng, 20);
        const Quaternion c = random_quaternion(rng, 20);
        CHECK(q_mul(q_mul(a, b), c) == q_mul(a, q_mul(b, c)));
        CHECK(q_mul(a, q_add(b, c)) == q_add(q_mul(a, b), q_mul(a, c)));
        CHECK(norm_sq(q_mul(a, b)) == norm_sq(a) * norm_sq(b));
        CHECK(q_conj(q_mul(a, b)) == q_mul(q_conj(b), q_conj(a)));
        CHECK(q_add(Quaternion(re_part(a)), ve_part(a)) == a);
        if (!a.is_zero()) {
            CHECK(q_mul(a, q_inv(a)) == Quaternion::one());
            CHECK(q_mul(q_inv(a), a) == Quaternion::one());
        }
    }
}

TEST_CASE("conjugation preserves norm and real part") {
    SplitMix64 rng(13);
    for (int t = 0; t < 100; ++t) {
        const Quaternion v = random_quaternion(rng, 20);
        Quaternion h = random_quaternion(rng, 20);
        if (h.is_zero()) h = Quaternion::one();
        const Quaternion w = conjugate_by(v, h);
        CHECK(norm_sq(w) == norm_sq(v));
        CHECK(re_part(w) == re_part(v));
        CHECK(ve_part(w).is_vector());
    }
}

TEST_CASE("conjugation golden") {
    // (1+k) i (1+k)^{-1} = j.
    const Quaternion h(ExactScalar(1), ExactScalar(0), ExactScalar(0),
                       ExactScalar(1));
    CHECK(conjugate_by(unit(BasisAxis::I), h) == unit(BasisAxis::J));
    // j i j^{-1} = -i.
    CHECK(conjugate_by(unit(BasisAxis::I), unit(BasisAxis::J)) ==
          q_neg(unit(BasisAxis::I)));
}

TEST_CASE("predicates and coordinates") {
    const Quaternion q(ExactScalar(1), ExactScalar(2), ExactScalar(3),
                       ExactScalar(4));
    CHECK_FALSE(q.is_scalar());
    CHECK_FALSE(q.is_vector());
    CHECK(q.coord(BasisAxis::E) == ExactScalar(1));
    CHECK(q.coord(BasisAxis::I) == ExactScalar(2));
    CHECK(q.coord(BasisAxis::J) == ExactScalar(3));
    CHECK(q.coord(BasisAxis::K) == ExactScalar(4));
    CHECK(Quaternion::zero().is_scalar());
    CHECK(Quaternion::zero().is_vector());
    CHECK(Quaternion(ExactScalar(5)).is_scalar());
    CHECK(ve_part(q).is_vector());
    CHECK(norm_sq(q) == ExactScalar(30));
    CHECK_THROWS_AS(q_inv(Quaternion::zero()), DivisionByZeroError);
}

TEST_CASE("operators mirror the named functions") {
    SplitMix64 rng(17);
    for (int t = 0; t < 50; ++t) {
        const Quaternion a = random_quaternion(rng, 10);
        const Quaternion b = random_quaternion(rng, 10);
        CHECK(a + b == q_add(a, b));
        CHECK(a - b == q_sub(a, b));
        CHECK(a * b == q_mul(a, b));
    }
}

TEST_CASE("printing") {
    CHECK(Quaternion::zero().str() == "0");
    CHECK(Quaternion::one().str() == "1");
    CHECK(Quaternion::unit(BasisAxis::K).str() == "k");
    CHECK(axis_char(BasisAxis::E) == 'e');
    CHECK(axis_char(BasisAxis::I) == 'i');
}
