#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quatimage/exact_scalar.hpp"
#include "quatimage/random.hpp"

using namespace quatimage;

namespace {

ExactScalar rat(long long num, long long den) {
    return ExactScalar::rational(BigInt(num), BigInt(den));
}

}  // namespace

TEST_CASE("rational normalization") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(1, -2) == rat(-1, 2));
    CHECK(rat(-3, -6) == rat(1, 2));
    CHECK(rat(0, 7) == ExactScalar(0));
    CHECK(rat(0, 7).is_zero());
    CHECK_THROWS_AS(ExactScalar::rational(BigInt(1), BigInt(0)),
                    DivisionByZeroError);
}

TEST_CASE("rational arithmetic and ordering") {
    CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
    CHECK(rat(1, 2) * rat(2, 3) == rat(1, 3));
    CHECK(rat(1, 2) / rat(3, 4) == rat(2, 3));
    CHECK((-rat(1, 2)).sign() == -1);
    CHECK(rat(1, 2).sign() == 1);
    CHECK(ExactScalar(0).sign() == 0);
    CHECK(rat(-3, 2).str() == "-3/2");
    CHECK(ExactScalar(5).str() == "5");
    CHECK_THROWS_AS(rat(1, 2) / ExactScalar(0), DivisionByZeroError);
    CHECK_THROWS_AS(ExactScalar(0).inverse(), DivisionByZeroError);
}

TEST_CASE("field axioms on random rationals") {
    SplitMix64 rng(101);
    for (int t = 0; t < 200; ++t) {
        const ExactScalar a{random_rational(rng, 50)};
        const ExactScalar b{random_rational(rng, 50)};
        const ExactScalar c{random_rational(rng, 50)};
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == ExactScalar(1));
        }
    }
}

TEST_CASE("square roots extend the tower") {
    const ExactScalar s2 = scalar_sqrt(ExactScalar(2));
    CHECK_FALSE(s2.is_rational());
    CHECK(s2.tower_height() == 1);
    CHECK(s2 * s2 == ExactScalar(2));
    CHECK(s2.sign() == 1);

    const ExactScalar one{1};
    CHECK((one + s2) * (one - s2) == ExactScalar(-1));
    CHECK((s2 - one).sign() == 1);
    CHECK((one - s2).sign() == -1);
    CHECK((s2 - one).inverse() == s2 + one);
}

TEST_CASE("perfect squares collapse") {
    CHECK(scalar_sqrt(rat(9, 4)) == rat(3, 2));
    CHECK(scalar_sqrt(ExactScalar(0)) == ExactScalar(0));
    CHECK(scalar_sqrt(ExactScalar(144)) == ExactScalar(12));
    CHECK_THROWS_AS(scalar_sqrt(ExactScalar(-1)), NegativeRadicandError);

    // 3 + 2*sqrt(2) = (1 + sqrt(2))^2, detected by try_exact_sqrt.
    const ExactScalar s2 = scalar_sqrt(ExactScalar(2));
    const ExactScalar square = ExactScalar(3) + ExactScalar(2) * s2;
    const auto root = try_exact_sqrt(square);
    REQUIRE(root.has_value());
    CHECK(*root == ExactScalar(1) + s2);
    CHECK_FALSE(try_exact_sqrt(ExactScalar(2)).has_value());
    CHECK_FALSE(try_exact_sqrt(s2).has_value());
}

TEST_CASE("radicand reduction") {
    const ExactScalar s2 = scalar_sqrt(ExactScalar(2));
    // sqrt(8) = 2*sqrt(2); sqrt(1/2) = sqrt(2)/2.
    CHECK(scalar_sqrt(ExactScalar(8)) == ExactScalar(2) * s2);
    CHECK(scalar_sqrt(rat(1, 2)) == s2 / ExactScalar(2));
    CHECK(scalar_sqrt(rat(18, 25)) == ExactScalar(3) * s2 / ExactScalar(5));
}

TEST_CASE("values agree across representations") {
    const ExactScalar s2 = scalar_sqrt(ExactScalar(2));
    const ExactScalar s3 = scalar_sqrt(ExactScalar(3));
    const ExactScalar s6 = scalar_sqrt(ExactScalar(6));
    // sqrt(2)*sqrt(3) builds a different tower than sqrt(6); equality is on
    // values, not representations.
    CHECK(s2 * s3 == s6);
    CHECK((s2 + s3) * (s2 + s3) == ExactScalar(5) + ExactScalar(2) * s6);
    CHECK((s2 + s3) * (s3 - s2) == ExactScalar(1));
    CHECK((s2 + s3).inverse() == s3 - s2);
}

TEST_CASE("nested towers") {
    const ExactScalar s2 = scalar_sqrt(ExactScalar(2));
    const ExactScalar deep = scalar_sqrt(ExactScalar(1) + s2);
    CHECK(deep.tower_height() == 2);
    CHECK(deep * deep == ExactScalar(1) + s2);
    CHECK(deep.sign() == 1);
    CHECK((deep - ExactScalar(2)).sign() == -1);
    CHECK(deep.inverse() * deep == ExactScalar(1));
}

TEST_CASE("signs with mixed-sign extension parts") {
    const ExactScalar s2 = scalar_sqrt(ExactScalar(2));
    CHECK((ExactScalar(3) - ExactScalar(2) * s2).sign() == 1);   // 9 > 8
    CHECK((ExactScalar(2) - ExactScalar(3) * s2).sign() == -1);  // 4 < 18
    CHECK((ExactScalar(3) - ExactScalar(2) * s2).is_zero() == false);
    const ExactScalar s8 = scalar_sqrt(ExactScalar(8));
    CHECK((s8 - ExactScalar(2) * s2).is_zero());
}

TEST_CASE("division inside an extension") {
    const ExactScalar s5 = scalar_sqrt(ExactScalar(5));
    const ExactScalar x = ExactScalar(2) + s5;   // 2 + sqrt(5)
    const ExactScalar y = ExactScalar(-1) + s5;  // sqrt(5) - 1
    CHECK(x / y * y == x);
    CHECK(x * x.inverse() == ExactScalar(1));
    // Conjugate rationalization: 1/(2+sqrt(5)) = sqrt(5) - 2... with sign:
    // (2+sqrt(5))(sqrt(5)-2) = 1.
    CHECK(x.inverse() == s5 - ExactScalar(2));
}

TEST_CASE("pow") {
    const ExactScalar s2 = scalar_sqrt(ExactScalar(2));
    CHECK(pow(s2, 4) == ExactScalar(4));
    CHECK(pow(s2, 0) == ExactScalar(1));
    CHECK(pow(ExactScalar(3), -2) == rat(1, 9));
    CHECK(pow(rat(-2, 3), 3) == rat(-8, 27));
    CHECK_THROWS_AS(pow(ExactScalar(0), -1), DivisionByZeroError);
}

TEST_CASE("field axioms with radicals mixed in") {
    SplitMix64 rng(202);
    const ExactScalar s2 = scalar_sqrt(ExactScalar(2));
    const ExactScalar s3 = scalar_sqrt(ExactScalar(3));
    for (int t = 0; t < 60; ++t) {
        const ExactScalar a = ExactScalar(random_rational(rng, 9)) +
                              ExactScalar(random_rational(rng, 9)) * s2;
        const ExactScalar b = ExactScalar(random_rational(rng, 9)) +
                              ExactScalar(random_rational(rng, 9)) * s3;
        const ExactScalar c = ExactScalar(random_rational(rng, 9)) * s2 * s3;
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == ExactScalar(0));
        if (!b.is_zero()) {
            CHECK(a / b * b == a);
        }
    }
}

TEST_CASE("ext accessors and keys") {
    const ExactScalar s7 = scalar_sqrt(ExactScalar(7));
    const ExactScalar v = rat(1, 2) + rat(3, 2) * s7;
    REQUIRE_FALSE(v.is_rational());
    CHECK(v.ext_a() == rat(1, 2));
    CHECK(v.ext_b() == rat(3, 2));
    CHECK(v.ext_n() == ExactScalar(7));
    CHECK(v.key() != scalar_sqrt(ExactScalar(5)).key());
    CHECK(v.key() == (rat(1, 2) + rat(3, 2) * s7).key());
}
