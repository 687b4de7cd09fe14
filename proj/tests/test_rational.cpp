#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratroot/errors.hpp"
#include "ratroot/rational.hpp"

#include "support.hpp"

#include <random>

using namespace ratroot;
using testsupport::draw_in;
using testsupport::small_rational;

namespace {
Rational R(const char* text) { return Rational::from_string(text); }
} // namespace

TEST_CASE("construction reduces to canonical lowest terms") {
    Rational a(BigInt(6), BigInt(-8));
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 4);

    Rational zero(BigInt(0), BigInt(7));
    CHECK(zero.numerator() == 0);
    CHECK(zero.denominator() == 1);

    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DivisionByZero);
}

TEST_CASE("addition") {
    CHECK(R("16/4") + R("17/4") == R("33/4")); // intermediate of (4 + 17/4)
    CHECK(R("0") + R("5/3") == R("5/3"));
    CHECK(R("1/6") + R("1/10") == R("4/15")); // cross-multiplied: (10+6)/60 reduced
}

TEST_CASE("multiplication") {
    CHECK(R("4") * R("17/4") == R("17"));
    CHECK(R("1") * R("33/8") == R("33/8"));
    CHECK(R("2/3") * R("9/4") == R("3/2"));
}

TEST_CASE("division") {
    CHECK(R("17") / R("4") == R("17/4"));
    CHECK(R("33/8") / R("33/8") == R("1"));
    CHECK(R("17") / R("121/16") == R("272/121")); // 17/x2^2 in the cube-root run
    CHECK_THROWS_AS(R("1") / R("0"), DivisionByZero);
}

TEST_CASE("powers") {
    CHECK(pow(R("11/4"), 2) == R("121/16"));
    CHECK(pow(R("33/8"), 0) == R("1"));
    CHECK(pow(R("2"), 3) == R("8"));
    CHECK(pow(R("0"), 5) == R("0"));
    CHECK(pow(R("-2/3"), 2) == R("4/9"));
    CHECK(pow(R("-2/3"), 3) == R("-8/27"));
    CHECK_THROWS_AS(pow(R("0"), 0), UndefinedPower);
}

TEST_CASE("power agrees with repeated multiplication") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        Rational base = small_rational(rng);
        auto k = static_cast<unsigned long>(draw_in(rng, 0, 9));
        if (base.is_zero() && k == 0) continue;
        Rational expected(1);
        for (unsigned long j = 0; j < k; ++j) expected *= base;
        REQUIRE(pow(base, k) == expected);
    }
}

TEST_CASE("ordering") {
    CHECK(R("33/8") < R("17/4"));
    CHECK(R("4") == R("4"));
    CHECK(R("2177/528") < R("33/8"));
    CHECK(R("-1/2") < R("0"));
    CHECK(R("-1/2") > R("-2/3"));
}

TEST_CASE("decimal_string truncates toward zero") {
    CHECK(R("33/8").decimal_string(3) == "4.125");
    CHECK(R("0").decimal_string(5) == "0.00000");
    CHECK(R("2177/528").decimal_string(8) == "4.12310606");
    CHECK(R("-1/3").decimal_string(4) == "-0.3333");
    CHECK(R("33/8").decimal_string(0) == "4");
    CHECK(R("-33/8").decimal_string(0) == "-4");
    CHECK(R("1/64").decimal_string(2) == "0.01"); // truncation, not rounding
    CHECK_THROWS_AS(R("1").decimal_string(-1), InvalidArgument);
}

TEST_CASE("decimal_string handles four-digit-plus expansions") {
    // 1/7 repeats with period 142857
    std::string expected = "0.";
    const char cycle[] = "142857";
    for (int i = 0; i < 1200; ++i) expected += cycle[i % 6];
    CHECK(R("1/7").decimal_string(1200) == expected);
}

TEST_CASE("string parsing accepts integer, fraction and decimal forms") {
    CHECK(R("17") == Rational(17));
    CHECK(R("-17") == Rational(-17));
    CHECK(R("+3/6") == R("1/2"));
    CHECK(R("4.125") == R("33/8"));
    CHECK(R("-4.125") == -R("33/8"));
    CHECK(R("0.0") == R("0"));
    CHECK(R("007") == Rational(7));

    CHECK_THROWS_AS(R(""), ParseError);
    CHECK_THROWS_AS(R("4 1/8"), ParseError); // mixed numbers rejected
    CHECK_THROWS_AS(R("1e5"), ParseError);
    CHECK_THROWS_AS(R("4."), ParseError);
    CHECK_THROWS_AS(R(".5"), ParseError);
    CHECK_THROWS_AS(R("3//4"), ParseError);
    CHECK_THROWS_AS(R("-"), ParseError);
    CHECK_THROWS_AS(R("17/0"), DivisionByZero);
}

TEST_CASE("field laws hold on random inputs") {
    std::mt19937_64 rng(7);
    const Rational one(1);
    for (int i = 0; i < 10000; ++i) {
        Rational a = small_rational(rng);
        Rational b = small_rational(rng);
        Rational c = small_rational(rng);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a + -a).is_zero());
        if (!a.is_zero()) REQUIRE(a * (one / a) == one);
    }
}

TEST_CASE("results stay canonical after arithmetic") {
    std::mt19937_64 rng(11);
    auto canonical = [](const Rational& x) {
        if (sgn(x.denominator()) <= 0) return false;
        if (x.numerator() == 0) return x.denominator() == 1;
        BigInt g;
        mpz_gcd(g.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
        return g == 1;
    };
    for (int i = 0; i < 2000; ++i) {
        Rational a = small_rational(rng);
        Rational b = small_rational(rng);
        REQUIRE(canonical(a + b));
        REQUIRE(canonical(a - b));
        REQUIRE(canonical(a * b));
        if (!b.is_zero()) REQUIRE(canonical(a / b));
        REQUIRE(canonical(-a));
        REQUIRE(canonical(pow(a, 3)));
    }
}

TEST_CASE("order is compatible with addition and positive scaling") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 2000; ++i) {
        Rational a = small_rational(rng);
        Rational b = small_rational(rng);
        Rational c = small_rational(rng);
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        REQUIRE(a + c < b + c);
        if (c.sign() > 0) REQUIRE(a * c < b * c);
    }
}

TEST_CASE("decimal_string round-trips within 10^-digits") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        Rational a = small_rational(rng);
        int digits = static_cast<int>(draw_in(rng, 0, 40));
        Rational back = Rational::from_string(a.decimal_string(digits));
        Rational gap = abs(a - back);
        REQUIRE(gap < Rational(BigInt(1), pow10(static_cast<unsigned long>(digits))));
    }
}

TEST_CASE("truncate_decimal moves toward zero on the requested grid") {
    CHECK(truncate_decimal(R("2177/528"), 8) == R("4.12310606"));
    CHECK(truncate_decimal(R("-2177/528"), 8) == R("-4.12310606"));
    CHECK(truncate_decimal(R("33/8"), 3) == R("33/8")); // already on the grid
    std::mt19937_64 rng(19);
    for (int i = 0; i < 1000; ++i) {
        Rational a = small_rational(rng);
        int digits = static_cast<int>(draw_in(rng, 0, 20));
        Rational t = truncate_decimal(a, digits);
        REQUIRE(abs(t) <= abs(a));
        REQUIRE(abs(a - t) < Rational(BigInt(1), pow10(static_cast<unsigned long>(digits))));
        REQUIRE((t.numerator() * pow10(static_cast<unsigned long>(digits))) % t.denominator() == 0);
    }
}
