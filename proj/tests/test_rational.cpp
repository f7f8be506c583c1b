#include <catch2/catch_amalgamated.hpp>

#include "equicat/rational.hpp"

using equicat::Rational;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational().str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    Rational half(1, 2);
    Rational third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK(-half == Rational(-1, 2));
    CHECK((half + half + half) * Rational(2, 3) == Rational(1));
    CHECK_THROWS_AS(half / Rational(0), std::domain_error);

    // A classic float trap: 0.1 + 0.2 == 0.3 holds exactly here.
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
}

TEST_CASE("signs and zero tests") {
    CHECK(Rational(0).is_zero());
    CHECK_FALSE(Rational(1, 7).is_zero());
    CHECK(Rational(-3, 5).sign() == -1);
    CHECK(Rational(3, 5).sign() == 1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("parse accepts canonical and non-canonical forms") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-3/7") == Rational(-3, 7));
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("-0") == Rational(0));
    // Unicode minus on input; serialization always emits ASCII.
    CHECK(Rational::parse("\xe2\x88\x92""3/7") == Rational(-3, 7));
    CHECK(Rational::parse("\xe2\x88\x92""3/7").str() == "-3/7");
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_WITH(Rational::parse("1/0"), Catch::Matchers::ContainsSubstring("zero denominator"));
    CHECK_THROWS_WITH(Rational::parse("-2/0"), Catch::Matchers::ContainsSubstring("zero denominator"));
    for (const char* bad : {"", " 1", "1 ", "1.5", "a", "1/", "/2", "1/-2", "--1", "1/2/3", "0x10"})
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
    CHECK_FALSE(equicat::Rational::try_parse("abc").has_value());
    CHECK_FALSE(equicat::Rational::try_parse("1/0").has_value());
    CHECK(equicat::Rational::try_parse("-4/6") == Rational(-2, 3));
}

TEST_CASE("str round-trips through parse") {
    for (long n = -6; n <= 6; ++n)
        for (long d = 1; d <= 6; ++d) {
            Rational r(n, d);
            CHECK(Rational::parse(r.str()) == r);
        }
}

TEST_CASE("big values do not overflow") {
    // 2^200 as a rational, exercised through repeated squaring.
    Rational big(2);
    for (int i = 0; i < 3; ++i) big = big * big;  // 2^8
    Rational r = big / (big + Rational(1));       // 256/257, coprime
    CHECK(r.str() == "256/257");
    CHECK(r * (big + Rational(1)) == big);
}
