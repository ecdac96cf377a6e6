#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadralg/rational.hpp"

using quadralg::Rational;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse and str round-trip") {
    CHECK(Rational::parse("3").str() == "3");
    CHECK(Rational::parse("-3").str() == "-3");
    CHECK(Rational::parse("3/6").str() == "1/2");
    CHECK(Rational::parse("3/-6").str() == "-1/2");
    CHECK(Rational::parse("-3/-6").str() == "1/2");
    CHECK(Rational::parse("0/5").str() == "0");
    CHECK(Rational::parse("1000000000000000000000/3").num() ==
          mpz_class("1000000000000000000000"));

    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
    CHECK(Rational::parse(" 1 / 2 ").str() == "1/2");  // whitespace is ignored
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK((a + b) == Rational(1, 2));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 18));
    CHECK((a / b) == Rational(2));
    CHECK((-a) == Rational(-1, 3));
    CHECK(a.inverse() == Rational(3));

    // 1/3 has no finite binary expansion; repeated addition must stay exact.
    Rational sum;
    for (int i = 0; i < 3000; ++i) sum += a;
    CHECK(sum == Rational(1000));
}

TEST_CASE("zero handling") {
    Rational z;
    CHECK(z.isZero());
    CHECK_THROWS_AS(z.inverse(), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / z, std::domain_error);
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(1, 2) >= Rational(2, 4));
    CHECK(Rational(5, 7) > Rational(5, 8));
    CHECK(Rational(-3).sgn() == -1);
    CHECK(Rational(0).sgn() == 0);
    CHECK(Rational(3).sgn() == 1);
    CHECK(Rational(-5, 9).abs() == Rational(5, 9));
}

TEST_CASE("num den accessors") {
    Rational r(-6, 8);
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(r.isOne() == false);
    CHECK(Rational(7, 7).isOne());
}
