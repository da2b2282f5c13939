#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tutteq/rational.hpp"

using tq::Rational;

TEST_CASE("construction normalizes") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(a.pow(10) == Rational(1, 1024));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
    CHECK(Rational(3, 4).inverse() == Rational(4, 3));
}

TEST_CASE("from_string and str round-trip") {
    CHECK(Rational::from_string("22/7") == Rational(22, 7));
    CHECK(Rational::from_string("-3") == Rational(-3));
    CHECK(Rational::from_string("0") == Rational(0));
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-6).str() == "-6");
    CHECK(Rational(9, 3).str() == "3");
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::exception);
    CHECK_THROWS_AS(Rational::from_string("abc"), std::exception);
}

TEST_CASE("decimal rendering, round-half-even, significant digits") {
    CHECK(Rational(10, 27).decimal(10) == "0.3703703704");
    CHECK(Rational(25, 243).decimal(10) == "0.1028806584");
    CHECK(Rational(500, 19683).decimal(10) == "0.02540263171");
    CHECK(Rational(390625, 31381059609L).decimal(10) == "0.00001244779510");
    CHECK(Rational(10, 27).decimal(3) == "0.370");
    CHECK(Rational(1, 2).decimal(1) == "0.5");
    CHECK(Rational(3).decimal(4) == "3.000");
    CHECK(Rational(12345).decimal(2) == "12000");
    // half-even ties
    CHECK(Rational(25, 1000).decimal(1) == "0.02");
    CHECK(Rational(35, 1000).decimal(1) == "0.04");
    CHECK(Rational(-10, 27).decimal(3) == "-0.370");
}

TEST_CASE("factorial and bit size") {
    CHECK(Rational::factorial(0) == Rational(1));
    CHECK(Rational::factorial(5) == Rational(120));
    CHECK(Rational::factorial(20) == Rational(mpz_class("2432902008176640000")));
    CHECK(Rational(1).bit_size() >= 2);
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(7, 5) >= Rational(7, 5));
}
