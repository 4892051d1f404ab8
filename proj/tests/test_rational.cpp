#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "polycauchy/rational.hpp"

using polycauchy::Rational;

TEST_CASE("parse canonicalizes")
{
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("-6/4").to_string() == "-3/2");
    CHECK(Rational::parse("12").to_string() == "12");
    CHECK(Rational::parse("0/7").to_string() == "0");
}

TEST_CASE("parse rejects junk")
{
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("6/-4"));
    CHECK_THROWS(Rational::parse("2.5"));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("1/2/3"));
}

TEST_CASE("field arithmetic")
{
    const Rational a(1, 3), b(-5, 6);
    CHECK(a + b == Rational(-1, 2));
    CHECK(a * b == Rational(-5, 18));
    CHECK(a / b == Rational(-2, 5));
    CHECK(b.inverse() == Rational(-6, 5));
    CHECK(a.pow(-2) == Rational(9));
    CHECK_THROWS(Rational(0).inverse());
}

TEST_CASE("integer helpers")
{
    CHECK(polycauchy::factorial(0) == Rational(1));
    CHECK(polycauchy::factorial(10) == Rational(3628800));
    CHECK(polycauchy::binomial(6, 2) == Rational(15));
    CHECK(polycauchy::binomial(3, 5) == Rational(0));
    CHECK(polycauchy::binom_scalar(Rational(-1, 2), 2) == Rational(3, 8));
    CHECK(polycauchy::sign_power(3) == Rational(-1));
    CHECK(Rational(7).is_integer());
    CHECK_FALSE(Rational(7, 2).is_integer());
    CHECK(Rational(-9).to_long() == -9);
}
