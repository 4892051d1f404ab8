#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polycauchy/bernoulli.hpp"
#include "polycauchy/cauchy.hpp"
#include "polycauchy/series.hpp"

using namespace polycauchy;

TEST_CASE("exp and log1p are inverse")
{
    const RatSeries t = RatSeries::variable(10);
    CHECK(log1p(exp(t) - RatSeries::constant(10, Rational(1))) == t);
}

TEST_CASE("reciprocal")
{
    const RatSeries one_minus_t = RatSeries::constant(8, Rational(1)) - RatSeries::variable(8);
    const RatSeries geo = reciprocal(one_minus_t);
    for (int i = 0; i <= 8; ++i)
        CHECK(geo[i] == Rational(1));
    CHECK(geo * one_minus_t == RatSeries::constant(8, Rational(1)));
}

TEST_CASE("pow_int")
{
    const RatSeries s = RatSeries::constant(5, Rational(1)) + RatSeries::variable(5);
    const RatSeries cube = pow_int(s, 3);
    CHECK(cube[2] == Rational(3));
    CHECK(cube[4] == Rational(0));
    CHECK(pow_int(s, 0) == RatSeries::constant(5, Rational(1)));
    CHECK(reciprocal(s)[3] == Rational(-1));
}

TEST_CASE("mixed orders are rejected")
{
    CHECK_THROWS(RatSeries(3) + RatSeries(4));
    CHECK_THROWS(RatSeries(-1));
}

TEST_CASE("t/log(1+t) gives the Cauchy numbers")
{
    const RatSeries s = t_over_log1p(8);
    for (int n = 0; n <= 8; ++n)
        CHECK(s[n] * factorial(n) == cauchy_number(CauchyKind::first, n));
}

TEST_CASE("generating functions reproduce the polynomials")
{
    const auto c1 = egf_coefficients(gf_cauchy1(10));
    const auto c2 = egf_coefficients(gf_cauchy2(10));
    const auto b = egf_coefficients(gf_gen_bernoulli(1, 10));
    for (int n = 0; n <= 10; ++n) {
        CHECK(c1[n] == cauchy_poly(CauchyKind::first, n));
        CHECK(c2[n] == cauchy_poly(CauchyKind::second, n));
        CHECK(b[n] == bernoulli_poly(n));
    }
    CHECK(egf_coefficients(gf_gen_bernoulli(2, 2))[2] == Poly{Rational(5, 6), Rational(-2), Rational(1)});
}
