#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polycauchy/bernoulli.hpp"
#include "polycauchy/cauchy.hpp"

using namespace polycauchy;

TEST_CASE("Bernoulli numbers")
{
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    for (int n = 3; n <= 15; n += 2)
        CHECK(bernoulli_number(n) == Rational(0));
}

TEST_CASE("Bernoulli polynomials")
{
    CHECK(bernoulli_poly(2) == Poly{Rational(1, 6), Rational(-1), Rational(1)});
    CHECK(gen_bernoulli_poly(2, 2) == Poly{Rational(5, 6), Rational(-2), Rational(1)});
    CHECK(gen_bernoulli_poly(5, 1) == bernoulli_poly(5));
    CHECK(gen_bernoulli_poly(3, 0) == pow(Poly::x(), 3));
    for (int n = 1; n <= 8; ++n)
        CHECK(bernoulli_poly(n)(Rational(1)) - bernoulli_poly(n)(Rational(0)) == Rational(n == 1 ? 1 : 0));
}

TEST_CASE("power sums")
{
    CHECK(power_sum_poly(2)(Rational(3)) == Rational(14));
    CHECK(power_sum_poly(3)(Rational(4)) == Rational(100));
}

TEST_CASE("Euler polynomials")
{
    CHECK(euler_poly(0) == Poly{Rational(1)});
    CHECK(euler_poly(1) == Poly{Rational(-1, 2), Rational(1)});
    for (int n = 0; n <= 8; ++n)
        CHECK(euler_poly(n)(Rational(1)) + euler_poly(n)(Rational(0)) == Rational(n == 0 ? 2 : 0));
}

TEST_CASE("poly-Bernoulli polynomials")
{
    CHECK(poly_bernoulli_gsn(2, 1)(Rational(0)) == Rational(1, 6));
    for (int n = 0; n <= 8; ++n)
        CHECK(poly_bernoulli_gsn(n, 1) == bernoulli_poly(n) * sign_power(n));
    for (int k = 1; k <= 3; ++k)
        for (int n = 0; n <= 6; ++n)
            CHECK(poly_bernoulli_kl(n, k)(Rational(0)) == poly_bernoulli_gsn(n, k)(Rational(0)));
    CHECK_THROWS(poly_bernoulli_gsn(-1, 1));
}

TEST_CASE("multiparameter poly-Bernoulli reduces at the unit point")
{
    MultiParam p;
    for (int n = 0; n <= 5; ++n) {
        p.n = n;
        CHECK(multiparam_poly_bernoulli(p)(Rational(0)) == poly_bernoulli_gsn(n, 1)(Rational(0)));
    }
}
