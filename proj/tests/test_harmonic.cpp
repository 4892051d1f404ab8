#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polycauchy/harmonic.hpp"
#include "polycauchy/series.hpp"

using namespace polycauchy;

TEST_CASE("harmonic numbers")
{
    CHECK(harmonic_number(0) == Rational(0));
    CHECK(harmonic_number(1) == Rational(1));
    CHECK(harmonic_number(4) == Rational(25, 12));
}

TEST_CASE("hyperharmonic polynomials")
{
    CHECK(hyperharmonic_poly(0).is_zero());
    CHECK(hyperharmonic_poly(3) == Poly{Rational(1, 3), Rational(1), Rational(1, 2)});
    for (int n = 1; n <= 8; ++n) {
        CHECK(hyperharmonic_poly(n).degree() == n - 1);
        CHECK(hyperharmonic_poly(n)(Rational(0)) == Rational(1, n));
    }
    const PolySeries s = gf_hyperharmonic(12);
    for (int n = 0; n <= 12; ++n)
        CHECK(s[n] == hyperharmonic_poly(n));
}

TEST_CASE("harmonic polynomials")
{
    CHECK(harmonic_poly(0) == Poly{Rational(1)});
    for (int m = 0; m <= 10; ++m)
        CHECK(harmonic_poly(m)(Rational(0)) == harmonic_number(m + 1));
    const PolySeries s = gf_harmonic_poly(10);
    for (int m = 0; m <= 10; ++m)
        CHECK(s[m] == harmonic_poly(m));
}
