#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polycauchy/format.hpp"
#include "polycauchy/polynomial.hpp"

using namespace polycauchy;

TEST_CASE("ring operations trim leading zeros")
{
    const Poly x = Poly::x();
    const Poly p = (x + Poly{Rational(1)}) * (x - Poly{Rational(1)});
    CHECK(p == Poly{Rational(-1), Rational(0), Rational(1)});
    CHECK((p - p).is_zero());
    CHECK((p - x * x).degree() == 0);
}

TEST_CASE("evaluation and composition")
{
    const Poly p{Rational(1), Rational(-3), Rational(2)};
    CHECK(p(Rational(1, 2)) == Rational(0));
    CHECK(shift(p, Rational(1)) == Poly{Rational(0), Rational(1), Rational(2)});
    CHECK(compose(p, Poly::x()) == p);
    CHECK(reflect(Poly::x()) == -Poly::x());
}

TEST_CASE("calculus")
{
    const Poly p = pow(Poly::x(), 3);
    CHECK(derivative(p) == Poly{Rational(0), Rational(0), Rational(3)});
    CHECK(derivative(p, 4).is_zero());
    CHECK(integrate_01(p) == Rational(1, 4));
    CHECK(integrate(p, Rational(-1), Rational(2)) == Rational(15, 4));
    CHECK(antiderivative(derivative(p)) == p);
}

TEST_CASE("factorial polynomials")
{
    CHECK(falling_factorial(3) == Poly{Rational(0), Rational(2), Rational(-3), Rational(1)});
    CHECK(rising_factorial(3) == Poly{Rational(0), Rational(2), Rational(3), Rational(1)});
    CHECK(binom_poly(Rational(0), 2)(Rational(5)) == Rational(10));
}

TEST_CASE("bivariate evaluation and transpose")
{
    // p(x, y) = x + 2 x y^2 with x outer
    const BivariatePoly p{Poly{}, Poly{Rational(1), Rational(0), Rational(2)}};
    CHECK(eval(p, Rational(3), Rational(1)) == Rational(9));
    CHECK(eval_inner(p, Rational(1)) == Poly{Rational(0), Rational(3)});
    CHECK(eval_outer(p, Rational(2)) == Poly{Rational(2), Rational(0), Rational(4)});
    CHECK(eval(transpose(p), Rational(1), Rational(3)) == Rational(9));
}

TEST_CASE("printing")
{
    CHECK(to_string(Poly{}) == "0");
    CHECK(to_string(Poly{Rational(-19, 30), Rational(0), Rational(4)}) == "-19/30 + 4*x^2");
}
