#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polycauchy/cauchy.hpp"
#include "polycauchy/golden.hpp"

using namespace polycauchy;

namespace {
constexpr CauchyKind kinds[] = {CauchyKind::first, CauchyKind::second};
constexpr Construction constructions[] = {Construction::gsn, Construction::integral, Construction::series,
                                          Construction::binomial_conv, Construction::stirling_expansion};
}

TEST_CASE("published tables under every construction")
{
    for (auto kind : kinds) {
        const auto table = golden::cauchy_table(kind);
        for (auto c : constructions)
            for (int n = 0; n <= 6; ++n) {
                INFO(to_string(kind), " ", to_string(c), " n=", n);
                CHECK(cauchy_poly(kind, n, 1, c) == table[n]);
            }
    }
}

TEST_CASE("poly-Cauchy of degree six")
{
    for (auto kind : kinds)
        for (int k = 1; k <= 4; ++k) {
            CHECK(cauchy_poly(kind, 6, k) == golden::poly_cauchy_6(kind, k));
            CHECK(cauchy_poly(kind, 6, k, Construction::integral) == golden::poly_cauchy_6(kind, k));
            CHECK(cauchy_poly(kind, 6, k, Construction::binomial_conv) == golden::poly_cauchy_6(kind, k));
        }
}

TEST_CASE("numbers and coefficients")
{
    CHECK(cauchy_number(CauchyKind::first, 4) == Rational(-19, 30));
    CHECK(cauchy_number(CauchyKind::second, 2) == Rational(5, 6));
    CHECK(cauchy_poly(CauchyKind::second, 2)(Rational(1)) == Rational(-1, 6));
    for (auto kind : kinds)
        for (int k = 1; k <= 3; ++k)
            for (int n = 0; n <= 6; ++n) {
                const Poly p = cauchy_poly(kind, n, k);
                for (int i = 0; i <= n; ++i)
                    CHECK(cauchy_coefficient(kind, n, i, k) == p.coeff(i));
            }
}

TEST_CASE("derivative and recurrence")
{
    for (auto kind : kinds)
        for (int n = 0; n <= 6; ++n) {
            CHECK(cauchy_derivative(kind, n, 2, 1) == derivative(cauchy_poly(kind, n, 2)));
            CHECK(cauchy_derivative(kind, n, 1, 3) == derivative(cauchy_poly(kind, n), 3));
            CHECK(cauchy_recurrence_step(kind, n) == cauchy_poly(kind, n + 1));
        }
}

TEST_CASE("domain errors")
{
    CHECK_THROWS_AS(cauchy_poly(CauchyKind::first, -1), std::domain_error);
    CHECK_THROWS_AS(cauchy_poly(CauchyKind::first, 2, 0), std::domain_error);
    CHECK_THROWS_AS(cauchy_poly(CauchyKind::first, 2, 2, Construction::series), std::domain_error);
    MultiParam p;
    p.L = {Rational(0)};
    CHECK_THROWS_AS(multiparam_cauchy(CauchyKind::first, p), std::domain_error);
}

TEST_CASE("multiparameter family")
{
    MultiParam p;
    for (auto kind : kinds)
        for (int n = 0; n <= 5; ++n) {
            p.n = n;
            CHECK(multiparam_cauchy(kind, p) == cauchy_poly(kind, n));
        }

    p = MultiParam{3, 2, 2, Rational(1, 2), {Rational(1), Rational(-2)}, Rational(1, 3)};
    for (auto kind : kinds)
        CHECK(multiparam_cauchy(kind, p) == multiparam_cauchy_integral(kind, p));

    for (auto kind : kinds) {
        const MultiParam mp = golden::sqrt5_point();
        CHECK(evaluate_at_sqrt(multiparam_cauchy(kind, mp), Rational(5)) == golden::sqrt5_value(kind));
    }
}

TEST_CASE("evaluation at a square root")
{
    // 1 + x + x^2 at sqrt 2 = 3 + sqrt 2
    const QuadraticSurd s = evaluate_at_sqrt(Poly{Rational(1), Rational(1), Rational(1)}, Rational(2));
    CHECK(s.rational == Rational(3));
    CHECK(s.radical == Rational(1));
}
