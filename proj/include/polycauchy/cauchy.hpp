#ifndef POLYCAUCHY_CAUCHY_HPP
#define POLYCAUCHY_CAUCHY_HPP

#include <string_view>
#include <vector>

#include "polycauchy/polynomial.hpp"
#include "polycauchy/rational.hpp"

namespace polycauchy {

enum class CauchyKind { first, second };

/// How a (poly-)Cauchy polynomial is built. All constructions agree where defined.
///  gsn                 signed sum of generalized Stirling polynomials over 1/(m+1)^k
///  integral            expand n! C(t-x, n) (or n! C(x-t, n)) and map t^i to 1/(i+1)^k
///  series              generating-function coefficient times n! (k = 1 only)
///  binomial_conv       binomial convolution seeded by the Stirling-sum numbers
///  stirling_expansion  Stirling-first-kind expansion around the numbers (k = 1 only)
enum class Construction { gsn, integral, series, binomial_conv, stirling_expansion };

std::string_view to_string(CauchyKind kind);
std::string_view to_string(Construction c);

/// c_n^(k)(x) or its second-kind counterpart. Domain error for n < 0, k < 1,
/// or a construction that needs k = 1.
Poly cauchy_poly(CauchyKind kind, int n, int k = 1, Construction construction = Construction::gsn);

/// Value at x = 0.
Rational cauchy_number(CauchyKind kind, int n, int k = 1);

/// Coefficient of x^i from the closed form over Stirling numbers. Domain error unless 0 <= i <= n.
Rational cauchy_coefficient(CauchyKind kind, int n, int i, int k = 1);

/// order-th derivative in x via the generalized-Stirling expansion.
Poly cauchy_derivative(CauchyKind kind, int n, int k, int order);

/// Builds the (n+1)-th polynomial from the n-th one and the numbers.
Poly cauchy_recurrence_step(CauchyKind kind, int n, int k = 1);

/// sum_i (-1)^i C(j, i) x^(j-i) / (i+1)^k, with value 1 at j = 0.
Poly c_aux_poly(int j, int k);

/// Weighted form: sum_i (-1)^i C(j, i) P^(i+1) x^(j-i) / (i+1)^k with P the
/// product of L, k = |L|; value P at j = 0.
Poly c_aux_poly_L(int j, const std::vector<Rational>& L);

/// Parameters of the multiparameter family. k is the length of L.
struct MultiParam {
    int n = 0;
    int k = 1;
    int a = 1;
    Rational q = Rational(1);
    std::vector<Rational> L{Rational(1)};
    Rational y = Rational(0);

    /// Throws std::domain_error unless n >= 0, k >= 1, a >= 1, |L| == k, every l_i != 0.
    void validate() const;
};

/// Multiparameter poly-Cauchy polynomial via bivariate Stirling polynomials.
Poly multiparam_cauchy(CauchyKind kind, const MultiParam& p);

/// Same polynomial from the defining iterated integral over the box [0,l_1] x ... x [0,l_k].
Poly multiparam_cauchy_integral(CauchyKind kind, const MultiParam& p);

/// The family as a polynomial in x whose coefficients are polynomials in y (p.y ignored).
BivariatePoly multiparam_cauchy_xy(CauchyKind kind, const MultiParam& p);

/// Shifted poly-Cauchy numbers with a q parameter (the y = 0, x = 0 case), from Stirling numbers.
Rational shifted_cauchy_number(CauchyKind kind, int n, int a, const Rational& q, const std::vector<Rational>& L);

/// a + b*sqrt(d).
struct QuadraticSurd {
    Rational rational;
    Rational radical;
    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// p(sqrt(d)) split into rational and sqrt(d) parts.
QuadraticSurd evaluate_at_sqrt(const Poly& p, const Rational& d);

} // namespace polycauchy

#endif
