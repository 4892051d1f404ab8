#include "polycauchy/cauchy.hpp"

#include <stdexcept>
#include <string>
#include <tuple>

#include "polycauchy/bernoulli.hpp"
#include "polycauchy/memo.hpp"
#include "polycauchy/series.hpp"
#include "polycauchy/stirling.hpp"

namespace polycauchy {

namespace {

Rational inv_power(int base, int k) { return Rational(base).pow(-k); }

void check_nk(int n, int k)
{
    if (n < 0)
        throw std::domain_error("cauchy: n must be >= 0");
    if (k < 1)
        throw std::domain_error("cauchy: k must be >= 1");
}

const Poly& x_poly()
{
    static const Poly x = Poly::x();
    return x;
}

/// Numbers straight from the Stirling sums; used to seed convolution forms.
Rational stirling_number_sum(CauchyKind kind, int n, int k)
{
    Rational acc;
    for (int m = 0; m <= n; ++m) {
        const Rational term = stirling1(n, m) * inv_power(m + 1, k);
        acc += kind == CauchyKind::first ? sign_power(n - m) * term : term;
    }
    return kind == CauchyKind::first ? acc : sign_power(n) * acc;
}

Poly from_gsn(CauchyKind kind, int n, int k)
{
    Poly acc;
    for (int m = 0; m <= n; ++m) {
        const Rational w = inv_power(m + 1, k);
        acc += gsn1(n, m) * (kind == CauchyKind::first ? sign_power(n - m) * w : w);
    }
    return kind == CauchyKind::first ? acc : reflect(acc) * sign_power(n);
}

Poly from_integral(CauchyKind kind, int n, int k)
{
    // Outer variable t, inner x. First kind: prod_j (t - x - j); second: prod_j (x - t - j).
    BivariatePoly prod(Poly(Rational(1)));
    for (int j = 0; j < n; ++j) {
        if (kind == CauchyKind::first)
            prod *= BivariatePoly({Poly({Rational(-j), Rational(-1)}), Poly(Rational(1))});
        else
            prod *= BivariatePoly({Poly({Rational(-j), Rational(1)}), Poly(Rational(-1))});
    }
    return apply_moments(prod, [k](int i) { return Poly(inv_power(i + 1, k)); });
}

Poly from_series(CauchyKind kind, int n)
{
    const auto s = kind == CauchyKind::first ? gf_cauchy1(n) : gf_cauchy2(n);
    return s[n] * factorial(n);
}

Poly from_binomial_conv(CauchyKind kind, int n, int k)
{
    Poly acc;
    if (kind == CauchyKind::first) {
        for (int m = 0; m <= n; ++m)
            acc += binom_poly(Rational(n - 1), n - m)
                 * (stirling_number_sum(CauchyKind::second, m, k) / factorial(m));
        return acc * (sign_power(n) * factorial(n));
    }
    for (int m = 0; m <= n; ++m)
        acc += binom_poly(Rational(-m), n - m)
             * (sign_power(m) * stirling_number_sum(CauchyKind::first, m, k) / factorial(m));
    return acc * factorial(n);
}

Poly from_stirling_expansion(CauchyKind kind, int n)
{
    if (n == 0)
        return Poly(Rational(1));
    // The number from its Bernoulli expansion.
    Rational cn = n == 1 ? Rational(1) : Rational(0);
    for (int m = 1; m <= n; ++m)
        cn += sign_power(n + 1) * Rational(n) * stirling1(n - 1, m - 1) * bernoulli_number(m) / Rational(m);
    const Poly base = kind == CauchyKind::first ? x_poly() : x_poly() - Poly(Rational(1));
    Poly acc(cn);
    for (int m = 1; m <= n; ++m) {
        Rational w = sign_power(n) * Rational(n) * stirling1(n - 1, m - 1) / Rational(m);
        if (kind == CauchyKind::second)
            w *= sign_power(m);
        acc += pow(base, m) * w;
    }
    return acc;
}

} // namespace

std::string_view to_string(CauchyKind kind)
{
    return kind == CauchyKind::first ? "first" : "second";
}

std::string_view to_string(Construction c)
{
    switch (c) {
    case Construction::gsn: return "gsn";
    case Construction::integral: return "integral";
    case Construction::series: return "series";
    case Construction::binomial_conv: return "binomial_conv";
    case Construction::stirling_expansion: return "stirling_expansion";
    }
    return "unknown";
}

Poly cauchy_poly(CauchyKind kind, int n, int k, Construction construction)
{
    check_nk(n, k);
    if ((construction == Construction::series || construction == Construction::stirling_expansion) && k != 1)
        throw std::domain_error("cauchy_poly: construction " + std::string(to_string(construction))
                                + " is defined only for k = 1");
    static Memo<std::tuple<int, int, int, int>, Poly> memo;
    return memo.get({static_cast<int>(kind), n, k, static_cast<int>(construction)}, [&] {
        switch (construction) {
        case Construction::gsn: return from_gsn(kind, n, k);
        case Construction::integral: return from_integral(kind, n, k);
        case Construction::series: return from_series(kind, n);
        case Construction::binomial_conv: return from_binomial_conv(kind, n, k);
        case Construction::stirling_expansion: return from_stirling_expansion(kind, n);
        }
        throw std::domain_error("cauchy_poly: unknown construction");
    });
}

Rational cauchy_number(CauchyKind kind, int n, int k)
{
    return cauchy_poly(kind, n, k).coeff(0);
}

Rational cauchy_coefficient(CauchyKind kind, int n, int i, int k)
{
    check_nk(n, k);
    if (i < 0 || i > n)
        throw std::domain_error("cauchy_coefficient: need 0 <= i <= n");
    Rational acc;
    for (int m = i; m <= n; ++m) {
        Rational term = binomial(m, i) * stirling1(n, m) * inv_power(m - i + 1, k);
        if (kind == CauchyKind::first)
            term *= sign_power(m);
        acc += term;
    }
    return sign_power(n + i) * acc;
}

Poly cauchy_derivative(CauchyKind kind, int n, int k, int order)
{
    check_nk(n, k);
    if (order < 0)
        throw std::domain_error("cauchy_derivative: negative order");
    if (order > n)
        return {};
    Poly acc;
    for (int m = order; m <= n; ++m) {
        const Rational w = sign_power(m) * cauchy_number(kind, n - m, k) * binomial(n, m);
        const Poly& g = gsn1(m, order);
        acc += (kind == CauchyKind::first ? g : reflect(g)) * w;
    }
    Rational scale = factorial(order);
    if (kind == CauchyKind::second)
        scale *= sign_power(order);
    return acc * scale;
}

Poly cauchy_recurrence_step(CauchyKind kind, int n, int k)
{
    check_nk(n, k);
    const Poly& x = x_poly();
    const Poly current = cauchy_poly(kind, n, k);
    Poly sum;
    if (kind == CauchyKind::first) {
        for (int m = 0; m <= n; ++m)
            sum += binom_poly(Rational(n), n - m) * (cauchy_number(CauchyKind::second, m + 1, k) / factorial(m));
        return -(x + Poly(Rational(n))) * current + sum * (sign_power(n + 1) * factorial(n));
    }
    for (int m = 0; m <= n; ++m)
        sum += binom_poly(Rational(-m - 1), n - m)
             * (sign_power(m) * cauchy_number(CauchyKind::first, m + 1, k) / factorial(m));
    return (x - Poly(Rational(n))) * current - sum * factorial(n);
}

Poly c_aux_poly(int j, int k)
{
    return c_aux_poly_L(j, std::vector<Rational>(static_cast<std::size_t>(k), Rational(1)));
}

Poly c_aux_poly_L(int j, const std::vector<Rational>& L)
{
    if (j < 0)
        throw std::domain_error("c_aux_poly: j must be >= 0");
    if (L.empty())
        throw std::domain_error("c_aux_poly: k must be >= 1");
    Rational prod(1);
    for (const auto& l : L) {
        if (l.is_zero())
            throw std::domain_error("c_aux_poly: every l_i must be nonzero");
        prod *= l;
    }
    const int k = static_cast<int>(L.size());
    std::vector<Rational> c(static_cast<std::size_t>(j) + 1);
    for (int i = 0; i <= j; ++i)
        c[static_cast<std::size_t>(j - i)] = sign_power(i) * binomial(j, i) * prod.pow(i + 1) * inv_power(i + 1, k);
    return Poly(std::move(c));
}

void MultiParam::validate() const
{
    if (n < 0)
        throw std::domain_error("multiparameter: n must be >= 0");
    if (k < 1)
        throw std::domain_error("multiparameter: k must be >= 1");
    if (a < 1)
        throw std::domain_error("multiparameter: a must be an integer >= 1");
    if (static_cast<int>(L.size()) != k)
        throw std::domain_error("multiparameter: L must have exactly k entries");
    for (const auto& l : L)
        if (l.is_zero())
            throw std::domain_error("multiparameter: every l_i must be nonzero");
}

Poly multiparam_cauchy(CauchyKind kind, const MultiParam& p)
{
    p.validate();
    const Rational ys = kind == CauchyKind::first ? p.y : -p.y;
    Poly acc;
    for (int m = 0; m <= p.n; ++m) {
        const Rational s = gsn_bivariate(StirlingKind::first, p.n, m).at(ys, p.q);
        const Rational sign = kind == CauchyKind::first ? sign_power(p.n) : sign_power(p.n - m);
        acc += c_aux_poly_L(m + p.a - 1, p.L) * (sign * s);
    }
    return acc * sign_power(p.a - 1);
}

Poly multiparam_cauchy_integral(CauchyKind kind, const MultiParam& p)
{
    p.validate();
    Rational prod(1);
    for (const auto& l : p.L)
        prod *= l;
    const Poly one(Rational(1));
    const Poly x = x_poly();
    // t outer, x inner.
    BivariatePoly integrand(one);
    if (kind == CauchyKind::first) {
        const BivariatePoly t_minus_x({-x, one});
        integrand = pow(t_minus_x, p.a - 1);
        for (int j = 0; j < p.n; ++j)
            integrand *= BivariatePoly({-x - Poly(p.y + Rational(j) * p.q), one});
    } else {
        const BivariatePoly x_minus_t({x, -one});
        integrand = pow(x_minus_t, p.a - 1) * Poly(sign_power(p.a - 1));
        for (int j = 0; j < p.n; ++j)
            integrand *= BivariatePoly({x + Poly(p.y - Rational(j) * p.q), -one});
    }
    return apply_moments(integrand, [&](int i) { return Poly(prod.pow(i + 1) * inv_power(i + 1, p.k)); });
}

BivariatePoly multiparam_cauchy_xy(CauchyKind kind, const MultiParam& p)
{
    p.validate();
    BivariatePoly acc;
    for (int m = 0; m <= p.n; ++m) {
        Poly s_y = gsn_bivariate(StirlingKind::first, p.n, m).in_y(p.q);
        if (kind == CauchyKind::second)
            s_y = reflect(s_y);
        const Rational sign = kind == CauchyKind::first ? sign_power(p.n) : sign_power(p.n - m);
        acc += lift(c_aux_poly_L(m + p.a - 1, p.L)) * (s_y * sign);
    }
    return acc * Poly(sign_power(p.a - 1));
}

Rational shifted_cauchy_number(CauchyKind kind, int n, int a, const Rational& q, const std::vector<Rational>& L)
{
    MultiParam p{n, static_cast<int>(L.size()), a, q, L, Rational(0)};
    p.validate();
    Rational prod(1);
    for (const auto& l : L)
        prod *= l;
    Rational acc;
    for (int m = 0; m <= n; ++m) {
        const Rational qf = kind == CauchyKind::first ? (-q).pow(n - m) : q.pow(n - m);
        acc += qf * prod.pow(m + a) * Rational(m + a).pow(-p.k) * stirling1(n, m);
    }
    return kind == CauchyKind::first ? acc : sign_power(n) * acc;
}

QuadraticSurd evaluate_at_sqrt(const Poly& p, const Rational& d)
{
    QuadraticSurd r;
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational term = p.coeff(i) * d.pow(i / 2);
        if (i % 2 == 0)
            r.rational += term;
        else
            r.radical += term;
    }
    return r;
}

} // namespace polycauchy
