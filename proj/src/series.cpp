#include "polycauchy/series.hpp"

namespace polycauchy {

RatSeries log1p_series(int order)
{
    RatSeries s(order);
    for (int k = 1; k <= order; ++k)
        s[k] = Rational(k % 2 == 1 ? 1 : -1, k);
    return s;
}

PolySeries to_poly_series(const RatSeries& s)
{
    PolySeries r(s.order());
    for (int i = 0; i <= s.order(); ++i)
        r[i] = Poly(s[i]);
    return r;
}

RatSeries t_over_log1p(int order)
{
    // log(1+t)/t, shifted down one place, has unit constant term.
    RatSeries shifted(order);
    for (int k = 0; k <= order; ++k)
        shifted[k] = Rational(k % 2 == 0 ? 1 : -1, k + 1);
    return reciprocal(shifted);
}

namespace {

/// exp(coef * L(t)) where coef is a polynomial in x and L a rational series.
PolySeries exp_scaled(const Poly& coef, const RatSeries& l)
{
    PolySeries arg = to_poly_series(l);
    arg *= coef;
    return exp(arg);
}

} // namespace

PolySeries gf_cauchy1(int order)
{
    const auto base = to_poly_series(t_over_log1p(order));
    return base * exp_scaled(-Poly::x(), log1p_series(order));
}

PolySeries gf_cauchy2(int order)
{
    const auto base = to_poly_series(t_over_log1p(order));
    return base * exp_scaled(Poly::x() - Poly(Rational(1)), log1p_series(order));
}

PolySeries gf_gen_bernoulli(int alpha, int order)
{
    if (alpha < 0)
        throw std::domain_error("gf_gen_bernoulli: negative order");
    // (e^t - 1)/t = sum t^k/(k+1)!
    RatSeries d(order);
    for (int k = 0; k <= order; ++k)
        d[k] = factorial(k + 1).inverse();
    const auto base = to_poly_series(pow_int(reciprocal(d), alpha));
    return base * exp_scaled(Poly::x(), RatSeries::variable(order));
}

PolySeries gf_hyperharmonic(int order)
{
    // -log(1-t) (1-t)^{-x}
    RatSeries neg_log(order);
    for (int k = 1; k <= order; ++k)
        neg_log[k] = Rational(1, k);
    return to_poly_series(neg_log) * exp_scaled(Poly::x(), neg_log);
}

PolySeries gf_harmonic_poly(int order)
{
    // -log(1-t)/t = sum t^k/(k+1); (1-t)^{x-1} = exp((1-x)(-log(1-t)))
    RatSeries lead(order), neg_log(order);
    for (int k = 0; k <= order; ++k)
        lead[k] = Rational(1, k + 1);
    for (int k = 1; k <= order; ++k)
        neg_log[k] = Rational(1, k);
    return to_poly_series(lead) * exp_scaled(Poly(Rational(1)) - Poly::x(), neg_log);
}

std::vector<Poly> egf_coefficients(const PolySeries& s)
{
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(s.order()) + 1);
    for (int n = 0; n <= s.order(); ++n)
        out.push_back(s[n] * factorial(n));
    return out;
}

} // namespace polycauchy
