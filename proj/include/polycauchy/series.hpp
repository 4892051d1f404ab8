#ifndef POLYCAUCHY_SERIES_HPP
#define POLYCAUCHY_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "polycauchy/polynomial.hpp"
#include "polycauchy/rational.hpp"

namespace polycauchy {

/// Default truncation order for generating-function oracles.
inline constexpr int default_series_order = 12;

inline Rational ring_inverse(const Rational& r)
{
    return r.inverse();
}

/// Only nonzero constants are units in Q[x].
inline Poly ring_inverse(const Poly& p)
{
    if (p.degree() != 0)
        throw std::domain_error("series: constant term is not invertible");
    return Poly(p.coeff(0).inverse());
}

/// Power series truncated after t^N. Stores exactly N+1 coefficients.
template <typename R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(checked(order) + 1) {}
    TruncatedSeries(int order, std::vector<R> coeffs) : c_(std::move(coeffs))
    {
        c_.resize(static_cast<std::size_t>(checked(order)) + 1);
    }

    static TruncatedSeries constant(int order, R value)
    {
        TruncatedSeries s(order);
        s.c_[0] = std::move(value);
        return s;
    }

    /// The series t.
    static TruncatedSeries variable(int order)
    {
        TruncatedSeries s(order);
        if (order >= 1)
            s.c_[1] = R(Rational(1));
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const R& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
    R& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }

    TruncatedSeries operator-() const
    {
        TruncatedSeries r = *this;
        for (auto& v : r.c_)
            v = -v;
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o)
    {
        same_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o)
    {
        same_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }

    TruncatedSeries& operator*=(const R& s)
    {
        for (auto& v : c_)
            v *= s;
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const R& s) { return a *= s; }
    friend TruncatedSeries operator*(const R& s, TruncatedSeries a) { return a *= s; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        a.same_order(b);
        const int n = a.order();
        TruncatedSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a[i] == R{})
                continue;
            for (int j = 0; i + j <= n; ++j)
                r[i + j] += a[i] * b[j];
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

private:
    static int checked(int order)
    {
        if (order < 0)
            throw std::domain_error("series: negative order");
        return order;
    }

    void same_order(const TruncatedSeries& o) const
    {
        if (o.c_.size() != c_.size())
            throw std::invalid_argument("series: mismatched truncation orders");
    }

    std::vector<R> c_;
};

/// 1/s; the constant term must be a unit of R.
template <typename R>
TruncatedSeries<R> reciprocal(const TruncatedSeries<R>& s)
{
    const int n = s.order();
    const R inv0 = ring_inverse(s[0]);
    TruncatedSeries<R> r(n);
    r[0] = inv0;
    for (int i = 1; i <= n; ++i) {
        R acc{};
        for (int j = 1; j <= i; ++j)
            acc += s[j] * r[i - j];
        r[i] = -(acc * inv0);
    }
    return r;
}

/// exp(s) for s with zero constant term, via n f_n = sum_k k s_k f_{n-k}.
template <typename R>
TruncatedSeries<R> exp(const TruncatedSeries<R>& s)
{
    if (!(s[0] == R{}))
        throw std::domain_error("series exp: nonzero constant term");
    const int n = s.order();
    TruncatedSeries<R> f(n);
    f[0] = R(Rational(1));
    for (int i = 1; i <= n; ++i) {
        R acc{};
        for (int k = 1; k <= i; ++k)
            acc += s[k] * f[i - k] * R(Rational(k));
        f[i] = acc * R(Rational(1, i));
    }
    return f;
}

/// log(1+s) for s with zero constant term.
template <typename R>
TruncatedSeries<R> log1p(const TruncatedSeries<R>& s)
{
    if (!(s[0] == R{}))
        throw std::domain_error("series log1p: nonzero constant term");
    const int n = s.order();
    TruncatedSeries<R> acc(n);
    TruncatedSeries<R> power = s;
    for (int k = 1; k <= n; ++k) {
        acc += power * R(Rational(k % 2 == 1 ? 1 : -1, k));
        power = power * s;
    }
    return acc;
}

/// s^e for e >= 0.
template <typename R>
TruncatedSeries<R> pow_int(const TruncatedSeries<R>& s, int e)
{
    if (e < 0)
        throw std::domain_error("series pow_int: negative exponent");
    auto acc = TruncatedSeries<R>::constant(s.order(), R(Rational(1)));
    auto base = s;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return acc;
}

using RatSeries = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<Poly>;

/// log(1+t) = t - t^2/2 + ...
RatSeries log1p_series(int order);

/// Lifts a rational series to polynomial coefficients.
PolySeries to_poly_series(const RatSeries& s);

/// t / log(1+t)
RatSeries t_over_log1p(int order);

/// Coefficient of t^n is c_n(x)/n!.
PolySeries gf_cauchy1(int order = default_series_order);
/// Coefficient of t^n is the second-kind polynomial divided by n!.
PolySeries gf_cauchy2(int order = default_series_order);
/// Coefficient of t^n is B_n^(alpha)(x)/n!.
PolySeries gf_gen_bernoulli(int alpha, int order = default_series_order);
/// Coefficient of t^n is H_n^(x) (hyperharmonic polynomial).
PolySeries gf_hyperharmonic(int order = default_series_order);
/// Coefficient of t^m is the harmonic polynomial H_m(x).
PolySeries gf_harmonic_poly(int order = default_series_order);

/// n! times coefficient n, for all n up to the order.
std::vector<Poly> egf_coefficients(const PolySeries& s);

} // namespace polycauchy

#endif
