#ifndef POLYCAUCHY_POLYNOMIAL_HPP
#define POLYCAUCHY_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polycauchy/rational.hpp"

namespace polycauchy {

/// Dense univariate polynomial over a commutative ring R.
///
/// Coefficient i multiplies x^i. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and equality is structural. R must
/// provide value-initialised zero, construction from Rational, + - * and ==.
/// Nesting (Polynomial<Polynomial<Rational>>) gives the two-variable ring
/// used for integral representations: outer variable first.
template <typename R>
class Polynomial {
public:
    using coefficient_type = R;

    /// Degree reported for the zero polynomial.
    static constexpr int zero_degree = -1;

    Polynomial() = default;
    Polynomial(R constant) { coeffs_.push_back(std::move(constant)); trim(); }
    Polynomial(std::initializer_list<R> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial x() { return Polynomial({R{}, R(Rational(1))}); }

    static Polynomial monomial(R c, int degree)
    {
        if (degree < 0)
            throw std::domain_error("Polynomial::monomial: negative degree");
        std::vector<R> v(static_cast<std::size_t>(degree) + 1);
        v.back() = std::move(c);
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^i; zero outside [0, degree].
    R coeff(int i) const
    {
        if (i < 0 || i >= static_cast<int>(coeffs_.size()))
            return R{};
        return coeffs_[static_cast<std::size_t>(i)];
    }

    std::span<const R> coefficients() const { return coeffs_; }

    /// Horner evaluation.
    R operator()(const R& x) const
    {
        R acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial& operator*=(const R& s)
    {
        for (auto& c : coeffs_)
            c *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == R{})
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(Polynomial a, const R& s) { return a *= s; }
    friend Polynomial operator*(const R& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == R{})
            coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

using Poly = Polynomial<Rational>;
/// Two-variable polynomial: outer variable first, inner variable in the coefficients.
using BivariatePoly = Polynomial<Poly>;

/// p^e for e >= 0.
template <typename R>
Polynomial<R> pow(Polynomial<R> base, int e)
{
    if (e < 0)
        throw std::domain_error("polynomial pow: negative exponent");
    Polynomial<R> acc(R(Rational(1)));
    while (e > 0) {
        if (e & 1)
            acc *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return acc;
}

/// p(q(x)).
template <typename R>
Polynomial<R> compose(const Polynomial<R>& p, const Polynomial<R>& q)
{
    Polynomial<R> acc;
    const auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * q + Polynomial<R>(*it);
    return acc;
}

/// p(scale*x + shift).
template <typename R>
Polynomial<R> compose_linear(const Polynomial<R>& p, const R& scale, const R& shift)
{
    return compose(p, Polynomial<R>({shift, scale}));
}

/// p(s*x + a) with s = +1 or -1.
template <typename R>
Polynomial<R> affine_compose(const Polynomial<R>& p, int s, const R& a)
{
    if (s != 1 && s != -1)
        throw std::domain_error("affine_compose: sign must be +1 or -1");
    return compose_linear(p, R(Rational(s)), a);
}

/// p(x + a)
template <typename R>
Polynomial<R> shift(const Polynomial<R>& p, const R& a)
{
    return compose_linear(p, R(Rational(1)), a);
}

/// p(-x)
template <typename R>
Polynomial<R> reflect(const Polynomial<R>& p)
{
    std::vector<R> c(p.coefficients().begin(), p.coefficients().end());
    for (std::size_t i = 1; i < c.size(); i += 2)
        c[i] = -c[i];
    return Polynomial<R>(std::move(c));
}

/// order-th formal derivative.
template <typename R>
Polynomial<R> derivative(const Polynomial<R>& p, int order = 1)
{
    if (order < 0)
        throw std::domain_error("derivative: negative order");
    if (order == 0)
        return p;
    const int d = p.degree();
    if (d < order)
        return {};
    std::vector<R> out(static_cast<std::size_t>(d - order + 1));
    for (int i = order; i <= d; ++i) {
        Rational falling(1);
        for (int j = 0; j < order; ++j)
            falling *= Rational(i - j);
        out[static_cast<std::size_t>(i - order)] = p.coeff(i) * R(falling);
    }
    return Polynomial<R>(std::move(out));
}

/// Antiderivative with zero constant term.
template <typename R>
Polynomial<R> antiderivative(const Polynomial<R>& p)
{
    if (p.is_zero())
        return {};
    std::vector<R> out(static_cast<std::size_t>(p.degree()) + 2);
    for (int i = 0; i <= p.degree(); ++i)
        out[static_cast<std::size_t>(i) + 1] = p.coeff(i) * R(Rational(1, i + 1));
    return Polynomial<R>(std::move(out));
}

/// Integral of p over [0, 1] in the outer variable: sum of c_i/(i+1).
template <typename R>
R integrate_01(const Polynomial<R>& p)
{
    R acc{};
    for (int i = 0; i <= p.degree(); ++i)
        acc += p.coeff(i) * R(Rational(1, i + 1));
    return acc;
}

/// Integral of p over [lo, hi].
template <typename R>
R integrate(const Polynomial<R>& p, const R& lo, const R& hi)
{
    const auto f = antiderivative(p);
    return f(hi) - f(lo);
}

/// Linear functional sending x^i to weights(i).
template <typename R, typename Weights>
R apply_moments(const Polynomial<R>& p, Weights&& weights)
{
    R acc{};
    for (int i = 0; i <= p.degree(); ++i)
        acc += p.coeff(i) * R(weights(i));
    return acc;
}

/// Embeds p as a polynomial whose coefficients are constants of the inner ring.
template <typename R>
Polynomial<Polynomial<R>> lift(const Polynomial<R>& p)
{
    std::vector<Polynomial<R>> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients())
        c.emplace_back(v);
    return Polynomial<Polynomial<R>>(std::move(c));
}

/// Applies f to every coefficient.
template <typename R, typename F>
auto map_coefficients(const Polynomial<R>& p, F&& f)
{
    using Out = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<Out> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients())
        c.push_back(f(v));
    return Polynomial<Out>(std::move(c));
}

/// binom(sign*x + shift, n) as a polynomial in x over R.
template <typename R>
Polynomial<R> binom_poly(const R& shift_value, int sign, int n)
{
    if (n < 0)
        throw std::domain_error("binom_poly: negative n");
    if (sign != 1 && sign != -1)
        throw std::domain_error("binom_poly: sign must be +1 or -1");
    Polynomial<R> acc(R(Rational(1)));
    for (int j = 0; j < n; ++j)
        acc *= Polynomial<R>({shift_value - R(Rational(j)), R(Rational(sign))});
    return acc * R(factorial(n).inverse());
}

/// binom(x + shift, n) over the rationals.
inline Poly binom_poly(const Rational& shift_value, int n) { return binom_poly<Rational>(shift_value, 1, n); }

/// (x)_n = x(x-1)...(x-n+1)
inline Poly falling_factorial(int n) { return binom_poly<Rational>(Rational(0), 1, n) * factorial(n); }

/// x^(n) = x(x+1)...(x+n-1)
inline Poly rising_factorial(int n) { return binom_poly<Rational>(Rational(n - 1), 1, n) * factorial(n); }

/// Rational evaluation helper (Horner).
inline Rational eval(const Poly& p, const Rational& x0) { return p(x0); }

/// Evaluate a two-variable polynomial: outer variable at outer0, inner at inner0.
inline Rational eval(const BivariatePoly& p, const Rational& outer0, const Rational& inner0)
{
    Rational acc;
    const auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * outer0 + (*it)(inner0);
    return acc;
}

/// Fix the inner variable, leaving a polynomial in the outer one.
inline Poly eval_inner(const BivariatePoly& p, const Rational& inner0)
{
    return map_coefficients(p, [&](const Poly& c) { return c(inner0); });
}

/// Fix the outer variable, leaving a polynomial in the inner one.
inline Poly eval_outer(const BivariatePoly& p, const Rational& outer0)
{
    return p(Poly(outer0));
}

/// Swaps the roles of outer and inner variables.
inline BivariatePoly transpose(const BivariatePoly& p)
{
    int inner_deg = -1;
    for (const auto& c : p.coefficients())
        inner_deg = std::max(inner_deg, c.degree());
    std::vector<Poly> out;
    for (int j = 0; j <= inner_deg; ++j) {
        std::vector<Rational> row;
        for (const auto& c : p.coefficients())
            row.push_back(c.coeff(j));
        out.emplace_back(std::move(row));
    }
    return BivariatePoly(std::move(out));
}

} // namespace polycauchy

#endif
