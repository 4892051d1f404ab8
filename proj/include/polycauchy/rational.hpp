#ifndef POLYCAUCHY_RATIONAL_HPP
#define POLYCAUCHY_RATIONAL_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polycauchy {

/// Arbitrary-precision fraction kept in canonical form: positive
/// denominator, coprime numerator/denominator. Integers are Rationals
/// with denominator 1; there is no separate integer scalar.
class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}
    Rational(int n) : value_(static_cast<long>(n)) {}
    Rational(unsigned long n) : value_(n) {}

    /// n/d; throws std::domain_error when d == 0.
    Rational(long n, long d);

    explicit Rational(const mpz_class& n) : value_(n) {}
    explicit Rational(mpq_class v);

    /// Parses "p/q" or "p" (optional leading sign, no whitespace).
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return value_.get_num(); }
    const mpz_class& den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Throws std::domain_error for zero.
    Rational inverse() const;
    /// Integer power; negative exponents invert (zero base then throws).
    Rational pow(long e) const;

    /// "p/q", denominator omitted when 1.
    std::string to_string() const;

    /// Value as a long; throws std::range_error unless an integer fitting in a long.
    long to_long() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_;
};

/// n! for n >= 0 (memoized).
const Rational& factorial(int n);

/// Integer binomial C(n, k) for n >= 0; zero when k < 0 or k > n.
Rational binomial(int n, int k);

/// Generalized binomial r(r-1)...(r-n+1)/n! with a rational top argument.
Rational binom_scalar(const Rational& r, int n);

/// (-1)^e
inline Rational sign_power(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Rational abs(const Rational& r);

} // namespace polycauchy

template <>
struct std::hash<polycauchy::Rational> {
    std::size_t operator()(const polycauchy::Rational& r) const noexcept
    {
        return std::hash<std::string>{}(r.to_string());
    }
};

#endif
