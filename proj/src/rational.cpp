#include "polycauchy/rational.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <deque>

namespace polycauchy {

Rational::Rational(long n, long d)
{
    if (d == 0)
        throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(n, 1);
    value_ /= d;
}

Rational::Rational(mpq_class v) : value_(std::move(v))
{
    if (value_.get_den() == 0)
        throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
}

namespace {

bool is_digit_string(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digit_string(num) || !is_digit_string(den))
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw std::domain_error("Rational: inverse of zero");
    mpq_class q = 1 / value_;
    return Rational(std::move(q));
}

Rational Rational::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

long Rational::to_long() const
{
    if (!is_integer() || !value_.get_num().fits_slong_p())
        throw std::range_error("Rational: " + to_string() + " is not a machine integer");
    return value_.get_num().get_si();
}

const Rational& factorial(int n)
{
    if (n < 0)
        throw std::domain_error("factorial of a negative integer");
    static std::mutex mu;
    static std::deque<Rational> table{Rational(1)};
    std::lock_guard lock(mu);
    while (static_cast<int>(table.size()) <= n) {
        const long next = static_cast<long>(table.size());
        table.push_back(table.back() * Rational(next));
    }
    return table[static_cast<std::size_t>(n)];
}

Rational binomial(int n, int k)
{
    if (n < 0)
        throw std::domain_error("binomial: negative top argument, use binom_scalar");
    if (k < 0 || k > n)
        return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational binom_scalar(const Rational& r, int n)
{
    if (n < 0)
        throw std::domain_error("binom_scalar: negative lower argument");
    Rational acc(1);
    for (int j = 0; j < n; ++j)
        acc *= r - Rational(j);
    return acc / factorial(n);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace polycauchy
