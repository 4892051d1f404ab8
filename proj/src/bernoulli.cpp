#include "polycauchy/bernoulli.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "polycauchy/memo.hpp"
#include "polycauchy/series.hpp"
#include "polycauchy/stirling.hpp"

namespace polycauchy {

namespace {

class GenBernoulliTable {
public:
    Poly get(int n, int alpha)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = rows_.find(alpha); it != rows_.end() && static_cast<int>(it->second.size()) > n)
                return it->second[static_cast<std::size_t>(n)];
        }
        std::unique_lock lock(mutex_);
        auto& row = rows_[alpha];
        if (static_cast<int>(row.size()) <= n) {
            const int order = std::max({n, 2 * static_cast<int>(row.size()), default_series_order});
            row = egf_coefficients(gf_gen_bernoulli(alpha, order));
        }
        return row[static_cast<std::size_t>(n)];
    }

private:
    std::shared_mutex mutex_;
    std::map<int, std::vector<Poly>> rows_;
};

GenBernoulliTable& gen_table()
{
    static GenBernoulliTable t;
    return t;
}

void check_k(int k)
{
    if (k < 1)
        throw std::domain_error("poly-Bernoulli: k must be >= 1");
}

void check_n(int n)
{
    if (n < 0)
        throw std::domain_error("Bernoulli: n must be >= 0");
}

} // namespace

Rational bernoulli_number(int n)
{
    return bernoulli_poly(n).coeff(0);
}

Poly bernoulli_poly(int n)
{
    return gen_bernoulli_poly(n, 1);
}

Poly gen_bernoulli_poly(int n, int alpha)
{
    check_n(n);
    if (alpha < 0)
        throw std::domain_error("gen_bernoulli_poly: alpha must be >= 0");
    return gen_table().get(n, alpha);
}

Poly power_sum_poly(int n)
{
    check_n(n);
    const Poly b = bernoulli_poly(n + 1);
    return (shift(b, Rational(1)) - Poly(b(Rational(1)))) * Rational(1, n + 1);
}

Poly euler_poly(int n)
{
    check_n(n);
    const Poly b = bernoulli_poly(n + 1);
    const Poly half = compose_linear(b, Rational(1, 2), Rational(0));
    return (b - half * Rational(2).pow(n + 1)) * Rational(2, n + 1);
}

Poly poly_bernoulli_gsn(int n, int k)
{
    check_n(n);
    check_k(k);
    static Memo<std::pair<int, int>, Poly> memo;
    return memo.get({n, k}, [&] {
        Poly acc;
        for (int m = 0; m <= n; ++m)
            acc += gsn2(n, m) * (sign_power(m) * factorial(m) * Rational(m + 1).pow(-k));
        return acc * sign_power(n);
    });
}

Poly poly_bernoulli_kl(int n, int k)
{
    check_n(n);
    check_k(k);
    static Memo<std::pair<int, int>, Poly> memo;
    return memo.get({n, k}, [&] {
        Poly acc;
        for (int m = 0; m <= n; ++m) {
            std::vector<Rational> inner(static_cast<std::size_t>(m) + 1);
            for (int i = 0; i <= m; ++i)
                inner[static_cast<std::size_t>(i)] = binomial(m, i) * sign_power(i) * Rational(m - i + 1).pow(-k);
            acc += Poly(std::move(inner)) * (sign_power(m) * factorial(m) * stirling2(n, m));
        }
        return acc * sign_power(n);
    });
}

Poly multiparam_poly_bernoulli(const MultiParam& p)
{
    p.validate();
    if (p.q.is_zero())
        throw std::domain_error("multiparam_poly_bernoulli: q must be nonzero");
    Poly acc;
    for (int m = 0; m <= p.n; ++m) {
        const Rational s = gsn_bivariate(StirlingKind::second, p.n, m).at(p.y, p.q);
        acc += c_aux_poly_L(m + p.a - 1, p.L) * (factorial(m) * s);
    }
    return acc * sign_power(p.n);
}

} // namespace polycauchy
