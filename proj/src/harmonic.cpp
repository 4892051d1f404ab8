#include "polycauchy/harmonic.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "polycauchy/memo.hpp"
#include "polycauchy/series.hpp"

namespace polycauchy {

Poly hyperharmonic_poly(int n)
{
    if (n < 0)
        throw std::domain_error("hyperharmonic_poly: n must be >= 0");
    static Memo<int, Poly> memo;
    return memo.get(n, [n] {
        Poly acc;
        for (int t = 1; t <= n; ++t)
            acc += binom_poly(Rational(n - t - 1), n - t) * Rational(1, t);
        return acc;
    });
}

Rational harmonic_number(int n)
{
    if (n < 0)
        throw std::domain_error("harmonic_number: n must be >= 0");
    Rational acc;
    for (int i = 1; i <= n; ++i)
        acc += Rational(1, i);
    return acc;
}

Poly harmonic_poly(int m)
{
    if (m < 0)
        throw std::domain_error("harmonic_poly: m must be >= 0");
    static std::mutex mutex;
    static std::vector<Poly> table;
    std::lock_guard lock(mutex);
    if (static_cast<int>(table.size()) <= m) {
        const int order = std::max({m, 2 * static_cast<int>(table.size()), default_series_order});
        const auto s = gf_harmonic_poly(order);
        table.clear();
        for (int i = 0; i <= order; ++i)
            table.push_back(s[i]);
    }
    return table[static_cast<std::size_t>(m)];
}

} // namespace polycauchy
