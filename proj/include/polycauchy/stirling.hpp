#ifndef POLYCAUCHY_STIRLING_HPP
#define POLYCAUCHY_STIRLING_HPP

#include <filesystem>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "polycauchy/polynomial.hpp"
#include "polycauchy/rational.hpp"

namespace polycauchy {

enum class TriangleKind { stirling1_unsigned, stirling2, central_u, lah };

std::string_view to_string(TriangleKind kind);

/// Row-memoized integer triangle. Rows are grown on demand under an
/// exclusive lock; lookups of already-present rows take a shared lock.
///
/// central_u follows u(0,0) = 1, u(n+1,m) = u(n,m-1) - n^2 u(n,m), so
/// u(n,0) = 0 for n >= 1.
class TriangleCache {
public:
    explicit TriangleCache(TriangleKind kind);

    TriangleKind kind() const { return kind_; }

    /// Entry (n, m); zero when m < 0 or m > n. Throws std::domain_error for n < 0.
    Rational at(int n, int m) const;

    /// Number of rows currently held.
    int rows() const;

    /// Writes rows 0..rows()-1 as versioned TSV.
    void save(const std::filesystem::path& path) const;
    /// Replaces contents with a file written by save(); throws std::runtime_error on bad input.
    void load(const std::filesystem::path& path);

    /// Process-wide cache for a kind.
    static TriangleCache& shared(TriangleKind kind);

private:
    void grow_to(int n) const;
    std::vector<Rational> next_row(const std::vector<Rational>& prev, int n) const;

    TriangleKind kind_;
    mutable std::shared_mutex mutex_;
    mutable std::vector<std::vector<Rational>> rows_;
};

/// Saves or loads every shared triangle under dir (file per kind). Missing files are skipped.
void save_triangle_caches(const std::filesystem::path& dir);
void load_triangle_caches(const std::filesystem::path& dir);

/// Unsigned Stirling number of the first kind [n, m].
Rational stirling1(int n, int m);
/// Stirling number of the second kind {n, m}.
Rational stirling2(int n, int m);
/// Lah number L(n, m) = (n!/m!) C(n-1, m-1).
Rational lah(int n, int m);
/// Central factorial number u(n, m) = t(2n, 2m); domain error unless 0 <= m <= n.
Rational central_u(int n, int m);

/// Generalized Stirling polynomial of the first kind:
/// sum_i C(i+m, m) [n, i+m] x^i. Domain error unless 0 <= m <= n.
const Poly& gsn1(int n, int m);
/// Generalized Stirling polynomial of the second kind:
/// sum_i C(n, i) {n-i, m} x^i. Domain error unless 0 <= m <= n.
const Poly& gsn2(int n, int m);

/// gsn1(n, m) evaluated at x0.
Rational gsn1_at(int n, int m, const Rational& x0);
Rational gsn2_at(int n, int m, const Rational& x0);

enum class StirlingKind { first, second };

/// Bivariate Stirling polynomial in (y, q). Outer variable y, inner q.
///
/// First kind: sum_i C(i+m, m) [n, i+m] y^i q^(n-m-i), stored as is (q_power = 0).
/// Second kind: the stored numerator is q^m {n m}_(y,q)
/// = (1/m!) sum_l (-1)^(m-l) C(m, l) (y + l q)^n and q_power = m.
struct BivariateStirling {
    StirlingKind kind;
    int n;
    int m;
    BivariatePoly numerator;
    int q_power;

    /// Value at (y0, q0). For the second kind q0 = 0 is a domain error.
    Rational at(const Rational& y0, const Rational& q0) const;
    /// Polynomial in y for fixed q0 (same q0 restriction).
    Poly in_y(const Rational& q0) const;
};

BivariateStirling gsn_bivariate(StirlingKind kind, int n, int m);

/// r-Whitney numbers via m^(n-l) times the generalized Stirling value at r/m.
/// First kind gives w_{m,r}(n,l), second kind W_{m,r}(n,l). Domain error when m == 0.
Rational whitney(StirlingKind kind, const Rational& m, const Rational& r, int n, int l);

/// (n!/m!) C(x+n-1, n-m) as a polynomial in x. Domain error unless 0 <= m <= n.
Poly a_number(int n, int m);

} // namespace polycauchy

#endif
