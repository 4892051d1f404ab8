#include "polycauchy/stirling.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "polycauchy/memo.hpp"

namespace polycauchy {

namespace {

constexpr std::string_view cache_magic = "# polycauchy-triangle v1";

void check_indices(const char* what, int n, int m)
{
    if (n < 0 || m < 0 || m > n)
        throw std::domain_error(std::string(what) + ": indices must satisfy 0 <= m <= n");
}

} // namespace

std::string_view to_string(TriangleKind kind)
{
    switch (kind) {
    case TriangleKind::stirling1_unsigned: return "stirling1";
    case TriangleKind::stirling2: return "stirling2";
    case TriangleKind::central_u: return "central-u";
    case TriangleKind::lah: return "lah";
    }
    return "unknown";
}

TriangleCache::TriangleCache(TriangleKind kind) : kind_(kind)
{
    rows_.push_back({Rational(1)});
}

std::vector<Rational> TriangleCache::next_row(const std::vector<Rational>& prev, int n) const
{
    // prev is row n; returns row n+1.
    std::vector<Rational> row(static_cast<std::size_t>(n) + 2);
    auto p = [&](int m) { return (m < 0 || m > n) ? Rational(0) : prev[static_cast<std::size_t>(m)]; };
    for (int m = 0; m <= n + 1; ++m) {
        Rational factor;
        switch (kind_) {
        case TriangleKind::stirling1_unsigned: factor = Rational(n); break;
        case TriangleKind::stirling2: factor = Rational(m); break;
        case TriangleKind::central_u: factor = Rational(-static_cast<long>(n) * n); break;
        case TriangleKind::lah: factor = Rational(n + m); break;
        }
        row[static_cast<std::size_t>(m)] = p(m - 1) + factor * p(m);
    }
    return row;
}

void TriangleCache::grow_to(int n) const
{
    {
        std::shared_lock lock(mutex_);
        if (static_cast<int>(rows_.size()) > n)
            return;
    }
    std::unique_lock lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) {
        const int last = static_cast<int>(rows_.size()) - 1;
        rows_.push_back(next_row(rows_.back(), last));
    }
}

Rational TriangleCache::at(int n, int m) const
{
    if (n < 0)
        throw std::domain_error("triangle: negative row index");
    if (m < 0 || m > n)
        return Rational(0);
    grow_to(n);
    std::shared_lock lock(mutex_);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

int TriangleCache::rows() const
{
    std::shared_lock lock(mutex_);
    return static_cast<int>(rows_.size());
}

void TriangleCache::save(const std::filesystem::path& path) const
{
    std::shared_lock lock(mutex_);
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write triangle cache: " + path.string());
    out << cache_magic << '\t' << to_string(kind_) << '\n';
    for (std::size_t n = 0; n < rows_.size(); ++n)
        for (std::size_t m = 0; m < rows_[n].size(); ++m)
            out << n << '\t' << m << '\t' << rows_[n][m] << '\n';
    if (!out)
        throw std::runtime_error("error writing triangle cache: " + path.string());
}

void TriangleCache::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read triangle cache: " + path.string());
    std::string line;
    const std::string header = std::string(cache_magic) + '\t' + std::string(to_string(kind_));
    if (!std::getline(in, line) || line != header)
        throw std::runtime_error("bad triangle cache header in " + path.string());
    std::vector<std::vector<Rational>> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::size_t n = 0, m = 0;
        std::string value;
        if (!(fields >> n >> m >> value))
            throw std::runtime_error("malformed triangle cache line in " + path.string() + ": " + line);
        if (n == rows.size())
            rows.emplace_back();
        if (n + 1 != rows.size() || m != rows.back().size())
            throw std::runtime_error("out-of-order triangle cache entry in " + path.string() + ": " + line);
        rows.back().push_back(Rational::parse(value));
    }
    for (std::size_t n = 0; n < rows.size(); ++n)
        if (rows[n].size() != n + 1)
            throw std::runtime_error("incomplete triangle cache row in " + path.string());
    if (rows.empty() || rows[0][0] != Rational(1))
        throw std::runtime_error("triangle cache does not start with row 0 = 1: " + path.string());
    std::unique_lock lock(mutex_);
    if (rows.size() > rows_.size())
        rows_ = std::move(rows);
}

TriangleCache& TriangleCache::shared(TriangleKind kind)
{
    static TriangleCache s1(TriangleKind::stirling1_unsigned);
    static TriangleCache s2(TriangleKind::stirling2);
    static TriangleCache cu(TriangleKind::central_u);
    static TriangleCache lh(TriangleKind::lah);
    switch (kind) {
    case TriangleKind::stirling1_unsigned: return s1;
    case TriangleKind::stirling2: return s2;
    case TriangleKind::central_u: return cu;
    case TriangleKind::lah: return lh;
    }
    return s1;
}

namespace {
constexpr TriangleKind all_kinds[] = {TriangleKind::stirling1_unsigned, TriangleKind::stirling2,
                                      TriangleKind::central_u, TriangleKind::lah};

std::filesystem::path cache_file(const std::filesystem::path& dir, TriangleKind kind)
{
    return dir / (std::string(to_string(kind)) + ".tsv");
}
} // namespace

void save_triangle_caches(const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    for (auto kind : all_kinds)
        TriangleCache::shared(kind).save(cache_file(dir, kind));
}

void load_triangle_caches(const std::filesystem::path& dir)
{
    for (auto kind : all_kinds) {
        const auto file = cache_file(dir, kind);
        if (std::filesystem::exists(file))
            TriangleCache::shared(kind).load(file);
    }
}

Rational stirling1(int n, int m) { return TriangleCache::shared(TriangleKind::stirling1_unsigned).at(n, m); }
Rational stirling2(int n, int m) { return TriangleCache::shared(TriangleKind::stirling2).at(n, m); }
Rational lah(int n, int m) { return TriangleCache::shared(TriangleKind::lah).at(n, m); }

Rational central_u(int n, int m)
{
    check_indices("central_u", n, m);
    return TriangleCache::shared(TriangleKind::central_u).at(n, m);
}

const Poly& gsn1(int n, int m)
{
    check_indices("gsn1", n, m);
    static Memo<std::pair<int, int>, Poly> memo;
    return memo.get({n, m}, [&] {
        std::vector<Rational> c(static_cast<std::size_t>(n - m) + 1);
        for (int i = 0; i <= n - m; ++i)
            c[static_cast<std::size_t>(i)] = binomial(i + m, m) * stirling1(n, i + m);
        return Poly(std::move(c));
    });
}

const Poly& gsn2(int n, int m)
{
    check_indices("gsn2", n, m);
    static Memo<std::pair<int, int>, Poly> memo;
    return memo.get({n, m}, [&] {
        std::vector<Rational> c(static_cast<std::size_t>(n - m) + 1);
        for (int i = 0; i <= n - m; ++i)
            c[static_cast<std::size_t>(i)] = binomial(n, i) * stirling2(n - i, m);
        return Poly(std::move(c));
    });
}

Rational gsn1_at(int n, int m, const Rational& x0) { return gsn1(n, m)(x0); }
Rational gsn2_at(int n, int m, const Rational& x0) { return gsn2(n, m)(x0); }

Rational BivariateStirling::at(const Rational& y0, const Rational& q0) const
{
    if (q_power > 0 && q0.is_zero())
        throw std::domain_error("bivariate Stirling pair: q must be nonzero");
    return eval(numerator, y0, q0) / q0.pow(q_power);
}

Poly BivariateStirling::in_y(const Rational& q0) const
{
    if (q_power > 0 && q0.is_zero())
        throw std::domain_error("bivariate Stirling pair: q must be nonzero");
    return eval_inner(numerator, q0) * q0.pow(q_power).inverse();
}

BivariateStirling gsn_bivariate(StirlingKind kind, int n, int m)
{
    check_indices("gsn_bivariate", n, m);
    if (kind == StirlingKind::first) {
        std::vector<Poly> c(static_cast<std::size_t>(n - m) + 1);
        for (int i = 0; i <= n - m; ++i)
            c[static_cast<std::size_t>(i)] = Poly::monomial(binomial(i + m, m) * stirling1(n, i + m), n - m - i);
        return {kind, n, m, BivariatePoly(std::move(c)), 0};
    }
    // (y + l q)^n as a polynomial in y over Q[q].
    BivariatePoly acc;
    for (int l = 0; l <= m; ++l) {
        const BivariatePoly base({Poly({Rational(0), Rational(l)}), Poly(Rational(1))});
        acc += pow(base, n) * Poly(sign_power(m - l) * binomial(m, l));
    }
    return {kind, n, m, acc * Poly(factorial(m).inverse()), m};
}

Rational whitney(StirlingKind kind, const Rational& m, const Rational& r, int n, int l)
{
    if (m.is_zero())
        throw std::domain_error("whitney: m must be nonzero");
    check_indices("whitney", n, l);
    const Rational x0 = r / m;
    const Rational v = kind == StirlingKind::first ? gsn1_at(n, l, x0) : gsn2_at(n, l, x0);
    return m.pow(n - l) * v;
}

Poly a_number(int n, int m)
{
    check_indices("a_number", n, m);
    return binom_poly(Rational(n - 1), n - m) * (factorial(n) / factorial(m));
}

} // namespace polycauchy
