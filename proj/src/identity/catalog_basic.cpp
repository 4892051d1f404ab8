#include <random>

#include "polycauchy/golden.hpp"
#include "registry.hpp"

namespace polycauchy::identity {

using namespace cat;

namespace {

// Alternating-coefficient form of [n m] at -x.
Poly g1_negated_explicit(int n, int m)
{
    std::vector<Rational> c;
    for (int i = 0; i <= n - m; ++i)
        c.push_back(sgn(i) * binomial(i + m, m) * stirling1(n, i + m));
    return Poly(std::move(c));
}

// r-Stirling triangles straight from their recurrences.
Rational r_stirling(StirlingKind kind, int n, int m, int r)
{
    if (n < r || m < r || m > n)
        return Rational(0);
    std::vector<Rational> row(static_cast<std::size_t>(n + 1));
    row[static_cast<std::size_t>(r)] = Rational(1);
    for (int j = r + 1; j <= n; ++j) {
        std::vector<Rational> next(row.size());
        for (int l = r; l <= j; ++l) {
            const Rational prev = l > r ? row[static_cast<std::size_t>(l - 1)] : Rational(0);
            const Rational same = row[static_cast<std::size_t>(l)];
            next[static_cast<std::size_t>(l)] = prev + (kind == StirlingKind::first ? Rational(j - 1) : Rational(l)) * same;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(m)];
}

// Deterministic rational sequence of length len.
std::vector<Rational> sample_sequence(unsigned seed, int len)
{
    std::mt19937 gen(seed);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    std::vector<Rational> out;
    for (int i = 0; i < len; ++i) {
        const long nv = num(gen);
        const long dv = den(gen);
        out.emplace_back(nv, dv);
    }
    return out;
}

// (n!/m!) C(x+n-1, n-m).
Poly A(int n, int m)
{
    if (m < 0 || m > n)
        return Poly();
    return binom_poly(Rational(n - 1), n - m) * (factorial(n) / factorial(m));
}

Rational w_number(const Rational& m, const Rational& r, int n, int l)
{
    Rational acc;
    for (int j = l; j <= n; ++j)
        acc += binomial(j, l) * m.pow(n - j) * r.pow(j - l) * stirling1(n, j);
    return acc;
}

Rational W_number(const Rational& m, const Rational& r, int n, int l)
{
    Rational acc;
    for (int j = l; j <= n; ++j)
        acc += binomial(n, j) * m.pow(j - l) * r.pow(n - j) * stirling2(j, l);
    return acc;
}

ParameterGrid single(const GridDefaults& d, int lo = 0) { return grid_n(lo, d.max_n_single); }
ParameterGrid twice(const GridDefaults& d, int lo = 0) { return grid_n(lo, d.max_n_double); }

ParameterGrid n_m(int max_n, int lo = 0)
{
    return ParameterGrid().axis("n", lo, max_n).axis("m", 0, max_n).where("m<=n", [](const Point& p) {
        return le(p, "m", "n");
    });
}

ParameterGrid whitney_grid(const GridDefaults& d)
{
    return ParameterGrid()
        .axis("n", 0, d.max_n_double)
        .axis("m", d.whitney_m)
        .axis("r", -2, d.max_r);
}

void register_g01(Registry& reg)
{
    reg.add("G01.gsn-first", "c_n(x) = sum (-1)^(n-m)/(m+1) [n m]_x", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += G1(n, m) * (sgn(n - m) * inv(m + 1));
                return same(cauchy_poly(CauchyKind::first, n, 1, Construction::integral), rhs);
            });
    reg.add("G01.gsn-second", "c^_n(-x) = (-1)^n sum 1/(m+1) [n m]_x", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += G1(n, m) * inv(m + 1);
                return same(reflect(cauchy_poly(CauchyKind::second, n, 1, Construction::integral)), rhs * sgn(n));
            });
    reg.add("G01.r-specialization", "c_n(r) and c^_n(-r) through r-Stirling numbers [n+r, m+r]_r",
            {"n", "r"}, [](const GridDefaults& d) { return twice(d).axis("r", 0, d.max_r); },
            [](const Point& p) {
                const int n = p.i("n"), r = p.i("r");
                Rational a, b;
                for (int m = 0; m <= n; ++m) {
                    const Rational s = r_stirling(StirlingKind::first, n + r, m + r, r);
                    a += sgn(n - m) * inv(m + 1) * s;
                    b += inv(m + 1) * s;
                }
                return all_of({same(c1(n)(Rational(r)), a), same(c2(n)(Rational(-r)), sgn(n) * b)});
            });
    reg.add("G01.gsn-second-negated", "c^_n(x) = (-1)^n sum 1/(m+1) [n m]_{-x}", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += g1_negated_explicit(n, m) * inv(m + 1);
                return same(c2(n), rhs * sgn(n));
            });
    reg.add("G01.negated-gsn", "[n m]_{-x} = sum (-1)^i C(i+m,m) [n, i+m] x^i", {"n", "m"},
            [](const GridDefaults& d) { return n_m(d.max_n_single); },
            [](const Point& p) { return same(G1_neg(p.i("n"), p.i("m")), g1_negated_explicit(p.i("n"), p.i("m"))); });
    reg.add("G01.one-minus-x", "c^_n(x) = sum (-1)^(n-m)/(m+1) [n m]_{1-x}", {"n"},
            [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += sub(G1(n, m), -1, Rational(1)) * (sgn(n - m) * inv(m + 1));
                return same(c2(n), rhs);
            });
    reg.add("G01.kargin", "c^_n = sum (-1)^(n-m)/(m+1) [n+1, m+1]", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += sgn(n - m) * inv(m + 1) * stirling1(n + 1, m + 1);
                return same(cn2(n), rhs);
            });
    reg.add("G01.numbers-x0", "c_n and c^_n as Stirling sums at x = 0", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational a, b;
                for (int m = 0; m <= n; ++m) {
                    a += sgn(n - m) * inv(m + 1) * stirling1(n, m);
                    b += inv(m + 1) * stirling1(n, m);
                }
                return all_of({same(cn1(n), a), same(cn2(n), sgn(n) * b)});
            });
    reg.add("G01.inverse-first", "sum {n m}_x c_m(x) = 1/(n+1)", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly lhs;
                for (int m = 0; m <= n; ++m)
                    lhs += G2(n, m) * c1(m);
                return same(lhs, K(inv(n + 1)));
            });
    reg.add("G01.inverse-second", "sum {n m}_x c^_m(-x) = (-1)^n/(n+1)", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly lhs;
                for (int m = 0; m <= n; ++m)
                    lhs += G2(n, m) * reflect(c2(m));
                return same(lhs, K(sgn(n) * inv(n + 1)));
            });
    reg.add("G01.inverse-numbers", "sum {n m} c_m = 1/(n+1), sum {n m} c^_m = (-1)^n/(n+1)", {"n"},
            [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational a, b;
                for (int m = 0; m <= n; ++m) {
                    a += stirling2(n, m) * cn1(m);
                    b += stirling2(n, m) * cn2(m);
                }
                return all_of({same(a, inv(n + 1)), same(b, sgn(n) * inv(n + 1))});
            });
    reg.add("G01.orthogonality", "sum (-1)^(n-l) [n l]_x {l m}_x = sum (-1)^(n-l) {n l}_x [l m]_x = delta", {"n", "m"},
            [](const GridDefaults&) { return n_m(10); },
            [](const Point& p) {
                const int n = p.i("n"), m = p.i("m");
                Poly a, b;
                for (int l = m; l <= n; ++l) {
                    a += G1(n, l) * G2(l, m) * sgn(n - l);
                    b += G2(n, l) * G1(l, m) * sgn(n - l);
                }
                return all_of({same(a, K(delta(n, m))), same(b, K(delta(n, m)))});
            });
    reg.add("G01.inversion", "f_n = sum (-1)^(n-m) [n m]_x g_m  <=>  g_n = sum {n m}_x f_m", {"n", "seed"},
            [](const GridDefaults& d) { return twice(d).axis("seed", 1, 4); },
            [](const Point& p) {
                const int n = p.i("n");
                const auto g = sample_sequence(static_cast<unsigned>(p.i("seed")), n + 1);
                // forward: f from g, then back
                std::vector<Poly> f(g.size());
                for (int j = 0; j <= n; ++j)
                    for (int m = 0; m <= j; ++m)
                        f[j] += G1(j, m) * (sgn(j - m) * g[m]);
                Poly back;
                for (int m = 0; m <= n; ++m)
                    back += G2(n, m) * f[m];
                std::vector<Poly> h(g.size());
                for (int j = 0; j <= n; ++j)
                    for (int m = 0; m <= j; ++m)
                        h[j] += G2(j, m) * g[m];
                Poly back2;
                for (int m = 0; m <= n; ++m)
                    back2 += G1(n, m) * h[m] * sgn(n - m);
                return all_of({same(back, K(g[n])), same(back2, K(g[n]))});
            });
    reg.add("G01.rep1", "[n m]_x = (n!/m!) d^m/dx^m C(x+n-1, n)", {"n", "m"},
            [](const GridDefaults& d) { return n_m(d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), m = p.i("m");
                return same(G1(n, m), derivative(binom_poly(Rational(n - 1), n), m) * (factorial(n) / factorial(m)));
            });
    reg.add("G01.gs22", "{n m}_x = (1/m!) sum (-1)^(m-l) C(m,l) (x+l)^n", {"n", "m"},
            [](const GridDefaults& d) { return n_m(d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), m = p.i("m");
                Poly rhs;
                for (int l = 0; l <= m; ++l)
                    rhs += pow(X() + K(Rational(l)), n) * (sgn(m - l) * binomial(m, l));
                return same(G2(n, m), rhs * factorial(m).inverse());
            });
    reg.add("G01.x0-reduction", "[n m]_0 = [n m], {n m}_0 = {n m}", {"n", "m"},
            [](const GridDefaults& d) { return n_m(d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), m = p.i("m");
                return all_of({same(G1(n, m)(Rational(0)), stirling1(n, m)), same(G2(n, m)(Rational(0)), stirling2(n, m))});
            });
    reg.add("G01.r-stirling", "[n m]_r = [n+r, m+r]_r, {n m}_r = {n+r, m+r}_r", {"n", "m", "r"},
            [](const GridDefaults& d) { return n_m(d.max_n_double).axis("r", 0, d.max_r); },
            [](const Point& p) {
                const int n = p.i("n"), m = p.i("m"), r = p.i("r");
                return all_of({same(gsn1_at(n, m, Rational(r)), r_stirling(StirlingKind::first, n + r, m + r, r)),
                               same(gsn2_at(n, m, Rational(r)), r_stirling(StirlingKind::second, n + r, m + r, r))});
            });
    reg.add("G01.reflection", "c^_n(x) = c_n(1-x)", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                return all_of({same(c2(n), sub(c1(n), -1, Rational(1))), same(c1(n), sub(c2(n), -1, Rational(1)))});
            });
    reg.add("G01.printed-tables", "published c_n(x), c^_n(x) for n <= 6 under every construction", {"n"},
            [](const GridDefaults& d) { return grid_n(0, std::min(6, d.max_n_single)); },
            [](const Point& p) {
                const int n = p.i("n");
                std::vector<Outcome> parts;
                for (auto kind : {CauchyKind::first, CauchyKind::second}) {
                    const Poly want = golden::cauchy_table(kind)[static_cast<std::size_t>(n)];
                    for (auto c : {Construction::gsn, Construction::integral, Construction::series,
                                   Construction::binomial_conv, Construction::stirling_expansion})
                        parts.push_back(same(cauchy_poly(kind, n, 1, c), want));
                }
                return all_of(std::move(parts));
            });
}

void register_g02(Registry& reg)
{
    auto coef = [](CauchyKind kind, int n) {
        std::vector<Rational> c;
        for (int i = 0; i <= n; ++i) {
            Rational acc;
            for (int m = i; m <= n; ++m)
                acc += (kind == CauchyKind::first ? sgn(m) : Rational(1)) * inv(m - i + 1) * binomial(m, i) * stirling1(n, m);
            c.push_back(sgn(n + i) * acc);
        }
        return Poly(std::move(c));
    };
    reg.add("G02.coef1", "c_{n,i} = (-1)^(n+i) sum (-1)^m/(m-i+1) C(m,i) [n m]", {"n"},
            [](const GridDefaults& d) { return single(d); },
            [coef](const Point& p) {
                const int n = p.i("n");
                return same(cauchy_poly(CauchyKind::first, n, 1, Construction::integral), coef(CauchyKind::first, n));
            });
    reg.add("G02.coef2", "c^_{n,i} = (-1)^(n+i) sum 1/(m-i+1) C(m,i) [n m]", {"n"},
            [](const GridDefaults& d) { return single(d); },
            [coef](const Point& p) {
                const int n = p.i("n");
                return same(cauchy_poly(CauchyKind::second, n, 1, Construction::integral), coef(CauchyKind::second, n));
            });
    reg.add("G02.constant-term", "c_{n,0} = c_n and c^_{n,0} = c^_n", {"n"}, [](const GridDefaults& d) { return single(d); },
            [coef](const Point& p) {
                const int n = p.i("n");
                return all_of({same(coef(CauchyKind::first, n).coeff(0), cn1(n)),
                               same(coef(CauchyKind::second, n).coeff(0), cn2(n))});
            });
    reg.add("G02.leading", "c_{n,n} = (-1)^n, c^_{n,n} = 1", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                return all_of({same(c1(n).coeff(n), sgn(n)), same(c2(n).coeff(n), Rational(1))});
            });
    reg.add("G02.subleading", "c_{n,n-1} = (-1)^n n(n-2)/2, c^_{n,n-1} = -n^2/2", {"n"},
            [](const GridDefaults& d) { return single(d, 1); },
            [](const Point& p) {
                const int n = p.i("n");
                return all_of({same(c1(n).coeff(n - 1), sgn(n) * Rational(n * (n - 2), 2)),
                               same(c2(n).coeff(n - 1), Rational(-n * n, 2))});
            });
}

void register_g03(Registry& reg)
{
    reg.add("G03.exp1", "c_n(x) = c_n + (-1)^n n sum 1/m [n-1, m-1] x^m", {"n"},
            [](const GridDefaults& d) { return single(d, 1); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs = K(cn1(n));
                for (int m = 1; m <= n; ++m)
                    rhs += Poly::monomial(sgn(n) * Rational(n) * inv(m) * stirling1(n - 1, m - 1), m);
                return same(c1(n), rhs);
            });
    reg.add("G03.exp2", "c^_n(x) = c_n + (-1)^n n sum (-1)^m/m [n-1, m-1] (x-1)^m", {"n"},
            [](const GridDefaults& d) { return single(d, 1); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs = K(cn1(n));
                for (int m = 1; m <= n; ++m)
                    rhs += pow(X() - K(Rational(1)), m) * (sgn(n + m) * Rational(n) * inv(m) * stirling1(n - 1, m - 1));
                return same(c2(n), rhs);
            });
    reg.add("G03.exp3", "c_n = delta_{n,1} + (-1)^(n+1) n sum [n-1, m-1] B_m/m", {"n"},
            [](const GridDefaults& d) { return single(d, 1); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational rhs = delta(n, 1);
                for (int m = 1; m <= n; ++m)
                    rhs += sgn(n + 1) * Rational(n) * stirling1(n - 1, m - 1) * bernoulli_number(m) * inv(m);
                return same(cn1(n), rhs);
            });
    reg.add("G03.exp4", "c_{n,i} = (-1)^n (n/i) [n-1, i-1]", {"n", "i"},
            [](const GridDefaults& d) {
                return ParameterGrid().axis("n", 1, d.max_n_single).axis("i", 1, d.max_n_single).where("i<=n", [](const Point& p) {
                    return le(p, "i", "n");
                });
            },
            [](const Point& p) {
                const int n = p.i("n"), i = p.i("i");
                return same(c1(n).coeff(i), sgn(n) * Rational(n, i) * stirling1(n - 1, i - 1));
            });
    reg.add("G03.coefficient-identity", "sum (-1)^(m-i)/(m-i+1) C(m,i) [n m] = (n/i) [n-1, i-1]", {"n", "i"},
            [](const GridDefaults& d) {
                return ParameterGrid().axis("n", 1, d.max_n_single).axis("i", 1, d.max_n_single).where("i<=n", [](const Point& p) {
                    return le(p, "i", "n");
                });
            },
            [](const Point& p) {
                const int n = p.i("n"), i = p.i("i");
                Rational lhs;
                for (int m = i; m <= n; ++m)
                    lhs += sgn(m - i) * inv(m - i + 1) * binomial(m, i) * stirling1(n, m);
                return same(lhs, Rational(n, i) * stirling1(n - 1, i - 1));
            });
    reg.add("G03.alternating-stirling", "sum_{m>=1} (-1)^m [n m] = 0 for n >= 2", {"n"},
            [](const GridDefaults& d) { return single(d, 2); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational lhs;
                for (int m = 1; m <= n; ++m)
                    lhs += sgn(m) * stirling1(n, m);
                return same(lhs, Rational(0));
            });
    reg.add("G03.integral-mean", "int_0^1 c_n = int_0^1 c^_n = c_n + (-1)^n n sum [n-1, m-1]/(m(m+1))", {"n"},
            [](const GridDefaults& d) { return single(d, 1); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational rhs = cn1(n);
                for (int m = 1; m <= n; ++m)
                    rhs += sgn(n) * Rational(n) * inv(static_cast<long>(m) * (m + 1)) * stirling1(n - 1, m - 1);
                return all_of({same(integrate_01(c1(n)), rhs), same(integrate_01(c2(n)), rhs)});
            });
    reg.add("G03.qi", "c_n = (-1)^(n+1) sum [n-1, m-1]/(m(m+1))", {"n"}, [](const GridDefaults& d) { return single(d, 1); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational rhs;
                for (int m = 1; m <= n; ++m)
                    rhs += inv(static_cast<long>(m) * (m + 1)) * stirling1(n - 1, m - 1);
                return same(cn1(n), sgn(n + 1) * rhs);
            });
    reg.add("G03.ind1", "n! C(x+1, n+1) = delta_{n,0} + sum (-1)^(n-m) [n m] S_m(x)", {"n"},
            [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs = K(delta(n, 0));
                for (int m = 0; m <= n; ++m)
                    rhs += power_sum_poly(m) * (sgn(n - m) * stirling1(n, m));
                return same(binom_poly(Rational(1), n + 1) * factorial(n), rhs);
            });
    reg.add("G03.poly3", "c_n(s)/n = delta_{n,1} + sum (-1)^(n-m) [n-1, m-1] int_0^1 S_{m-1}(x-s-1) dx", {"n", "s"},
            [](const GridDefaults& d) { return single(d, 1).axis("s", d.x_values); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational& s = p.r("s");
                Rational rhs = delta(n, 1);
                for (int m = 1; m <= n; ++m)
                    rhs += sgn(n - m) * stirling1(n - 1, m - 1) * integrate_01(shift(power_sum_poly(m - 1), -s - Rational(1)));
                return same(c1(n)(s) / Rational(n), rhs);
            });
}

void register_g04(Registry& reg)
{
    reg.add("G04.lm11", "int_0^1 S_{n-1}(x+y-1) dx = (y^n - B_n(1))/n", {"n", "y"},
            [](const GridDefaults& d) { return grid_n(1, std::min(10, d.max_n_single)).axis("y", d.x_values); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational& y = p.r("y");
                const Rational lhs = integrate_01(shift(power_sum_poly(n - 1), y - Rational(1)));
                return same(lhs, (y.pow(n) - bernoulli_poly(n)(Rational(1))) / Rational(n));
            });
    reg.add("G04.lm12", "int_0^1 S_{n-1}(-x+y-1) dx = ((y-1)^n - B_n(1))/n", {"n", "y"},
            [](const GridDefaults& d) { return grid_n(1, std::min(10, d.max_n_single)).axis("y", d.x_values); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational& y = p.r("y");
                const Rational lhs = integrate_01(sub(power_sum_poly(n - 1), -1, y - Rational(1)));
                return same(lhs, ((y - Rational(1)).pow(n) - bernoulli_poly(n)(Rational(1))) / Rational(n));
            });
    reg.add("G04.int1", "int_0^1 c_n = int_0^1 c^_n = (1-n) c_n", {"n"}, [](const GridDefaults& d) { return grid_n(0, std::min(10, d.max_n_single)); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational rhs = Rational(1 - n) * cn1(n);
                return all_of({same(integrate_01(c1(n)), rhs), same(integrate_01(c2(n)), rhs)});
            });
    reg.add("G04.bernoulli-integral", "int_a^b B_n = (B_{n+1}(b) - B_{n+1}(a))/(n+1)", {"n", "a", "b"},
            [](const GridDefaults& d) { return grid_n(0, std::min(10, d.max_n_single)).axis("a", d.x_values).axis("b", d.x_values); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational &a = p.r("a"), &b = p.r("b");
                const Poly next = bernoulli_poly(n + 1);
                return same(integrate(bernoulli_poly(n), a, b), (next(b) - next(a)) / Rational(n + 1));
            });
    reg.add("G04.bernoulli-difference", "B_n(x+1) - B_n(x) = n x^(n-1)", {"n"},
            [](const GridDefaults& d) { return single(d, 1); },
            [](const Point& p) {
                const int n = p.i("n");
                const Poly b = bernoulli_poly(n);
                return same(shift(b, Rational(1)) - b, Poly::monomial(Rational(n), n - 1));
            });
    reg.add("G04.defb", "S_{n-1}(x-1) = (B_n(x) - B_n(1))/n", {"n"}, [](const GridDefaults& d) { return single(d, 1); },
            [](const Point& p) {
                const int n = p.i("n");
                const Poly b = bernoulli_poly(n);
                return same(shift(power_sum_poly(n - 1), Rational(-1)), (b - K(b(Rational(1)))) * inv(n));
            });
    reg.add("G04.power-sum-values", "S_n(m) = 1^n + ... + m^n", {"n", "m"},
            [](const GridDefaults& d) { return single(d).axis("m", 1, 6); },
            [](const Point& p) {
                const int n = p.i("n"), m = p.i("m");
                Rational acc;
                for (int j = 1; j <= m; ++j)
                    acc += Rational(j).pow(n);
                return same(power_sum_poly(n)(Rational(m)), acc);
            });
    reg.add("G04.bernoulli-at-one", "B_m(1) = (-1)^m B_m", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                return same(bernoulli_poly(n)(Rational(1)), sgn(n) * bernoulli_number(n));
            });
}

void register_g05(Registry& reg)
{
    reg.add("G05.chen1", "c_n(x) = (-1)^n n! sum c^_m/m! C(x+n-1, n-m)", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += binom_poly(Rational(n - 1), n - m) * (cn2(m) / factorial(m));
                return same(c1(n), rhs * (sgn(n) * factorial(n)));
            });
    reg.add("G05.chen2", "c^_n(x) = n! sum (-1)^m c_m/m! C(x-m, n-m)", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += binom_poly(Rational(-m), n - m) * (sgn(m) * cn1(m) / factorial(m));
                return same(c2(n), rhs * factorial(n));
            });
    reg.add("G05.x01-bullets", "the four number identities from x = 0, 1 in chen1/chen2", {"n"},
            [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational pre = sgn(n) * factorial(n);
                std::vector<Outcome> parts;
                Rational a;
                for (int m = 0; m <= n; ++m)
                    a += binomial(n, m) * cn2(m) / factorial(m);
                parts.push_back(same(cn2(n), pre * a));
                if (n >= 1) {
                    Rational b, c;
                    for (int m = 1; m <= n; ++m) {
                        b += binomial(n - 1, m - 1) * cn2(m) / factorial(m);
                        c += binomial(n - 1, m - 1) * cn1(m) / factorial(m);
                    }
                    parts.push_back(same(cn1(n), pre * b));
                    parts.push_back(same(cn2(n), pre * c));
                }
                if (n >= 2) {
                    Rational e;
                    for (int m = 2; m <= n; ++m)
                        e += binomial(n - 2, m - 2) * cn1(m) / factorial(m);
                    parts.push_back(same(cn1(n), pre * e));
                }
                return all_of(std::move(parts));
            });
    reg.add("G05.alpha1", "[n k]_x = n! sum (-1)^(m-k)/m! [m k] C(x+n-1, n-m)", {"n", "m"},
            [](const GridDefaults& d) { return n_m(d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("m");
                Poly rhs;
                for (int m = k; m <= n; ++m)
                    rhs += binom_poly(Rational(n - 1), n - m) * (sgn(m - k) / factorial(m) * stirling1(m, k));
                return same(G1(n, k), rhs * factorial(n));
            });
    reg.add("G05.chen-summation", "sum C(m,k) [n m] x^(m-k) = sum (-1)^(m-k) [m k] A_x(n,m)", {"n", "m"},
            [](const GridDefaults& d) { return n_m(d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("m");
                Poly lhs, rhs;
                for (int m = k; m <= n; ++m) {
                    lhs += Poly::monomial(binomial(m, k) * stirling1(n, m), m - k);
                    rhs += A(n, m) * (sgn(m - k) * stirling1(m, k));
                }
                return same(lhs, rhs);
            });
    auto alpha2 = [](bool falling_weight) {
        return [falling_weight](const Point& p) {
            const int n = p.i("n"), k = p.i("m");
            Poly rhs;
            for (int m = k; m <= n; ++m) {
                const Rational w = falling_weight ? factorial(n) / factorial(m) : binomial(n, m);
                rhs += binom_poly(Rational(n - m - 1), n - m) * (w * stirling1(m, k));
            }
            return same(G1(n, k), rhs);
        };
    };
    reg.add("G05.alpha2", "[n k]_x = sum n!/m! [m k] C(x+n-m-1, n-m)", {"n", "m"},
            [](const GridDefaults& d) { return n_m(d.max_n_double); }, alpha2(true));
    reg.probe("G05.alpha2-weight", "weight in the symmetric transformation for [n k]_x: C(n,m) or n!/m!", {"n", "m"},
              [](const GridDefaults& d) { return n_m(d.max_n_double); },
              {{"binomial", alpha2(false)}, {"falling-factorial", alpha2(true)}});
    reg.add("G05.symm1", "c_n(x) = (-1)^n n! sum (-1)^m c_m/m! C(x+n-m-1, n-m)", {"n"},
            [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += binom_poly(Rational(n - m - 1), n - m) * (sgn(m) * cn1(m) / factorial(m));
                return same(c1(n), rhs * (sgn(n) * factorial(n)));
            });
    reg.add("G05.symm2", "c^_n(x) = n! sum c^_m/m! C(x, n-m)", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += binom_poly(Rational(0), n - m) * (cn2(m) / factorial(m));
                return same(c2(n), rhs * factorial(n));
            });
    reg.add("G05.x1-bullets", "c^_n = (-1)^n n! sum (-1)^m c_m/m!, c_n = c^_n + n c^_{n-1}", {"n"},
            [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational a;
                for (int m = 0; m <= n; ++m)
                    a += sgn(m) * cn1(m) / factorial(m);
                std::vector<Outcome> parts{same(cn2(n), sgn(n) * factorial(n) * a)};
                if (n >= 1)
                    parts.push_back(same(cn1(n), cn2(n) + Rational(n) * cn2(n - 1)));
                return all_of(std::move(parts));
            });
    reg.add("G05.integral-convolution", "int_0^1 c^_n = sum C(n,m) c^_m c_{n-m}", {"n"},
            [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += binomial(n, m) * cn2(m) * cn1(n - m);
                return same(integrate_01(c2(n)), rhs);
            });
    reg.add("G05.convolution", "sum C(n,m) c^_m c_{n-m} = sum C(n,m) c_m c^_{n-m} = (1-n) c_n", {"n"},
            [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational a, b;
                for (int m = 0; m <= n; ++m) {
                    a += binomial(n, m) * cn2(m) * cn1(n - m);
                    b += binomial(n, m) * cn1(m) * cn2(n - m);
                }
                return all_of({same(a, Rational(1 - n) * cn1(n)), same(b, Rational(1 - n) * cn1(n))});
            });
    reg.add("G05.c-at-two", "three expressions for c_n(2)", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational pre = sgn(n) * factorial(n);
                Rational a, b, c;
                for (int m = 0; m <= n; ++m) {
                    a += sgn(m) * cn2(m) / factorial(m);
                    b += binomial(n + 1, m + 1) * cn2(m) / factorial(m);
                    c += binomial(n, m) * cn1(m) / factorial(m);
                }
                const Rational lhs = c1(n)(Rational(2));
                return all_of({same(lhs, pre * a), same(lhs, pre * b), same(lhs, pre * c)});
            });
    reg.add("G05.a-number-first", "c_n(x) = (-1)^n sum c^_m A_x(n,m)", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += A(n, m) * cn2(m);
                return same(c1(n), rhs * sgn(n));
            });
    reg.add("G05.a-number-second", "c^_n(-x) = (-1)^n sum c_m A_x(n,m)", {"n"}, [](const GridDefaults& d) { return single(d); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += A(n, m) * cn1(m);
                return same(reflect(c2(n)), rhs * sgn(n));
            });
}

// Right-hand side of the second-kind recurrence without the (x-n) term.
Poly chen4_tail(int n, int k)
{
    Poly acc;
    for (int m = 0; m <= n; ++m)
        acc += binom_poly(Rational(-m - 1), n - m) * (sgn(m) * cn1(m + 1, k) / factorial(m));
    return acc * (-factorial(n));
}

void register_g06(Registry& reg)
{
    reg.add("G06.chen3", "c_{n+1}(x) = -(n+x) c_n(x) + (-1)^(n+1) n! sum c^_{m+1}/m! C(x+n, n-m)", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single - 1); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly tail;
                for (int m = 0; m <= n; ++m)
                    tail += binom_poly(Rational(n), n - m) * (cn2(m + 1) / factorial(m));
                const Poly rhs = -(X() + K(Rational(n))) * c1(n) + tail * (sgn(n + 1) * factorial(n));
                return same(c1(n + 1), rhs);
            });
    reg.add("G06.chen4", "c^_{n+1}(x) = (x-n) c^_n(x) - n! sum (-1)^m c_{m+1}/m! C(x-m-1, n-m)", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single - 1); },
            [](const Point& p) {
                const int n = p.i("n");
                return same(c2(n + 1), (X() - K(Rational(n))) * c2(n) + chen4_tail(n, 1));
            });
    reg.add("G06.guo", "A_x(n+1,m) = A_x(n,m-1) + (n+m+x) A_x(n,m)", {"n", "m"},
            [](const GridDefaults& d) {
                return ParameterGrid().axis("n", 0, d.max_n_single - 1).axis("m", 0, d.max_n_single).where("m<=n+1", [](const Point& p) {
                    return p.r("m") <= p.r("n") + Rational(1);
                });
            },
            [](const Point& p) {
                const int n = p.i("n"), m = p.i("m");
                return same(A(n + 1, m), A(n, m - 1) + (X() + K(Rational(n + m))) * A(n, m));
            });
    reg.add("G06.a-number-recurrence", "m A_x(n,m) = m n A_x(n-1,m) + n A_x(n-1,m-1)", {"n", "m"},
            [](const GridDefaults& d) { return n_m(d.max_n_single, 1); },
            [](const Point& p) {
                const int n = p.i("n"), m = p.i("m");
                return same(A(n, m) * Rational(m), A(n - 1, m) * Rational(m * n) + A(n - 1, m - 1) * Rational(n));
            });
    reg.add("G06.nstep-first", "c_n(x) = -n c_{n-1}(x) + (-1)^n n! sum c^_m/m! C(x+n-2, n-m)", {"n"},
            [](const GridDefaults& d) { return single(d, 1); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly tail;
                for (int m = 0; m <= n; ++m)
                    tail += binom_poly(Rational(n - 2), n - m) * (cn2(m) / factorial(m));
                return same(c1(n), c1(n - 1) * Rational(-n) + tail * (sgn(n) * factorial(n)));
            });
    reg.add("G06.nstep-second", "c^_n(x) = -n c^_{n-1}(x) + n! sum (-1)^m c_m/m! C(x+1-m, n-m)", {"n"},
            [](const GridDefaults& d) { return single(d, 1); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly tail;
                for (int m = 0; m <= n; ++m)
                    tail += binom_poly(Rational(1 - m), n - m) * (sgn(m) * cn1(m) / factorial(m));
                return same(c2(n), c2(n - 1) * Rational(-n) + tail * factorial(n));
            });
    reg.add("G06.diff1", "c_n(x+1) - c_n(x) = -n c_{n-1}(x+1)", {"n"}, [](const GridDefaults& d) { return single(d, 1); },
            [](const Point& p) {
                const int n = p.i("n");
                return same(shift(c1(n), Rational(1)) - c1(n), shift(c1(n - 1), Rational(1)) * Rational(-n));
            });
    reg.add("G06.diff2", "c^_n(x+1) - c^_n(x) = n c^_{n-1}(x)", {"n"}, [](const GridDefaults& d) { return single(d, 1); },
            [](const Point& p) {
                const int n = p.i("n");
                return same(shift(c2(n), Rational(1)) - c2(n), c2(n - 1) * Rational(n));
            });
    reg.add("G06.negation", "c_n(x) = c^_n(-x) + n c^_{n-1}(-x)", {"n"}, [](const GridDefaults& d) { return single(d, 1); },
            [](const Point& p) {
                const int n = p.i("n");
                return same(c1(n), reflect(c2(n)) + reflect(c2(n - 1)) * Rational(n));
            });

    // The k-form of the second-kind recurrence appears with both signs on (x-n).
    auto grid = [](const GridDefaults& d) {
        return ParameterGrid().axis("n", 0, d.max_n_double).axis("k", 1, d.max_k).axis("x", d.x_values);
    };
    auto variant = [](int s) {
        return [s](const Point& p) {
            const int n = p.i("n"), k = p.i("k");
            const Rational& x = p.r("x");
            const Poly rhs = (X() - K(Rational(n))) * c2(n, k) * Rational(s) + chen4_tail(n, k);
            return same(c2(n + 1, k)(x), rhs(x));
        };
    };
    reg.probe("G06.k-recurrence-sign",
              "c^_{n+1}^(k)(x) = s (x-n) c^_n^(k)(x) - n! sum (-1)^m c_{m+1}^(k)/m! C(x-m-1, n-m), s = +1 or -1",
              {"n", "k", "x"}, grid, {{"plus", variant(1)}, {"minus", variant(-1)}});
}

void register_g07(Registry& reg)
{
    reg.add("G07.c-even", "c_{2n}(x) = n sum u(n,m)/m ((x+n-1)^(2m) - B_{2m})", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single / 2); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 1; m <= n; ++m)
                    rhs += (pow(X() + K(Rational(n - 1)), 2 * m) - K(bernoulli_number(2 * m))) * (central_u(n, m) * inv(m));
                return same(c1(2 * n), rhs * Rational(n));
            });
    reg.add("G07.chat-even", "c^_{2n}(x) = n sum u(n,m)/m ((x-n)^(2m) - B_{2m})", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single / 2); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 1; m <= n; ++m)
                    rhs += (pow(X() - K(Rational(n)), 2 * m) - K(bernoulli_number(2 * m))) * (central_u(n, m) * inv(m));
                return same(c2(2 * n), rhs * Rational(n));
            });
    reg.add("G07.c-odd", "c_{2n+1}(x) = -(2n+1) sum u(n,m)/(2m+1) E_{2m+1}(x+n)", {"n"},
            [](const GridDefaults& d) { return grid_n(1, (d.max_n_single - 1) / 2); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 1; m <= n; ++m)
                    rhs += shift(euler_poly(2 * m + 1), Rational(n)) * (central_u(n, m) * inv(2 * m + 1));
                return same(c1(2 * n + 1), rhs * Rational(-(2 * n + 1)));
            });
    reg.add("G07.chat-odd", "c^_{2n+1}(x) = (2n+1) sum u(n,m)/(2m+1) E_{2m+1}(x-n)", {"n"},
            [](const GridDefaults& d) { return grid_n(1, (d.max_n_single - 1) / 2); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 1; m <= n; ++m)
                    rhs += shift(euler_poly(2 * m + 1), Rational(-n)) * (central_u(n, m) * inv(2 * m + 1));
                return same(c2(2 * n + 1), rhs * Rational(2 * n + 1));
            });
    reg.add("G07.central-power-sum", "(2n)! C(x+n+1, 2n+1) = sum u(n,m) 2^(2m+1) S_{2m}(x/2)", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single / 2); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 1; m <= n; ++m)
                    rhs += compose_linear(power_sum_poly(2 * m), Rational(1, 2), Rational(0)) *
                           (central_u(n, m) * Rational(2).pow(2 * m + 1));
                return same(binom_poly(Rational(n + 1), 2 * n + 1) * factorial(2 * n), rhs);
            });
    reg.add("G07.euler-half-integral", "int_a^{a+1/2} B_n = E_n(2a)/2^(n+1)", {"n", "a"},
            [](const GridDefaults& d) { return grid_n(0, std::min(10, d.max_n_single)).axis("a", d.x_values); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational& a = p.r("a");
                return same(integrate(bernoulli_poly(n), a, a + Rational(1, 2)),
                            euler_poly(n)(Rational(2) * a) / Rational(2).pow(n + 1));
            });
    reg.add("G07.euler-reflection", "E_{2m+1}(1-s-n) = -E_{2m+1}(s+n)", {"m"},
            [](const GridDefaults& d) { return ParameterGrid().axis("m", 0, d.max_n_single / 2); },
            [](const Point& p) {
                const int m = p.i("m");
                const Poly e = euler_poly(2 * m + 1);
                return same(sub(e, -1, Rational(1)), -e);
            });
}

void register_g08(Registry& reg)
{
    reg.add("G08.whit1", "c_n(r/m) = sum (-1)^(n-l)/(l+1) w_{m,r}(n,l)/m^(n-l)", {"n", "m", "r"}, whitney_grid,
            [](const Point& p) {
                const int n = p.i("n");
                const Rational &m = p.r("m"), &r = p.r("r");
                Rational rhs;
                for (int l = 0; l <= n; ++l)
                    rhs += sgn(n - l) * inv(l + 1) * w_number(m, r, n, l) / m.pow(n - l);
                return same(c1(n)(r / m), rhs);
            });
    reg.add("G08.whit2", "c^_n(-r/m) = (-1)^n sum 1/(l+1) w_{m,r}(n,l)/m^(n-l)", {"n", "m", "r"}, whitney_grid,
            [](const Point& p) {
                const int n = p.i("n");
                const Rational &m = p.r("m"), &r = p.r("r");
                Rational rhs;
                for (int l = 0; l <= n; ++l)
                    rhs += inv(l + 1) * w_number(m, r, n, l) / m.pow(n - l);
                return same(c2(n)(-r / m), sgn(n) * rhs);
            });
    reg.add("G08.whit1-reversed", "sum m^l W_{m,r}(n,l) c_l(r/m) = m^n/(n+1)", {"n", "m", "r"}, whitney_grid,
            [](const Point& p) {
                const int n = p.i("n");
                const Rational &m = p.r("m"), &r = p.r("r");
                Rational lhs;
                for (int l = 0; l <= n; ++l)
                    lhs += m.pow(l) * W_number(m, r, n, l) * c1(l)(r / m);
                return same(lhs, m.pow(n) / Rational(n + 1));
            });
    reg.add("G08.whit2-reversed", "sum m^l W_{m,r}(n,l) c^_l(-r/m) = (-1)^n m^n/(n+1)", {"n", "m", "r"}, whitney_grid,
            [](const Point& p) {
                const int n = p.i("n");
                const Rational &m = p.r("m"), &r = p.r("r");
                Rational lhs;
                for (int l = 0; l <= n; ++l)
                    lhs += m.pow(l) * W_number(m, r, n, l) * c2(l)(-r / m);
                return same(lhs, sgn(n) * m.pow(n) / Rational(n + 1));
            });
    reg.add("G08.whitney-gsn", "w_{m,r}(n,l) = m^(n-l) [n l]_{r/m}, W_{m,r}(n,l) = m^(n-l) {n l}_{r/m}",
            {"n", "m", "r"}, whitney_grid,
            [](const Point& p) {
                const int n = p.i("n");
                const Rational &m = p.r("m"), &r = p.r("r");
                std::vector<Outcome> parts;
                for (int l = 0; l <= n; ++l) {
                    parts.push_back(same(whitney(StirlingKind::first, m, r, n, l), w_number(m, r, n, l)));
                    parts.push_back(same(whitney(StirlingKind::second, m, r, n, l), W_number(m, r, n, l)));
                }
                return all_of(std::move(parts));
            });
    reg.add("G08.whitney-connection", "m^n (x)_n = sum (-1)^(n-l) w (mx+r)^l and (mx+r)^n = sum m^l W (x)_l",
            {"n", "m", "r"}, whitney_grid,
            [](const Point& p) {
                const int n = p.i("n");
                const Rational &m = p.r("m"), &r = p.r("r");
                const Poly lin = X() * m + K(r);
                Poly a, b;
                for (int l = 0; l <= n; ++l) {
                    a += pow(lin, l) * (sgn(n - l) * w_number(m, r, n, l));
                    b += falling_factorial(l) * (m.pow(l) * W_number(m, r, n, l));
                }
                return all_of({same(falling_factorial(n) * m.pow(n), a), same(pow(lin, n), b)});
            });
}

} // namespace

void register_basic(Registry& reg)
{
    register_g01(reg);
    register_g02(reg);
    register_g03(reg);
    register_g04(reg);
    register_g05(reg);
    register_g06(reg);
    register_g07(reg);
    register_g08(reg);
}

} // namespace polycauchy::identity
