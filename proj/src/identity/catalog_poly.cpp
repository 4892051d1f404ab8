#include "registry.hpp"

#include "polycauchy/format.hpp"
#include "polycauchy/golden.hpp"
#include "polycauchy/series.hpp"

namespace polycauchy::identity {

using namespace cat;

namespace {

const Construction all_constructions[] = {Construction::gsn, Construction::integral, Construction::series,
                                          Construction::binomial_conv, Construction::stirling_expansion};

ParameterGrid nk(const GridDefaults& d, int lo, int hi)
{
    return ParameterGrid().axis("n", lo, hi).axis("k", 1, d.max_k);
}

ParameterGrid nki(const GridDefaults& d)
{
    return nk(d, 0, d.max_n_double).axis("i", 0, d.max_n_double).where("i<=n", [](const Point& p) {
        return le(p, "i", "n");
    });
}

ParameterGrid nky(const GridDefaults& d)
{
    return nk(d, 0, d.max_n_double).axis("y", d.x_values);
}

Poly CC(int j, int k) { return c_aux_poly(j, k); }

/// sum_{j=lo}^{m} s^j C(m,j) B_{m-j} CC_j(x + a)
Poly bc_sum(int m, int k, int lo, int s, const Rational& a)
{
    Poly acc;
    for (int j = lo; j <= m; ++j)
        acc += shift(CC(j, k), a) * (sign_power(s < 0 ? j : 0) * binomial(m, j) * bernoulli_number(m - j));
    return acc;
}

Rational bc_value(int m, int k, int s, const Rational& at)
{
    Rational acc;
    for (int j = 0; j <= m; ++j)
        acc += sign_power(s < 0 ? j : 0) * binomial(m, j) * bernoulli_number(m - j) * CC(j, k)(at);
    return acc;
}

/// E^(k)_{2m+1}(x): sum_{j=0}^{2m} 2^j C(2m+1,j) B_j CC_{2m+1-j}(x+1).
Poly gen_euler_odd(int m, int k)
{
    Poly acc;
    for (int j = 0; j <= 2 * m; ++j)
        acc += shift(CC(2 * m + 1 - j, k), Rational(1)) *
               (Rational(2).pow(j) * binomial(2 * m + 1, j) * bernoulli_number(j));
    return acc;
}

/// Poly-Bernoulli numbers from Li_k(1-e^{-t})/(1-e^{-t}).
Rational kaneko_number(int n, int k)
{
    const int order = n;
    RatSeries minus_t(order);
    if (order >= 1)
        minus_t[1] = Rational(-1);
    const RatSeries u = RatSeries::constant(order, Rational(1)) - exp(minus_t);
    RatSeries sum(order), power = RatSeries::constant(order, Rational(1));
    for (int j = 1; j <= order + 1; ++j) {
        sum += power * inv_pow(j, k);
        power = power * u;
    }
    return sum[n] * factorial(n);
}

void register_g14(Registry& reg)
{
    reg.add("G14.gsn-first-k", "c^(k)_n(x) = sum (-1)^(n-m)/(m+1)^k [n m]_x", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += G1(n, m) * (sgn(n - m) * inv_pow(m + 1, k));
                return same(cauchy_poly(CauchyKind::first, n, k, Construction::integral), rhs);
            });
    reg.add("G14.gsn-second-k", "c^^(k)_n(-x) = (-1)^n sum 1/(m+1)^k [n m]_x", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += G1(n, m) * (sgn(n) * inv_pow(m + 1, k));
                return same(reflect(cauchy_poly(CauchyKind::second, n, k, Construction::integral)), rhs);
            });
    reg.add("G14.coefficients-k", "c^(k)_{n,i} = (-1)^(n+i) sum (-1)^m/(m-i+1)^k C(m,i) [n m], same unsigned for c^", {"n", "k", "i"},
            nki, [](const Point& p) {
                const int n = p.i("n"), k = p.i("k"), i = p.i("i");
                Rational a, b;
                for (int m = i; m <= n; ++m) {
                    a += sgn(m) * inv_pow(m - i + 1, k) * binomial(m, i) * stirling1(n, m);
                    b += inv_pow(m - i + 1, k) * binomial(m, i) * stirling1(n, m);
                }
                return all_of({same(c1(n, k).coeff(i), sgn(n + i) * a), same(c2(n, k).coeff(i), sgn(n + i) * b),
                               same(cauchy_coefficient(CauchyKind::first, n, i, k), sgn(n + i) * a),
                               same(cauchy_coefficient(CauchyKind::second, n, i, k), sgn(n + i) * b)});
            });
    auto back = [](int n, int k) {
        std::vector<Poly> inner;
        for (int m = 0; m <= n; ++m) {
            Poly acc;
            for (int i = 0; i <= m; ++i)
                acc += Poly::monomial(sgn(i) * binomial(m, i) * inv_pow(m - i + 1, k), i);
            inner.push_back(acc);
        }
        return inner;
    };
    reg.add("G14.back1", "c^(k)_n(x) = sum (-1)^(n-m) [n m] sum C(m,i) (-x)^i/(m-i+1)^k", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_double); },
            [back](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                const auto inner = back(n, k);
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += inner[m] * (sgn(n - m) * stirling1(n, m));
                return same(c1(n, k), rhs);
            });
    reg.add("G14.back2", "c^(k)_n(x) = (-1)^n sum [n m] sum C(m,i) (-x)^i/(m-i+1)^k", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_double); },
            [back](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                const auto inner = back(n, k);
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += inner[m] * (sgn(n) * stirling1(n, m));
                return same(c2(n, k), rhs);
            });
    reg.add("G14.inverted", "sum {n m}_x c^(k)_m(x) = 1/(n+1)^k, sum {n m}_x c^^(k)_m(-x) = (-1)^n/(n+1)^k",
            {"n", "k"}, [](const GridDefaults& d) { return nk(d, 0, d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly a, b;
                for (int m = 0; m <= n; ++m) {
                    a += G2(n, m) * c1(m, k);
                    b += G2(n, m) * reflect(c2(m, k));
                }
                return all_of({same(a, K(inv_pow(n + 1, k))), same(b, K(sgn(n) * inv_pow(n + 1, k)))});
            });
    reg.add("G14.printed-table-k", "published c^(k)_6 and c^^(k)_6 under every construction", {"k"},
            [](const GridDefaults& d) { return ParameterGrid().axis("k", 1, d.max_k); },
            [](const Point& p) {
                const int k = p.i("k");
                std::vector<Outcome> parts;
                for (auto kind : {CauchyKind::first, CauchyKind::second})
                    for (auto c : all_constructions) {
                        if (k > 1 && (c == Construction::series || c == Construction::stirling_expansion))
                            continue;
                        parts.push_back(same(cauchy_poly(kind, 6, k, c), golden::poly_cauchy_6(kind, k)));
                    }
                return all_of(parts);
            });
    reg.add("G14.reflection-k", "c^(k)_n(x) = c^^(k)_n(1-x) exactly when k = 1 (n >= 1)", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 1, d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                const Poly l = c1(n, k), r = sub(c2(n, k), -1, Rational(1));
                return holds((l == r) == (k == 1), to_string(l), to_string(r));
            });
}

void register_g15(Registry& reg)
{
    reg.add("G15.diff1-k", "c^(k)_n(x+1) - c^(k)_n(x) = -n c^(k)_{n-1}(x+1)", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                const Poly c = c1(n, k);
                return same(shift(c, Rational(1)) - c, shift(c1(n - 1, k), Rational(1)) * Rational(-n));
            });
    reg.add("G15.diff2-k", "c^^(k)_n(x+1) - c^^(k)_n(x) = n c^^(k)_{n-1}(x)", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                const Poly c = c2(n, k);
                return same(shift(c, Rational(1)) - c, c2(n - 1, k) * Rational(n));
            });
    auto whitney_k = [](const GridDefaults& d) {
        return ParameterGrid()
            .axis("n", 0, d.max_n_double)
            .axis("m", d.whitney_m)
            .axis("r", -2, d.max_r)
            .axis("k", 1, d.max_k);
    };
    reg.add("G15.whit1-k", "c^(k)_n(r/m) = sum (-1)^(n-l)/(l+1)^k w_{m,r}(n,l)/m^(n-l)", {"n", "m", "r", "k"}, whitney_k,
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                const Rational &m = p.r("m"), &r = p.r("r");
                Rational rhs;
                for (int l = 0; l <= n; ++l)
                    rhs += sgn(n - l) * inv_pow(l + 1, k) * whitney(StirlingKind::first, m, r, n, l) / m.pow(n - l);
                return same(c1(n, k)(r / m), rhs);
            });
    reg.add("G15.whit2-k", "c^^(k)_n(-r/m) = (-1)^n sum 1/(l+1)^k w_{m,r}(n,l)/m^(n-l)", {"n", "m", "r", "k"}, whitney_k,
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                const Rational &m = p.r("m"), &r = p.r("r");
                Rational rhs;
                for (int l = 0; l <= n; ++l)
                    rhs += inv_pow(l + 1, k) * whitney(StirlingKind::first, m, r, n, l) / m.pow(n - l);
                return same(c2(n, k)(-r / m), sgn(n) * rhs);
            });
    reg.add("G15.symm5", "c^(k)_n(x) = (-1)^n n! sum c^^(k)_m/m! C(x+n-1, n-m)", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += binom_poly(Rational(n - 1), n - m) * (cn2(m, k) / factorial(m));
                return same(c1(n, k), rhs * (sgn(n) * factorial(n)));
            });
    reg.add("G15.symm6", "c^^(k)_n(x) = n! sum (-1)^m c^(k)_m/m! C(x-m, n-m)", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += binom_poly(Rational(-m), n - m) * (sgn(m) * cn1(m, k) / factorial(m));
                return same(c2(n, k), rhs * factorial(n));
            });
    reg.add("G15.symm7", "c^(k)_n(x) = n! sum c^(k)_m/m! C(-x, n-m) = sum (-1)^m c^(k)_{n-m} C(n,m) x^(m)", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly a, b;
                for (int m = 0; m <= n; ++m) {
                    a += binom_poly<Rational>(Rational(0), -1, n - m) * (cn1(m, k) / factorial(m));
                    b += rising_factorial(m) * (sgn(m) * cn1(n - m, k) * binomial(n, m));
                }
                const Poly c = c1(n, k);
                return all_of({same(c, a * factorial(n)), same(c, b)});
            });
    reg.add("G15.symm8", "c^^(k)_n(x) = n! sum c^^(k)_m/m! C(x, n-m) = sum c^^(k)_{n-m} C(n,m) (x)_m", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly a, b;
                for (int m = 0; m <= n; ++m) {
                    a += binom_poly(Rational(0), n - m) * (cn2(m, k) / factorial(m));
                    b += falling_factorial(m) * (cn2(n - m, k) * binomial(n, m));
                }
                const Poly c = c2(n, k);
                return all_of({same(c, a * factorial(n)), same(c, b)});
            });
    reg.add("G15.chen3-k", "c^(k)_{n+1}(x) = -(n+x) c^(k)_n(x) + (-1)^(n+1) n! sum c^^(k)_{m+1}/m! C(x+n, n-m)",
            {"n", "k"}, [](const GridDefaults& d) { return nk(d, 0, d.max_n_single - 1); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly tail;
                for (int m = 0; m <= n; ++m)
                    tail += binom_poly(Rational(n), n - m) * (cn2(m + 1, k) / factorial(m));
                const Poly rhs = -(X() + K(Rational(n))) * c1(n, k) + tail * (sgn(n + 1) * factorial(n));
                return same(c1(n + 1, k), rhs);
            });
    reg.add("G15.genk1", "d^i c^(k)_n = (-1)^i i! sum C(n,m) C(m,i) B^(n+1)_{m-i}(1-x)/(n+1-m)^k", {"n", "k", "i"}, nki,
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k"), i = p.i("i");
                Poly rhs;
                for (int m = i; m <= n; ++m)
                    rhs += sub(gen_bernoulli_poly(m - i, n + 1), -1, Rational(1)) *
                           (binomial(n, m) * binomial(m, i) * inv_pow(n + 1 - m, k));
                return same(derivative(c1(n, k), i), rhs * (sgn(i) * factorial(i)));
            });
    reg.add("G15.genk2", "d^i c^^(k)_n = i! sum (-1)^(n-m) C(n,m) C(m,i) B^(n+1)_{m-i}(x+1)/(n+1-m)^k", {"n", "k", "i"},
            nki, [](const Point& p) {
                const int n = p.i("n"), k = p.i("k"), i = p.i("i");
                Poly rhs;
                for (int m = i; m <= n; ++m)
                    rhs += shift(gen_bernoulli_poly(m - i, n + 1), Rational(1)) *
                           (sgn(n - m) * binomial(n, m) * binomial(m, i) * inv_pow(n + 1 - m, k));
                return same(derivative(c2(n, k), i), rhs * factorial(i));
            });
    reg.add("G15.der1-k", "d^i c^(k)_n = i! sum (-1)^m c^(k)_{n-m} C(n,m) [m i]_x", {"n", "k", "i"}, nki,
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k"), i = p.i("i");
                Poly rhs;
                for (int m = i; m <= n; ++m)
                    rhs += G1(m, i) * (sgn(m) * cn1(n - m, k) * binomial(n, m));
                return all_of({same(derivative(c1(n, k), i), rhs * factorial(i)),
                               same(cauchy_derivative(CauchyKind::first, n, k, i), rhs * factorial(i))});
            });
    reg.add("G15.der2-k", "d^i c^^(k)_n = (-1)^i i! sum (-1)^m c^^(k)_{n-m} C(n,m) [m i]_{-x}", {"n", "k", "i"}, nki,
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k"), i = p.i("i");
                Poly rhs;
                for (int m = i; m <= n; ++m)
                    rhs += G1_neg(m, i) * (sgn(m) * cn2(n - m, k) * binomial(n, m));
                const Poly expect = rhs * (sgn(i) * factorial(i));
                return all_of({same(derivative(c2(n, k), i), expect),
                               same(cauchy_derivative(CauchyKind::second, n, k, i), expect)});
            });
    auto korec_grid = [](const GridDefaults& d) {
        return ParameterGrid()
            .axis("n", 0, d.max_n_double)
            .axis("r", 0, d.max_n_double)
            .axis("s", 0, d.max_n_double)
            .axis("k", 1, d.max_k)
            .where("s<=r<=n", [](const Point& p) { return le(p, "s", "r") && le(p, "r", "n"); });
    };
    reg.add("G15.korec1", "sum {n-r, m-r}_r c^(k)_{m-s}(s) = sum (-1)^(r-l)/(n+l-r-s+1)^k [r-s, l-s]_s",
            {"n", "r", "s", "k"}, korec_grid, [](const Point& p) {
                const int n = p.i("n"), r = p.i("r"), s = p.i("s"), k = p.i("k");
                Rational lhs, rhs;
                for (int m = r; m <= n; ++m)
                    lhs += gsn2_at(n - r, m - r, Rational(r)) * c1(m - s, k)(Rational(s));
                for (int l = s; l <= r; ++l)
                    rhs += sgn(r - l) * inv_pow(n + l - r - s + 1, k) * gsn1_at(r - s, l - s, Rational(s));
                return same(lhs, rhs);
            });
    reg.add("G15.korec2", "sum {n-r, m-r}_r c^^(k)_{m-s}(-s) = (-1)^(n-s) sum 1/(n+l-r-s+1)^k [r-s, l-s]_s",
            {"n", "r", "s", "k"}, korec_grid, [](const Point& p) {
                const int n = p.i("n"), r = p.i("r"), s = p.i("s"), k = p.i("k");
                Rational lhs, rhs;
                for (int m = r; m <= n; ++m)
                    lhs += gsn2_at(n - r, m - r, Rational(r)) * c2(m - s, k)(Rational(-s));
                for (int l = s; l <= r; ++l)
                    rhs += inv_pow(n + l - r - s + 1, k) * gsn1_at(r - s, l - s, Rational(s));
                return same(lhs, sgn(n - s) * rhs);
            });
    auto nrk = [](const GridDefaults& d) {
        return ParameterGrid().axis("n", 0, d.max_n_double).axis("r", 0, d.max_r).axis("k", 1, d.max_k);
    };
    reg.add("G15.r-specialized-first", "sum {n m}_r c^(k)_{m+r} = sum (-1)^(r-l)/(n+l+1)^k [r l]", {"n", "r", "k"}, nrk,
            [](const Point& p) {
                const int n = p.i("n"), r = p.i("r"), k = p.i("k");
                Rational lhs, rhs;
                for (int m = 0; m <= n; ++m)
                    lhs += gsn2_at(n, m, Rational(r)) * cn1(m + r, k);
                for (int l = 0; l <= r; ++l)
                    rhs += sgn(r - l) * inv_pow(n + l + 1, k) * stirling1(r, l);
                return same(lhs, rhs);
            });
    reg.add("G15.r-specialized-second", "sum {n m}_r c^^(k)_{m+r} = (-1)^(n+r) sum 1/(n+l+1)^k [r l]", {"n", "r", "k"},
            nrk, [](const Point& p) {
                const int n = p.i("n"), r = p.i("r"), k = p.i("k");
                Rational lhs, rhs;
                for (int m = 0; m <= n; ++m)
                    lhs += gsn2_at(n, m, Rational(r)) * cn2(m + r, k);
                for (int l = 0; l <= r; ++l)
                    rhs += inv_pow(n + l + 1, k) * stirling1(r, l);
                return same(lhs, sgn(n + r) * rhs);
            });
    reg.add("G15.values-at-one", "c^(k)_n(1) and c^^(k)_n(-1) as alternating factorial sums", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Rational a, b, c, e;
                for (int m = 0; m <= n; ++m) {
                    const Rational fm = factorial(m);
                    a += binomial(n, m) * cn2(m, k) / fm;
                    b += sgn(m) * cn1(m, k) / fm;
                    c += binomial(n, m) * cn1(m, k) / fm;
                    e += sgn(m) * cn2(m, k) / fm;
                }
                const Rational pre = sgn(n) * factorial(n);
                const Rational v1 = c1(n, k)(Rational(1)), v2 = c2(n, k)(Rational(-1));
                return all_of({same(v1, pre * a), same(v1, pre * b), same(v2, pre * c), same(v2, pre * e)});
            });
    reg.add("G15.lah", "c^(k)_n = (-1)^n sum L(n,m) c^^(k)_m and the reverse", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Rational a, b;
                for (int m = 0; m <= n; ++m) {
                    a += lah(n, m) * cn2(m, k);
                    b += lah(n, m) * cn1(m, k);
                }
                return all_of({same(cn1(n, k), sgn(n) * a), same(cn2(n, k), sgn(n) * b)});
            });
    reg.add("G15.lah-numbers", "L(n,m) = n!/m! C(n-1, m-1) for m >= 1, L(n,0) = delta_{n,0}", {"n", "m"},
            [](const GridDefaults& d) {
                return ParameterGrid().axis("n", 0, d.max_n_single).axis("m", 0, d.max_n_single).where("m<=n", [](const Point& p) {
                    return le(p, "m", "n");
                });
            },
            [](const Point& p) {
                const int n = p.i("n"), m = p.i("m");
                if (m == 0)
                    return same(lah(n, m), delta(n, 0));
                return same(lah(n, m), factorial(n) / factorial(m) * binomial(n - 1, m - 1));
            });
}

void register_g16(Registry& reg)
{
    reg.add("G16.int2", "int_0^1 c^(k)_n = c_n - n sum_{j<=k} c^(j)_n", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Rational rhs = cn1(n);
                for (int j = 1; j <= k; ++j)
                    rhs -= Rational(n) * cn1(n, j);
                return same(integrate_01(c1(n, k)), rhs);
            });
    reg.add("G16.int3", "int_0^1 c^^(k)_n = c^_n - n sum_{j<=k} (c^^(j)_n + (n-1) c^^(j)_{n-1})", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Rational rhs = cn2(n);
                for (int j = 1; j <= k; ++j) {
                    Rational t = cn2(n, j);
                    if (n >= 1)
                        t += Rational(n - 1) * cn2(n - 1, j);
                    rhs -= Rational(n) * t;
                }
                return same(integrate_01(c2(n, k)), rhs);
            });
    reg.add("G16.int2-convolution", "int_0^1 c^(k)_n = sum C(n,m) c^(k)_m c^_{n-m}", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Rational rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += binomial(n, m) * cn1(m, k) * cn2(n - m);
                return same(integrate_01(c1(n, k)), rhs);
            });
    reg.add("G16.int3-convolution", "int_0^1 c^^(k)_n = sum C(n,m) c^^(k)_m c_{n-m}", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Rational rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += binomial(n, m) * cn2(m, k) * cn1(n - m);
                return same(integrate_01(c2(n, k)), rhs);
            });
}

void register_g17(Registry& reg)
{
    reg.add("G17.definition", "PB^(k)_n(x) = (-1)^n sum (-1)^m m!/(m+1)^k {n m}_x", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += G2(n, m) * (sgn(m) * factorial(m) * inv_pow(m + 1, k));
                return same(poly_bernoulli_gsn(n, k), rhs * sgn(n));
            });
    reg.add("G17.kaneko", "PB^(k)_n(0) agrees with Li_k(1-e^-t)/(1-e^-t)", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                return same(poly_bernoulli_gsn(n, k)(Rational(0)), kaneko_number(n, k));
            });
    reg.add("G17.k1-reduction", "PB^(1)_n(x) = (-1)^n B_n(x)", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                return same(poly_bernoulli_gsn(n, 1), bernoulli_poly(n) * sgn(n));
            });
    reg.add("G17.pb-first", "PB^(k)_n(x) = (-1)^n sum sum (-1)^m m! {n m}_x {m l}_y c^(k)_l(y)", {"n", "k", "y"}, nky,
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                const Rational& y = p.r("y");
                Poly rhs;
                for (int m = 0; m <= n; ++m) {
                    Rational inner;
                    for (int l = 0; l <= m; ++l)
                        inner += gsn2_at(m, l, y) * c1(l, k)(y);
                    rhs += G2(n, m) * (sgn(m) * factorial(m) * inner);
                }
                return same(poly_bernoulli_gsn(n, k), rhs * sgn(n));
            });
    reg.add("G17.pb-second", "PB^(k)_n(x) = (-1)^n sum sum m! {n m}_x {m l}_y c^^(k)_l(-y)", {"n", "k", "y"}, nky,
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                const Rational& y = p.r("y");
                Poly rhs;
                for (int m = 0; m <= n; ++m) {
                    Rational inner;
                    for (int l = 0; l <= m; ++l)
                        inner += gsn2_at(m, l, y) * c2(l, k)(-y);
                    rhs += G2(n, m) * (factorial(m) * inner);
                }
                return same(poly_bernoulli_gsn(n, k), rhs * sgn(n));
            });
    reg.add("G17.pb-third", "c^(k)_n(x) = (-1)^n sum sum (-1)^m/m! [n m]_x [m l]_y PB^(k)_l(y)", {"n", "k", "y"}, nky,
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                const Rational& y = p.r("y");
                Poly rhs;
                for (int m = 0; m <= n; ++m) {
                    Rational inner;
                    for (int l = 0; l <= m; ++l)
                        inner += gsn1_at(m, l, y) * poly_bernoulli_gsn(l, k)(y);
                    rhs += G1(n, m) * (sgn(m) * inner / factorial(m));
                }
                return same(c1(n, k), rhs * sgn(n));
            });
    reg.add("G17.pb-fourth", "c^^(k)_n(-x) = (-1)^n sum sum 1/m! [n m]_x [m l]_y PB^(k)_l(y)", {"n", "k", "y"}, nky,
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                const Rational& y = p.r("y");
                Poly rhs;
                for (int m = 0; m <= n; ++m) {
                    Rational inner;
                    for (int l = 0; l <= m; ++l)
                        inner += gsn1_at(m, l, y) * poly_bernoulli_gsn(l, k)(y);
                    rhs += G1(n, m) * (inner / factorial(m));
                }
                return same(reflect(c2(n, k)), rhs * sgn(n));
            });
    reg.add("G17.kl-definition", "PB'^(k)_n(x) = (-1)^n sum (-1)^m m! {n m} sum C(m,i) (-x)^i/(m-i+1)^k", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly rhs;
                for (int m = 0; m <= n; ++m) {
                    Poly inner;
                    for (int i = 0; i <= m; ++i)
                        inner += Poly::monomial(sgn(i) * binomial(m, i) * inv_pow(m - i + 1, k), i);
                    rhs += inner * (sgn(m) * factorial(m) * stirling2(n, m));
                }
                const Poly kl = poly_bernoulli_kl(n, k);
                return all_of({same(kl, rhs * sgn(n)), same(kl(Rational(0)), poly_bernoulli_gsn(n, k)(Rational(0)))});
            });
    struct Inform {
        const char* id;
        const char* ref;
        int variant;
    };
    static constexpr Inform informs[] = {
        {"G17.inform-first", "PB'^(k)_n(x) = (-1)^n sum sum (-1)^m m! {n m} {m l} c^(k)_l(x)", 0},
        {"G17.inform-second", "PB'^(k)_n(x) = (-1)^n sum sum m! {n m} {m l} c^^(k)_l(x)", 1},
        {"G17.inform-third", "c^(k)_n(x) = (-1)^n sum sum (-1)^m/m! [n m] [m l] PB'^(k)_l(x)", 2},
        {"G17.inform-fourth", "c^^(k)_n(x) = (-1)^n sum sum 1/m! [n m] [m l] PB'^(k)_l(x)", 3},
    };
    for (const auto& f : informs) {
        reg.add(f.id, f.ref, {"n", "k"}, [](const GridDefaults& d) { return nk(d, 0, d.max_n_double); },
                [f](const Point& p) {
                    const int n = p.i("n"), k = p.i("k");
                    Poly rhs;
                    for (int m = 0; m <= n; ++m) {
                        Poly inner;
                        for (int l = 0; l <= m; ++l) {
                            if (f.variant < 2)
                                inner += (f.variant == 0 ? c1(l, k) : c2(l, k)) * stirling2(m, l);
                            else
                                inner += poly_bernoulli_kl(l, k) * stirling1(m, l);
                        }
                        switch (f.variant) {
                        case 0: rhs += inner * (sgn(m) * factorial(m) * stirling2(n, m)); break;
                        case 1: rhs += inner * (factorial(m) * stirling2(n, m)); break;
                        case 2: rhs += inner * (sgn(m) * stirling1(n, m) / factorial(m)); break;
                        default: rhs += inner * (stirling1(n, m) / factorial(m)); break;
                        }
                    }
                    const Poly lhs = f.variant < 2 ? poly_bernoulli_kl(n, k) : f.variant == 2 ? c1(n, k) : c2(n, k);
                    return same(lhs, rhs * sgn(n));
                });
    }
}

void register_g18(Registry& reg)
{
    reg.add("G18.def1", "CC^(k)_j(x) = sum (-1)^i/(i+1)^k C(j,i) x^(j-i), CC_0 = 1", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 0, d.max_n_single); },
            [](const Point& p) {
                const int j = p.i("n"), k = p.i("k");
                Poly rhs;
                if (j == 0)
                    rhs = K(Rational(1));
                for (int i = 0; j >= 1 && i <= j; ++i)
                    rhs += Poly::monomial(sgn(i) * inv_pow(i + 1, k) * binomial(j, i), j - i);
                return same(CC(j, k), rhs);
            });
    reg.add("G18.poly1", "c^(k)_n(x) = delta_{n,1} + (-1)^n n sum 1/m [n-1, m-1] sum_{j>=1} C(m,j) B_{m-j} CC^(k)_j(x+1)",
            {"n", "k"}, [](const GridDefaults& d) { return nk(d, 1, d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly sum;
                for (int m = 1; m <= n; ++m)
                    sum += bc_sum(m, k, 1, 1, Rational(1)) * (inv(m) * stirling1(n - 1, m - 1));
                return same(c1(n, k), K(delta(n, 1)) + sum * (sgn(n) * Rational(n)));
            });
    reg.add("G18.poly2", "c^^(k)_n(x) = delta_{n,1} + (-1)^n n sum 1/m [n-1, m-1] sum_{j>=1} (-1)^j C(m,j) B_{m-j} CC^(k)_j(x-1)",
            {"n", "k"}, [](const GridDefaults& d) { return nk(d, 1, d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly sum;
                for (int m = 1; m <= n; ++m)
                    sum += bc_sum(m, k, 1, -1, Rational(-1)) * (inv(m) * stirling1(n - 1, m - 1));
                return same(c2(n, k), K(delta(n, 1)) + sum * (sgn(n) * Rational(n)));
            });
    reg.add("G18.poly5", "c^(k)_n(x) = c_n + (-1)^n n sum 1/m [n-1, m-1] sum_{j>=0} C(m,j) B_{m-j} CC^(k)_j(x+1)",
            {"n", "k"}, [](const GridDefaults& d) { return nk(d, 1, d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly sum;
                for (int m = 1; m <= n; ++m)
                    sum += bc_sum(m, k, 0, 1, Rational(1)) * (inv(m) * stirling1(n - 1, m - 1));
                return same(c1(n, k), K(cn1(n)) + sum * (sgn(n) * Rational(n)));
            });
    reg.add("G18.poly6", "c^^(k)_n(x) = c_n + (-1)^n n sum 1/m [n-1, m-1] sum_{j>=0} (-1)^j C(m,j) B_{m-j} CC^(k)_j(x-1)",
            {"n", "k"}, [](const GridDefaults& d) { return nk(d, 1, d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly sum;
                for (int m = 1; m <= n; ++m)
                    sum += bc_sum(m, k, 0, -1, Rational(-1)) * (inv(m) * stirling1(n - 1, m - 1));
                return same(c2(n, k), K(cn1(n)) + sum * (sgn(n) * Rational(n)));
            });
    reg.add("G18.idc1", "sum C(m,j) B_{m-j} CC^(1)_j(x+1) = x^m", {"m"},
            [](const GridDefaults& d) { return ParameterGrid().axis("m", 0, d.max_n_single); },
            [](const Point& p) {
                const int m = p.i("m");
                return same(bc_sum(m, 1, 0, 1, Rational(1)), Poly::monomial(Rational(1), m));
            });
    reg.add("G18.idc2", "sum (-1)^(m-j) C(m,j) B_{m-j} CC^(1)_j(x) = x^m", {"m"},
            [](const GridDefaults& d) { return ParameterGrid().axis("m", 0, d.max_n_single); },
            [](const Point& p) {
                const int m = p.i("m");
                Poly acc;
                for (int j = 0; j <= m; ++j)
                    acc += CC(j, 1) * (sgn(m - j) * binomial(m, j) * bernoulli_number(m - j));
                return same(acc, Poly::monomial(Rational(1), m));
            });
    reg.add("G18.power-sum", "S_{m-1}(x) = 1/m sum_{j>=1} (-1)^(m-j) C(m,j) B_{m-j} x^j", {"m"},
            [](const GridDefaults& d) { return ParameterGrid().axis("m", 1, d.max_n_single); },
            [](const Point& p) {
                const int m = p.i("m");
                Poly acc;
                for (int j = 1; j <= m; ++j)
                    acc += Poly::monomial(sgn(m - j) * binomial(m, j) * bernoulli_number(m - j), j);
                return same(power_sum_poly(m - 1), acc * inv(m));
            });
}

void register_g19(Registry& reg)
{
    reg.add("G19.poly7", "-c^(k)_n(x)/n = sum (-1)^n/m [n-1, m-1]_x ((-1)^m B_m(x) - sum C(m,j) B_{m-j} CC^(k)_j(1))",
            {"n", "k"}, [](const GridDefaults& d) { return nk(d, 1, d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly rhs;
                for (int m = 1; m <= n; ++m)
                    rhs += G1(n - 1, m - 1) * (bernoulli_poly(m) * sgn(m) - K(bc_value(m, k, 1, Rational(1)))) *
                           (sgn(n) * inv(m));
                return same(c1(n, k) * (-inv(n)), rhs);
            });
    reg.add("G19.poly8", "-c^^(k)_n(-x)/n = sum (-1)^n/m [n-1, m-1]_x ((-1)^m B_m(x) - sum (-1)^j C(m,j) B_{m-j} CC^(k)_j(-1))",
            {"n", "k"}, [](const GridDefaults& d) { return nk(d, 1, d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly rhs;
                for (int m = 1; m <= n; ++m)
                    rhs += G1(n - 1, m - 1) * (bernoulli_poly(m) * sgn(m) - K(bc_value(m, k, -1, Rational(-1)))) *
                           (sgn(n) * inv(m));
                return same(reflect(c2(n, k)) * (-inv(n)), rhs);
            });
    reg.add("G19.alt-first", "c^(k)_n(x) = c_n - n sum (-1)^n/m [n-1, m-1]_x ((-x)^m - sum C(m,j) B_{m-j} CC^(k)_j(1))",
            {"n", "k"}, [](const GridDefaults& d) { return nk(d, 1, d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly sum;
                for (int m = 1; m <= n; ++m)
                    sum += G1(n - 1, m - 1) * (Poly::monomial(sgn(m), m) - K(bc_value(m, k, 1, Rational(1)))) *
                           (sgn(n) * inv(m));
                return same(c1(n, k), K(cn1(n)) - sum * Rational(n));
            });
    reg.add("G19.alt-second", "c^^(k)_n(-x) = c^_n - n sum (-1)^n/m [n-1, m-1]_x ((1-x)^m - sum (-1)^j C(m,j) B_{m-j} CC^(k)_j(-1))",
            {"n", "k"}, [](const GridDefaults& d) { return nk(d, 1, d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly sum;
                for (int m = 1; m <= n; ++m)
                    sum += G1(n - 1, m - 1) * (pow(K(Rational(1)) - X(), m) - K(bc_value(m, k, -1, Rational(-1)))) *
                           (sgn(n) * inv(m));
                return same(reflect(c2(n, k)), K(cn2(n)) - sum * Rational(n));
            });
    reg.add("G19.k1-first", "c_n(x) = c_n - (-1)^n n sum (-1)^m/m [n-1, m-1]_x x^m", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly sum;
                for (int m = 1; m <= n; ++m)
                    sum += G1(n - 1, m - 1) * Poly::monomial(sgn(m) * inv(m), m);
                return same(c1(n), K(cn1(n)) - sum * (sgn(n) * Rational(n)));
            });
    // The constant inside the bracket: the printed "- 1" fails already at n = 1.
    auto k1_second = [](bool sign_power_constant) {
        return [sign_power_constant](const Point& p) {
            const int n = p.i("n");
            Poly sum;
            for (int m = 1; m <= n; ++m) {
                const Rational tail = sign_power_constant ? sgn(m) : Rational(1);
                sum += G1(n - 1, m - 1) * (pow(X() - K(Rational(1)), m) - K(tail)) * (sgn(m) * inv(m));
            }
            return same(reflect(c2(n)), K(cn2(n)) - sum * (sgn(n) * Rational(n)));
        };
    };
    reg.add("G19.k1-second", "c^_n(-x) = c^_n - (-1)^n n sum (-1)^m/m [n-1, m-1]_x ((x-1)^m - (-1)^m)", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); }, k1_second(true));
    reg.probe("G19.k1-second-constant", "which constant makes the k = 1 form of the second alternative hold", {"n"},
              [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
              {{"minus-one", k1_second(false)}, {"minus-sign-power", k1_second(true)}});
}

void register_g20(Registry& reg)
{
    reg.add("G20.even-first", "c^(k)_{2n}(x) = n sum u(n,m)/m sum_{j<2m} C(2m,j) B_j CC^(k)_{2m-j}(x+n)", {"n", "k"},
            [](const GridDefaults& d) { return nk(d, 1, d.max_n_single / 2); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly rhs;
                for (int m = 1; m <= n; ++m) {
                    Poly inner;
                    for (int j = 0; j < 2 * m; ++j)
                        inner += shift(CC(2 * m - j, k), Rational(n)) * (binomial(2 * m, j) * bernoulli_number(j));
                    rhs += inner * (central_u(n, m) * inv(m));
                }
                return same(c1(2 * n, k), rhs * Rational(n));
            });
    reg.add("G20.even-second", "c^^(k)_{2n}(x) = n sum u(n,m)/m sum_{j<2m} (-1)^j C(2m,j) B_j CC^(k)_{2m-j}(x-n)",
            {"n", "k"}, [](const GridDefaults& d) { return nk(d, 1, d.max_n_single / 2); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly rhs;
                for (int m = 1; m <= n; ++m) {
                    Poly inner;
                    for (int j = 0; j < 2 * m; ++j)
                        inner += shift(CC(2 * m - j, k), Rational(-n)) * (sgn(j) * binomial(2 * m, j) * bernoulli_number(j));
                    rhs += inner * (central_u(n, m) * inv(m));
                }
                return same(c2(2 * n, k), rhs * Rational(n));
            });
    auto odd = [](int n, int k, const Rational& at) {
        Poly rhs;
        for (int m = 1; m <= n; ++m) {
            Poly inner;
            for (int j = 0; j <= 2 * m; ++j)
                inner += shift(CC(2 * m + 1 - j, k), at) * (Rational(2).pow(j) * binomial(2 * m + 1, j) * bernoulli_number(j));
            rhs += inner * (central_u(n, m) * inv(2 * m + 1));
        }
        return rhs;
    };
    reg.add("G20.odd-first", "c^(k)_{2n+1}(x) = -(2n+1) sum u(n,m)/(2m+1) sum 2^j C(2m+1,j) B_j CC^(k)_{2m+1-j}(x+n+1)",
            {"n", "k"}, [](const GridDefaults& d) { return nk(d, 1, (d.max_n_single - 1) / 2); },
            [odd](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                return same(c1(2 * n + 1, k), odd(n, k, Rational(n + 1)) * Rational(-(2 * n + 1)));
            });
    reg.add("G20.odd-second", "c^^(k)_{2n+1}(x) = (2n+1) sum u(n,m)/(2m+1) sum 2^j C(2m+1,j) B_j CC^(k)_{2m+1-j}(x-n+1)",
            {"n", "k"}, [](const GridDefaults& d) { return nk(d, 1, (d.max_n_single - 1) / 2); },
            [odd](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                return same(c2(2 * n + 1, k), odd(n, k, Rational(1 - n)) * Rational(2 * n + 1));
            });
    reg.add("G20.euler-odd", "E_{2m+1}(x) = sum 2^j C(2m+1,j) B_j CC^(1)_{2m+1-j}(x+1)", {"m"},
            [](const GridDefaults& d) { return ParameterGrid().axis("m", 1, (d.max_n_single - 1) / 2); },
            [](const Point& p) {
                const int m = p.i("m");
                return same(euler_poly(2 * m + 1), gen_euler_odd(m, 1));
            });
    reg.add("G20.euler-odd-at-zero", "sum 2^j C(2m+1,j) B_j CC^(1)_{2m+1-j}(1) = (1-2^(2m+2))/(m+1) B_{2m+2}", {"m"},
            [](const GridDefaults& d) { return ParameterGrid().axis("m", 1, (d.max_n_single - 1) / 2); },
            [](const Point& p) {
                const int m = p.i("m");
                const Rational rhs = (Rational(1) - Rational(2).pow(2 * m + 2)) * inv(m + 1) * bernoulli_number(2 * m + 2);
                return all_of({same(gen_euler_odd(m, 1)(Rational(0)), rhs), same(euler_poly(2 * m + 1)(Rational(0)), rhs)});
            });
    reg.add("G20.euler-even", "E_{2m}(x) = sum_{j<2m} 2^j C(2m,j) B_j (CC^(1)_{2m-j}(x+1) - CC^(1)_{2m-j}(1))", {"m"},
            [](const GridDefaults& d) { return ParameterGrid().axis("m", 1, d.max_n_single / 2); },
            [](const Point& p) {
                const int m = p.i("m");
                Poly rhs;
                for (int j = 0; j < 2 * m; ++j) {
                    const Poly c = CC(2 * m - j, 1);
                    rhs += (shift(c, Rational(1)) - K(c(Rational(1)))) *
                           (Rational(2).pow(j) * binomial(2 * m, j) * bernoulli_number(j));
                }
                const Poly e = euler_poly(2 * m);
                return all_of({same(e, rhs), same(e(Rational(0)), Rational(0))});
            });
    reg.add("G20.generalized-euler", "c^(k)_{2n+1}(x) = -(2n+1) sum u(n,m)/(2m+1) E^(k)_{2m+1}(x+n), c^^ with E^(k)(x-n)",
            {"n", "k"}, [](const GridDefaults& d) { return nk(d, 1, (d.max_n_single - 1) / 2); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                Poly a, b;
                for (int m = 1; m <= n; ++m) {
                    const Poly e = gen_euler_odd(m, k);
                    const Rational w = central_u(n, m) * inv(2 * m + 1);
                    a += shift(e, Rational(n)) * w;
                    b += shift(e, Rational(-n)) * w;
                }
                return all_of({same(c1(2 * n + 1, k), a * Rational(-(2 * n + 1))),
                               same(c2(2 * n + 1, k), b * Rational(2 * n + 1))});
            });
}

} // namespace

void register_poly(Registry& reg)
{
    register_g14(reg);
    register_g15(reg);
    register_g16(reg);
    register_g17(reg);
    register_g18(reg);
    register_g19(reg);
    register_g20(reg);
}

} // namespace polycauchy::identity
