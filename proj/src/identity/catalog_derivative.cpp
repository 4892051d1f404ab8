#include "registry.hpp"

#include <algorithm>

#include "polycauchy/series.hpp"

namespace polycauchy::identity {

using namespace cat;

namespace {

ParameterGrid n_i(int max_n, int lo_i = 0)
{
    return ParameterGrid().axis("n", 0, max_n).axis("i", lo_i, max_n).where("i<=n", [](const Point& p) {
        return le(p, "i", "n");
    });
}

Poly H(int n) { return hyperharmonic_poly(n); }

void register_g09(Registry& reg)
{
    reg.add("G09.higher-derivative-first", "d^i c_n = (-1)^i i! sum C(n,m) C(m,i) B_{m-i}^(n+1)(1-x)/(n+1-m)", {"n", "i"},
            [](const GridDefaults& d) { return n_i(d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), i = p.i("i");
                Poly rhs;
                for (int m = i; m <= n; ++m)
                    rhs += sub(gen_bernoulli_poly(m - i, n + 1), -1, Rational(1)) *
                           (binomial(n, m) * binomial(m, i) * inv(n + 1 - m));
                return same(derivative(c1(n), i), rhs * (sgn(i) * factorial(i)));
            });
    reg.add("G09.higher-derivative-second", "d^i c^_n = i! sum (-1)^(n-m) C(n,m) C(m,i) B_{m-i}^(n+1)(x+1)/(n+1-m)", {"n", "i"},
            [](const GridDefaults& d) { return n_i(d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), i = p.i("i");
                Poly rhs;
                for (int m = i; m <= n; ++m)
                    rhs += shift(gen_bernoulli_poly(m - i, n + 1), Rational(1)) *
                           (sgn(n - m) * binomial(n, m) * binomial(m, i) * inv(n + 1 - m));
                return same(derivative(c2(n), i), rhs * factorial(i));
            });
    reg.add("G09.der1", "d^i c_n = i! sum (-1)^m c_{n-m} C(n,m) [m i]_x", {"n", "i"},
            [](const GridDefaults& d) { return n_i(d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), i = p.i("i");
                Poly rhs;
                for (int m = i; m <= n; ++m)
                    rhs += G1(m, i) * (sgn(m) * cn1(n - m) * binomial(n, m));
                return same(derivative(c1(n), i), rhs * factorial(i));
            });
    reg.add("G09.der2", "d^i c^_n = (-1)^i i! sum (-1)^m c^_{n-m} C(n,m) [m i]_{-x}", {"n", "i"},
            [](const GridDefaults& d) { return n_i(d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), i = p.i("i");
                Poly rhs;
                for (int m = i; m <= n; ++m)
                    rhs += G1_neg(m, i) * (sgn(m) * cn2(n - m) * binomial(n, m));
                return same(derivative(c2(n), i), rhs * (sgn(i) * factorial(i)));
            });
    reg.add("G09.der-bernoulli", "derivative formulas through c_{n-m} C(n,m) C(m,i) B_{m-i}^(m+1)", {"n", "i"},
            [](const GridDefaults& d) { return n_i(d.max_n_double); },
            [](const Point& p) {
                const int n = p.i("n"), i = p.i("i");
                Poly a, b;
                for (int m = i; m <= n; ++m) {
                    const Poly g = gen_bernoulli_poly(m - i, m + 1);
                    const Rational w = binomial(n, m) * binomial(m, i);
                    a += sub(g, -1, Rational(1)) * (cn1(n - m) * w);
                    b += shift(g, Rational(1)) * (cn2(n - m) * w);
                }
                return all_of({same(derivative(c1(n), i), a * (sgn(i) * factorial(i))),
                               same(derivative(c2(n), i), b * factorial(i))});
            });
    reg.add("G09.gould", "B_v^(m+1)(x+1) = v! d^(m-v)/dx^(m-v) C(x, m)", {"n", "i"},
            [](const GridDefaults& d) { return n_i(d.max_n_double); },
            [](const Point& p) {
                const int m = p.i("n"), v = p.i("i");
                return same(shift(gen_bernoulli_poly(v, m + 1), Rational(1)),
                            derivative(binom_poly(Rational(0), m), m - v) * factorial(v));
            });
    reg.add("G09.gs1ber", "[m i]_x = (-1)^(m-i) C(m,i) B_{m-i}^(m+1)(1-x)", {"n", "i"},
            [](const GridDefaults& d) { return n_i(d.max_n_double); },
            [](const Point& p) {
                const int m = p.i("n"), i = p.i("i");
                return same(G1(m, i), sub(gen_bernoulli_poly(m - i, m + 1), -1, Rational(1)) * (sgn(m - i) * binomial(m, i)));
            });
    reg.add("G09.gbp1", "c_n(x) = sum C(n,m) B_m^(n+1)(1-x)/(n+1-m)", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += sub(gen_bernoulli_poly(m, n + 1), -1, Rational(1)) * (binomial(n, m) * inv(n + 1 - m));
                return same(c1(n), rhs);
            });
    reg.add("G09.gbp2", "c^_n(x) = sum (-1)^(n-m) C(n,m) B_m^(n+1)(x+1)/(n+1-m)", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += shift(gen_bernoulli_poly(m, n + 1), Rational(1)) * (sgn(n - m) * binomial(n, m) * inv(n + 1 - m));
                return same(c2(n), rhs);
            });
    reg.add("G09.appell", "d^i B_m^(a)(x) = i! C(m,i) B_{m-i}^(a)(x)", {"n", "i", "a"},
            [](const GridDefaults& d) { return n_i(d.max_n_double).axis("a", 0, d.max_n_double + 1); },
            [](const Point& p) {
                const int m = p.i("n"), i = p.i("i"), a = p.i("a");
                return same(derivative(gen_bernoulli_poly(m, a), i),
                            gen_bernoulli_poly(m - i, a) * (factorial(i) * binomial(m, i)));
            });
    reg.add("G09.binomial-derivatives", "d^i C(x+m-1, m) = i!/m! [m i]_x, d^i C(x, m) = (-1)^(m-i) i!/m! [m i]_{-x}",
            {"n", "i"}, [](const GridDefaults& d) { return n_i(d.max_n_single); },
            [](const Point& p) {
                const int m = p.i("n"), i = p.i("i");
                const Rational w = factorial(i) / factorial(m);
                return all_of({same(derivative(binom_poly(Rational(m - 1), m), i), G1(m, i) * w),
                               same(derivative(binom_poly(Rational(0), m), i), G1_neg(m, i) * (sgn(m - i) * w))});
            });
    reg.add("G09.der12", "d^i c_n = (-1)^n n (i-1)! sum C(m-1,i-1) [n-1, m-1] x^(m-i) = (-1)^n n (i-1)! [n-1, i-1]_x",
            {"n", "i"}, [](const GridDefaults& d) { return n_i(d.max_n_single, 1); },
            [](const Point& p) {
                const int n = p.i("n"), i = p.i("i");
                const Rational pre = sgn(n) * Rational(n) * factorial(i - 1);
                Poly mid;
                for (int m = i; m <= n; ++m)
                    mid += Poly::monomial(binomial(m - 1, i - 1) * stirling1(n - 1, m - 1), m - i);
                const Poly lhs = derivative(c1(n), i);
                return all_of({same(lhs, mid * pre), same(lhs, G1(n - 1, i - 1) * pre)});
            });
    reg.add("G09.der22", "d^i c^_n = (-1)^n n (i-1)! sum (-1)^m C(m-1,i-1) [n-1, m-1] (x-1)^(m-i) = (-1)^(n+i) n (i-1)! [n-1, i-1]_{1-x}",
            {"n", "i"}, [](const GridDefaults& d) { return n_i(d.max_n_single, 1); },
            [](const Point& p) {
                const int n = p.i("n"), i = p.i("i");
                const Rational pre = Rational(n) * factorial(i - 1);
                Poly mid;
                for (int m = i; m <= n; ++m)
                    mid += pow(X() - K(Rational(1)), m - i) * (sgn(m) * binomial(m - 1, i - 1) * stirling1(n - 1, m - 1));
                const Poly lhs = derivative(c2(n), i);
                return all_of({same(lhs, mid * (sgn(n) * pre)),
                               same(lhs, sub(G1(n - 1, i - 1), -1, Rational(1)) * (sgn(n + i) * pre))});
            });
    reg.add("G09.gder1", "sum (-1)^(n-m) c_{n-m} C(n,m) [m i]_x = (n/i) [n-1, i-1]_x", {"n", "i"},
            [](const GridDefaults& d) { return n_i(d.max_n_double, 1); },
            [](const Point& p) {
                const int n = p.i("n"), i = p.i("i");
                Poly lhs;
                for (int m = i; m <= n; ++m)
                    lhs += G1(m, i) * (sgn(n - m) * cn1(n - m) * binomial(n, m));
                return same(lhs, G1(n - 1, i - 1) * Rational(n, i));
            });
    reg.add("G09.gder2", "sum (-1)^(n-m) c^_{n-m} C(n,m) [m i]_x = (n/i) [n-1, i-1]_{x+1}", {"n", "i"},
            [](const GridDefaults& d) { return n_i(d.max_n_double, 1); },
            [](const Point& p) {
                const int n = p.i("n"), i = p.i("i");
                Poly lhs;
                for (int m = i; m <= n; ++m)
                    lhs += G1(m, i) * (sgn(n - m) * cn2(n - m) * binomial(n, m));
                return same(lhs, shift(G1(n - 1, i - 1), Rational(1)) * Rational(n, i));
            });
    reg.add("G09.merlin", "c_n/n! = sum_{m<n} c_m/m! (-1)^(n+1-m)/(n+1-m)", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational rhs;
                for (int m = 0; m < n; ++m)
                    rhs += cn1(m) / factorial(m) * sgn(n + 1 - m) * inv(n + 1 - m);
                return same(cn1(n) / factorial(n), rhs);
            });
    reg.add("G09.harmonic-half", "sum (-1)^(n-m)/(m+1) c_{n-m}/(n-m)! H_m = 1/(2n)", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational lhs;
                for (int m = 0; m <= n; ++m)
                    lhs += sgn(n - m) * inv(m + 1) * cn1(n - m) / factorial(n - m) * harmonic_number(m);
                return same(lhs, inv(2 * n));
            });
    reg.add("G09.zhao", "sum (-1)^(n-m) c_{n-m}/(n-m)! H_{m+1} = 1", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational lhs;
                for (int m = 0; m <= n; ++m)
                    lhs += sgn(n - m) * cn1(n - m) / factorial(n - m) * harmonic_number(m + 1);
                return same(lhs, Rational(1));
            });
    reg.add("G09.gder2-i1-x0", "c^_n/n! = (-1)^n + sum_{m<n} c^_m/m! (-1)^(n+1-m)/(n+1-m)", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational rhs = sgn(n);
                for (int m = 0; m < n; ++m)
                    rhs += cn2(m) / factorial(m) * sgn(n + 1 - m) * inv(n + 1 - m);
                return same(cn2(n) / factorial(n), rhs);
            });
    reg.add("G09.gder2-i2-x0", "sum (-1)^(n-m)/(m+1) c^_{n-m}/(n-m)! H_m = H_n/2", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational lhs;
                for (int m = 0; m <= n; ++m)
                    lhs += sgn(n - m) * inv(m + 1) * cn2(n - m) / factorial(n - m) * harmonic_number(m);
                return same(lhs, harmonic_number(n) / Rational(2));
            });
    reg.add("G09.gder2-i1-x1", "sum (-1)^(n-m) c^_{n-m}/(n-m)! H_{m+1} = n+1", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational lhs;
                for (int m = 0; m <= n; ++m)
                    lhs += sgn(n - m) * cn2(n - m) / factorial(n - m) * harmonic_number(m + 1);
                return same(lhs, Rational(n + 1));
            });
    reg.add("G09.derivative-api", "cauchy_derivative agrees with formal differentiation", {"n", "i"},
            [](const GridDefaults& d) { return n_i(d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n"), i = p.i("i");
                return all_of({same(cauchy_derivative(CauchyKind::first, n, 1, i), derivative(c1(n), i)),
                               same(cauchy_derivative(CauchyKind::second, n, 1, i), derivative(c2(n), i))});
            });
}

void register_g10(Registry& reg)
{
    auto ny = [](const GridDefaults& d) { return grid_n(0, d.max_n_single).axis("y", d.x_values); };
    reg.add("G10.hyp1", "sum (-1)^m c_m(x)/m! H_{n+1-m}^(y) = C(x+y+n-1, n)", {"n", "y"}, ny,
            [](const Point& p) {
                const int n = p.i("n");
                const Rational& y = p.r("y");
                Poly lhs;
                for (int m = 0; m <= n; ++m)
                    lhs += c1(m) * (sgn(m) / factorial(m) * H(n + 1 - m)(y));
                return same(lhs, binom_poly(y + Rational(n - 1), n));
            });
    reg.add("G10.hyp2", "sum (-1)^m c^_m(x)/m! H_{n+1-m}^(y) = C(-x+y+n, n)", {"n", "y"}, ny,
            [](const Point& p) {
                const int n = p.i("n");
                const Rational& y = p.r("y");
                Poly lhs;
                for (int m = 0; m <= n; ++m)
                    lhs += c2(m) * (sgn(m) / factorial(m) * H(n + 1 - m)(y));
                return same(lhs, binom_poly<Rational>(y + Rational(n), -1, n));
            });
    reg.add("G10.hyp3", "sum (-1)^m c_m(x)/m! H_{n+1-m}^(-x) = delta_{n,0}", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly lhs;
                for (int m = 0; m <= n; ++m)
                    lhs += c1(m) * reflect(H(n + 1 - m)) * (sgn(m) / factorial(m));
                return same(lhs, K(delta(n, 0)));
            });
    reg.add("G10.hyp4", "sum (-1)^m c^_m(x)/m! H_{n+1-m}^(x) = 1", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly lhs;
                for (int m = 0; m <= n; ++m)
                    lhs += c2(m) * H(n + 1 - m) * (sgn(m) / factorial(m));
                return same(lhs, K(Rational(1)));
            });
    reg.add("G10.conec1", "c_n(x)/n! = sum_{m<n} c_m(x)/m! sum_t (-1)^(n+1-m-t)/(n+1-m-t) C(x,t)", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m < n; ++m) {
                    Poly inner;
                    for (int t = 0; t <= n - m; ++t)
                        inner += binom_poly(Rational(0), t) * (sgn(n + 1 - m - t) * inv(n + 1 - m - t));
                    rhs += c1(m) * inner * factorial(m).inverse();
                }
                return same(c1(n) * factorial(n).inverse(), rhs);
            });
    reg.add("G10.conec2", "c^_n(x)/n! = (-1)^n + sum_{m<n} c^_m(x)/m! sum_t (-1)^(n+1-m)/(n+1-m-t) C(x+t-1,t)", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs = K(sgn(n));
                for (int m = 0; m < n; ++m) {
                    Poly inner;
                    for (int t = 0; t <= n - m; ++t)
                        inner += binom_poly(Rational(t - 1), t) * (sgn(n + 1 - m) * inv(n + 1 - m - t));
                    rhs += c2(m) * inner * factorial(m).inverse();
                }
                return same(c2(n) * factorial(n).inverse(), rhs);
            });
    reg.add("G10.h-minus-one", "H_{n+1}^(-1) = 1 for n = 0, -1/(n(n+1)) for n >= 1", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational want = n == 0 ? Rational(1) : -inv(static_cast<long>(n) * (n + 1));
                return same(H(n + 1)(Rational(-1)), want);
            });
    reg.add("G10.y-minus-one-first", "c_n(x)/n! = (-1)^n C(x+n-2, n) + sum c_m(x)/m! (-1)^(n-m)/((n-m)(n+1-m))", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs = binom_poly(Rational(n - 2), n) * sgn(n);
                for (int m = 0; m < n; ++m)
                    rhs += c1(m) * (factorial(m).inverse() * sgn(n - m) * inv(static_cast<long>(n - m) * (n + 1 - m)));
                return same(c1(n) * factorial(n).inverse(), rhs);
            });
    reg.add("G10.hyp5", "c^_n(x)/n! = C(x,n) + sum c^_m(x)/m! (-1)^(n-m)/((n-m)(n+1-m))", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs = binom_poly(Rational(0), n);
                for (int m = 0; m < n; ++m)
                    rhs += c2(m) * (factorial(m).inverse() * sgn(n - m) * inv(static_cast<long>(n - m) * (n + 1 - m)));
                return same(c2(n) * factorial(n).inverse(), rhs);
            });
    reg.add("G10.hyp5-numbers", "the x = 0 and x = 1 forms of hyp5", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational a, b = delta(n, 1);
                for (int m = 0; m < n; ++m) {
                    const Rational w = sgn(n - m) * inv(static_cast<long>(n - m) * (n + 1 - m)) / factorial(m);
                    a += cn2(m) * w;
                    b += cn1(m) * w;
                }
                return all_of({same(cn2(n) / factorial(n), a), same(cn1(n) / factorial(n), b)});
            });
    reg.add("G10.hyp6", "c_n(x)/n! = sum (-1)^m c^_m(x+n)/m!", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += shift(c2(m), Rational(n)) * (sgn(m) / factorial(m));
                return same(c1(n) * factorial(n).inverse(), rhs);
            });
    reg.add("G10.hyp7", "c^_n(x)/n! = sum (-1)^m c_m(x-n)/m!", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += shift(c1(m), Rational(-n)) * (sgn(m) / factorial(m));
                return same(c2(n) * factorial(n).inverse(), rhs);
            });
    reg.add("G10.hyp6-integral", "int_0^1 C(-x+y+n, n) dy = c_n(x-n)/n!", {"n", "x"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single).axis("x", d.x_values); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational& x = p.r("x");
                return same(integrate_01(binom_poly(Rational(n) - x, n)), c1(n)(x - Rational(n)) / factorial(n));
            });
    reg.add("G10.hyp6-average", "sum (-1)^m c^_m(x)/m! int_0^1 H_{n+1-m}^(y) dy = c_n(x-n)/n!", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly lhs;
                for (int m = 0; m <= n; ++m)
                    lhs += c2(m) * (sgn(m) / factorial(m) * integrate_01(H(n + 1 - m)));
                return same(lhs, shift(c1(n), Rational(-n)) * factorial(n).inverse());
            });
    reg.add("G10.hyperharmonic-derivative", "H_{j+1}^(y) = d/dy C(y+j, j+1)", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int j = p.i("n");
                return same(H(j + 1), derivative(binom_poly(Rational(j), j + 1)));
            });
    reg.add("G10.special-values", "c_n(-n) = (-1)^n c_n(2), c^_n(n) = (-1)^n c^_n", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                return all_of({same(c1(n)(Rational(-n)), sgn(n) * c1(n)(Rational(2))),
                               same(c2(n)(Rational(n)), sgn(n) * cn2(n))});
            });
    reg.add("G10.bernoulli-first", "H_n^(x) = (1/n!) sum (-1)^(n-m) C(n,m) c_{n-m} sum [m+1, i+1] i B_{i-1}(x)", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 1; m <= n; ++m) {
                    Poly inner;
                    for (int i = 1; i <= m; ++i)
                        inner += bernoulli_poly(i - 1) * (stirling1(m + 1, i + 1) * Rational(i));
                    rhs += inner * (sgn(n - m) * binomial(n, m) * cn1(n - m));
                }
                return same(H(n), rhs * factorial(n).inverse());
            });
    reg.add("G10.bernoulli-second", "H_n^(x+1) = (1/n!) sum (-1)^(n-m) C(n,m) c^_{n-m} sum [m+1, i+1] i B_{i-1}(x)", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 1; m <= n; ++m) {
                    Poly inner;
                    for (int i = 1; i <= m; ++i)
                        inner += bernoulli_poly(i - 1) * (stirling1(m + 1, i + 1) * Rational(i));
                    rhs += inner * (sgn(n - m) * binomial(n, m) * cn2(n - m));
                }
                return same(shift(H(n), Rational(1)), rhs * factorial(n).inverse());
            });
    reg.add("G10.rep2-vs-gfhp", "explicit hyperharmonic sum equals the generating-function coefficients", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                const auto s = gf_hyperharmonic(std::max(n, 1));
                return same(H(n), s[n]);
            });
    reg.add("G10.hyperharmonic-values", "H_0 = 0, H_n^(0) = 1/n, H_n^(1) = H_n", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                if (n == 0)
                    return same(H(0), Poly());
                return all_of({same(H(n)(Rational(0)), inv(n)), same(H(n)(Rational(1)), harmonic_number(n))});
            });
    reg.add("G10.printed-table", "published H_1^(x) .. H_7^(x)", {"n"}, [](const GridDefaults& d) { return grid_n(1, std::min(7, d.max_n_single)); },
            [](const Point& p) {
                using R = Rational;
                static const std::vector<Poly> table{
                    Poly{R(1)},
                    Poly{R(1, 2), R(1)},
                    Poly{R(1, 3), R(1), R(1, 2)},
                    Poly{R(1, 4), R(11, 12), R(3, 4), R(1, 6)},
                    Poly{R(1, 5), R(5, 6), R(7, 8), R(1, 3), R(1, 24)},
                    Poly{R(1, 6), R(137, 180), R(15, 16), R(17, 36), R(5, 48), R(1, 120)},
                    Poly{R(1, 7), R(7, 10), R(29, 30), R(7, 12), R(25, 144), R(1, 40), R(1, 720)},
                };
                const int n = p.i("n");
                return same(H(n), table[static_cast<std::size_t>(n - 1)]);
            });
}

} // namespace

void register_derivative(Registry& reg)
{
    register_g09(reg);
    register_g10(reg);
}

} // namespace polycauchy::identity
