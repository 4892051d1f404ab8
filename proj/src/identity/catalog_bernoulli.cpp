#include "registry.hpp"

namespace polycauchy::identity {

using namespace cat;

namespace {

Poly B(int n) { return bernoulli_poly(n); }

ParameterGrid ny(const GridDefaults& d, int lo)
{
    return grid_n(lo, d.max_n_double).axis("y", d.x_values);
}

void register_g11(Registry& reg)
{
    reg.add("G11.bernoulli-first", "-B_n(x)/n = sum c_m(x)/m {n-1, m-1}_x", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 1; m <= n; ++m)
                    rhs += c1(m) * G2(n - 1, m - 1) * inv(m);
                return same(B(n) * (-inv(n)), rhs);
            });
    reg.add("G11.bernoulli-second", "((-1)^n - B_n(x))/n = sum c^_m(-x)/m {n-1, m-1}_x", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 1; m <= n; ++m)
                    rhs += reflect(c2(m)) * G2(n - 1, m - 1) * inv(m);
                return same((K(sgn(n)) - B(n)) * inv(n), rhs);
            });
    reg.add("G11.power-sum-shift", "S_n(x) = S_n(a-1) + sum m! C(x+1-a, m+1) {n m}_a", {"n", "a"},
            [](const GridDefaults& d) { return grid_n(0, std::min(10, d.max_n_single)).axis("a", d.x_values); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational& a = p.r("a");
                const Poly s = power_sum_poly(n);
                Poly rhs = K(s(a - Rational(1)));
                for (int m = 0; m <= n; ++m)
                    rhs += binom_poly(Rational(1) - a, m + 1) * (factorial(m) * gsn2_at(n, m, a));
                return same(s, rhs);
            });
    reg.add("G11.bernoulli-numbers-first", "-B_n/n = (-1)^n sum c^_m/m {n m} = sum c_m/m {n-1, m-1}", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational a, b;
                for (int m = 1; m <= n; ++m) {
                    a += cn2(m) * inv(m) * stirling2(n, m);
                    b += cn1(m) * inv(m) * stirling2(n - 1, m - 1);
                }
                const Rational lhs = -bernoulli_number(n) / Rational(n);
                return all_of({same(lhs, sgn(n) * a), same(lhs, b)});
            });
    reg.add("G11.inv2", "-c_n(x)/n = sum (-1)^(n-m)/m [n-1, m-1]_x B_m(x)", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 1; m <= n; ++m)
                    rhs += G1(n - 1, m - 1) * B(m) * (sgn(n - m) * inv(m));
                return same(c1(n) * (-inv(n)), rhs);
            });
    reg.add("G11.inv3", "-c^_n(-x)/n = sum (-1)^n/m [n-1, m-1]_x ((-1)^m B_m(x) - 1)", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 1; m <= n; ++m)
                    rhs += G1(n - 1, m - 1) * (B(m) * sgn(m) - K(Rational(1))) * (sgn(n) * inv(m));
                return same(reflect(c2(n)) * (-inv(n)), rhs);
            });
    reg.add("G11.inv3-alt", "-c^_n(-x)/n = c^_{n-1}(-x) + sum (-1)^(n-m)/m [n-1, m-1]_x B_m(x)", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs = reflect(c2(n - 1));
                for (int m = 1; m <= n; ++m)
                    rhs += G1(n - 1, m - 1) * B(m) * (sgn(n - m) * inv(m));
                return same(reflect(c2(n)) * (-inv(n)), rhs);
            });
    reg.add("G11.exp5", "(-1)^(n+1) c^_n/n = sum [n m] B_m/m, (-1)^(n+1) c_n/n = sum (-1)^m [n-1, m-1] B_m/m", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational a, b;
                for (int m = 1; m <= n; ++m) {
                    a += stirling1(n, m) * bernoulli_number(m) * inv(m);
                    b += sgn(m) * stirling1(n - 1, m - 1) * bernoulli_number(m) * inv(m);
                }
                return all_of({same(sgn(n + 1) * cn2(n) / Rational(n), a), same(sgn(n + 1) * cn1(n) / Rational(n), b)});
            });
    reg.add("G11.sign-symmetric-sum", "sum [n-1, m-1] B_m/m = sum (-1)^m [n-1, m-1] B_m/m for n >= 2", {"n"},
            [](const GridDefaults& d) { return grid_n(2, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational a, b;
                for (int m = 1; m <= n; ++m) {
                    a += stirling1(n - 1, m - 1) * bernoulli_number(m) * inv(m);
                    b += sgn(m) * stirling1(n - 1, m - 1) * bernoulli_number(m) * inv(m);
                }
                return same(a, b);
            });
    reg.add("G11.odd-bernoulli", "B_{2m+1} = 0 for m >= 1", {"m"},
            [](const GridDefaults& d) { return ParameterGrid().axis("m", 1, d.max_n_single / 2); },
            [](const Point& p) { return same(bernoulli_number(2 * p.i("m") + 1), Rational(0)); });
}

void register_g12(Registry& reg)
{
    reg.add("G12.monomial-first", "B_n(x) = x^n - n sum c_m/m {n-1, m-1}_x", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly sum;
                for (int m = 1; m <= n; ++m)
                    sum += G2(n - 1, m - 1) * (cn1(m) * inv(m));
                return same(B(n), Poly::monomial(Rational(1), n) - sum * Rational(n));
            });
    reg.add("G12.monomial-second", "B_n(x) = (x-1)^n - n sum c^_m/m {n-1, m-1}_x", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly sum;
                for (int m = 1; m <= n; ++m)
                    sum += G2(n - 1, m - 1) * (cn2(m) * inv(m));
                return same(B(n), pow(X() - K(Rational(1)), n) - sum * Rational(n));
            });
    reg.add("G12.bernoulli-numbers", "B_n = (-1)^n (1 - n sum c_m/m {n m}) = (-1)^n - n sum c^_m/m {n-1, m-1}", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational a, b;
                for (int m = 1; m <= n; ++m) {
                    a += cn1(m) * inv(m) * stirling2(n, m);
                    b += cn2(m) * inv(m) * stirling2(n - 1, m - 1);
                }
                const Rational bn = bernoulli_number(n);
                return all_of({same(bn, sgn(n) * (Rational(1) - Rational(n) * a)), same(bn, sgn(n) - Rational(n) * b)});
            });
    reg.add("G12.difference", "sum (c_m - c_m(x))/m {n-1, m-1}_x = x^n/n", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly lhs;
                for (int m = 1; m <= n; ++m)
                    lhs += (K(cn1(m)) - c1(m)) * G2(n - 1, m - 1) * inv(m);
                return same(lhs, Poly::monomial(inv(n), n));
            });
    reg.add("G12.difference-numbers", "sum (c_m - c^_m)/m {n m} = 1/n", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational lhs;
                for (int m = 1; m <= n; ++m)
                    lhs += (cn1(m) - cn2(m)) * inv(m) * stirling2(n, m);
                return same(lhs, inv(n));
            });
    reg.add("G12.kargin-inverse", "sum {n+1, m+1} c^_m = 1/(n+1)", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational lhs;
                for (int m = 0; m <= n; ++m)
                    lhs += stirling2(n + 1, m + 1) * cn2(m);
                return same(lhs, inv(n + 1));
            });
    reg.add("G12.chat-even-at-n", "c^_{2n}(n) = -n sum u(n,m)/m B_{2m}", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single / 2); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational rhs;
                for (int m = 1; m <= n; ++m)
                    rhs += central_u(n, m) * inv(m) * bernoulli_number(2 * m);
                return same(c2(2 * n)(Rational(n)), Rational(-n) * rhs);
            });
}

void register_g13(Registry& reg)
{
    reg.add("G13.stirling-sum", "B_n(x) = sum (-1)^m m!/(m+1) {n m}_x", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += G2(n, m) * (sgn(m) * factorial(m) * inv(m + 1));
                return same(B(n), rhs);
            });
    reg.add("G13.double-power-sum", "B_n(x) = sum_m sum_l (-1)^l/(m+1) C(m,l) (x+l)^n", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    for (int l = 0; l <= m; ++l)
                        rhs += pow(X() + K(Rational(l)), n) * (sgn(l) * inv(m + 1) * binomial(m, l));
                return same(B(n), rhs);
            });
    reg.add("G13.reciprocal-bernoulli", "1/(m+1) = (1/m!) sum (-1)^l [m l]_y B_l(y)", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int m = p.i("n");
                Poly rhs;
                for (int l = 0; l <= m; ++l)
                    rhs += G1(m, l) * B(l) * sgn(l);
                return same(rhs * factorial(m).inverse(), K(inv(m + 1)));
            });

    // Mixed forms: polynomial in x at each y.
    reg.add("G13.mixed-a", "B_n(x) = sum_m sum_l (-1)^m m! {n m}_x {m l}_y c_l(y)", {"n", "y"},
            [](const GridDefaults& d) { return ny(d, 0); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational& y = p.r("y");
                Poly rhs;
                for (int m = 0; m <= n; ++m) {
                    Rational inner;
                    for (int l = 0; l <= m; ++l)
                        inner += gsn2_at(m, l, y) * c1(l)(y);
                    rhs += G2(n, m) * (sgn(m) * factorial(m) * inner);
                }
                return same(B(n), rhs);
            });
    reg.add("G13.mixed-b", "B_n(x) = sum_m sum_l m! {n m}_x {m l}_y c^_l(-y)", {"n", "y"},
            [](const GridDefaults& d) { return ny(d, 0); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational& y = p.r("y");
                Poly rhs;
                for (int m = 0; m <= n; ++m) {
                    Rational inner;
                    for (int l = 0; l <= m; ++l)
                        inner += gsn2_at(m, l, y) * c2(l)(-y);
                    rhs += G2(n, m) * (factorial(m) * inner);
                }
                return same(B(n), rhs);
            });
    reg.add("G13.mixed-c", "c_n(x) = sum_m sum_l (-1)^(n-m+l)/m! [n m]_x [m l]_y B_l(y)", {"n", "y"},
            [](const GridDefaults& d) { return ny(d, 0); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational& y = p.r("y");
                Poly rhs;
                for (int m = 0; m <= n; ++m) {
                    Rational inner;
                    for (int l = 0; l <= m; ++l)
                        inner += sgn(n - m + l) * gsn1_at(m, l, y) * B(l)(y);
                    rhs += G1(n, m) * (inner / factorial(m));
                }
                return same(c1(n), rhs);
            });
    reg.add("G13.mixed-d", "c^_n(-x) = sum_m sum_l (-1)^(n-l)/m! [n m]_x [m l]_y B_l(y)", {"n", "y"},
            [](const GridDefaults& d) { return ny(d, 0); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational& y = p.r("y");
                Poly rhs;
                for (int m = 0; m <= n; ++m) {
                    Rational inner;
                    for (int l = 0; l <= m; ++l)
                        inner += sgn(n - l) * gsn1_at(m, l, y) * B(l)(y);
                    rhs += G1(n, m) * (inner / factorial(m));
                }
                return same(reflect(c2(n)), rhs);
            });

    // Double forms. inner(m, y, second) = sum_l {m-1, l-1}_y c_{l-1}(y) or c^_{l-1}(-y).
    auto inner = [](int m, const Rational& y, bool second) {
        Rational acc;
        for (int l = 1; l <= m; ++l)
            acc += gsn2_at(m - 1, l - 1, y) * (second ? c2(l - 1)(-y) : c1(l - 1)(y));
        return acc;
    };
    struct Form {
        const char* id;
        const char* ref;
        bool outer_second; // c^_m(-x) (or c^_m) instead of c_m(x) (or c_m)
        bool inner_second;
        bool alternating;  // (-1)^m weight
    };
    static constexpr Form poly_forms[] = {
        {"G13.double-a", "-B_n(x)/n = sum sum {n-1, m-1}_x {m-1, l-1}_y c_m(x) c_{l-1}(y)", false, false, false},
        {"G13.double-b", "B_n(x)/n = sum sum (-1)^m {n-1, m-1}_x {m-1, l-1}_y c_m(x) c^_{l-1}(-y)", false, true, true},
        {"G13.double-c", "((-1)^n - B_n(x))/n = sum sum {n-1, m-1}_x {m-1, l-1}_y c^_m(-x) c_{l-1}(y)", true, false, false},
        {"G13.double-d", "(B_n(x) - (-1)^n)/n = sum sum (-1)^m {n-1, m-1}_x {m-1, l-1}_y c^_m(-x) c^_{l-1}(-y)", true, true, true},
    };
    for (const auto& f : poly_forms) {
        reg.add(f.id, f.ref, {"n", "y"}, [](const GridDefaults& d) { return ny(d, 1); },
                [f, inner](const Point& p) {
                    const int n = p.i("n");
                    const Rational& y = p.r("y");
                    Poly rhs;
                    for (int m = 1; m <= n; ++m) {
                        const Poly outer = f.outer_second ? reflect(c2(m)) : c1(m);
                        rhs += G2(n - 1, m - 1) * outer * ((f.alternating ? sgn(m) : Rational(1)) * inner(m, y, f.inner_second));
                    }
                    const Poly bn = B(n) * inv(n);
                    Poly lhs;
                    if (!f.outer_second)
                        lhs = f.inner_second ? bn : -bn;
                    else
                        lhs = f.inner_second ? bn - K(sgn(n) * inv(n)) : K(sgn(n) * inv(n)) - bn;
                    return same(lhs, rhs);
                });
    }
    static constexpr Form number_forms[] = {
        {"G13.double-e", "B_n(x) = x^n - n sum sum {n-1, m-1}_x {m-1, l-1}_y c_m c_{l-1}(y)", false, false, false},
        {"G13.double-f", "B_n(x) = x^n + n sum sum (-1)^m {n-1, m-1}_x {m-1, l-1}_y c_m c^_{l-1}(-y)", false, true, true},
        {"G13.double-g", "B_n(x) = (x-1)^n - n sum sum {n-1, m-1}_x {m-1, l-1}_y c^_m c_{l-1}(y)", true, false, false},
        {"G13.double-h", "B_n(x) = (x-1)^n + n sum sum (-1)^m {n-1, m-1}_x {m-1, l-1}_y c^_m c^_{l-1}(-y)", true, true, true},
    };
    for (const auto& f : number_forms) {
        reg.add(f.id, f.ref, {"n", "y"}, [](const GridDefaults& d) { return ny(d, 1); },
                [f, inner](const Point& p) {
                    const int n = p.i("n");
                    const Rational& y = p.r("y");
                    Poly sum;
                    for (int m = 1; m <= n; ++m) {
                        const Rational outer = f.outer_second ? cn2(m) : cn1(m);
                        sum += G2(n - 1, m - 1) * ((f.alternating ? sgn(m) : Rational(1)) * outer * inner(m, y, f.inner_second));
                    }
                    const Poly base = f.outer_second ? pow(X() - K(Rational(1)), n) : Poly::monomial(Rational(1), n);
                    const Rational s = f.inner_second ? Rational(n) : Rational(-n);
                    return same(B(n), base + sum * s);
                });
    }
}

} // namespace

void register_bernoulli(Registry& reg)
{
    register_g11(reg);
    register_g12(reg);
    register_g13(reg);
}

} // namespace polycauchy::identity
