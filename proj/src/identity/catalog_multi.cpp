#include "registry.hpp"

#include "polycauchy/golden.hpp"
#include "polycauchy/series.hpp"

namespace polycauchy::identity {

using namespace cat;

namespace {

MultiParam param(const Point& p, int n)
{
    const auto& L = p.l();
    return MultiParam{n, static_cast<int>(L.size()), p.i("a"), p.r("q"), L, p.r("y")};
}

Rational product(const std::vector<Rational>& L)
{
    Rational acc(1);
    for (const auto& l : L)
        acc *= l;
    return acc;
}

/// int over the box [0,l_1] x ... x [0,l_k] of f(t_1 ... t_k), f given as a polynomial in t.
Rational box_integral(const Poly& f, const std::vector<Rational>& L)
{
    const Rational P = product(L);
    const int k = static_cast<int>(L.size());
    Rational acc;
    for (int i = 0; i <= f.degree(); ++i)
        acc += f.coeff(i) * P.pow(i + 1) * inv_pow(i + 1, k);
    return acc;
}

Rational S1(int n, int m, const Rational& y, const Rational& q)
{
    return gsn_bivariate(StirlingKind::first, n, m).at(y, q);
}

Rational S2(int n, int m, const Rational& y, const Rational& q)
{
    return gsn_bivariate(StirlingKind::second, n, m).at(y, q);
}

/// {n m}_(y,q) straight from the finite-difference sum.
Rational S2_explicit(int n, int m, const Rational& y, const Rational& q)
{
    Rational acc;
    for (int l = 0; l <= m; ++l)
        acc += sgn(m - l) * binomial(m, l) * (y + Rational(l) * q).pow(n);
    return acc / (factorial(m) * q.pow(m));
}

/// [n m]_(y,q) straight from its defining sum.
Rational S1_explicit(int n, int m, const Rational& y, const Rational& q)
{
    Rational acc;
    for (int i = 0; i <= n - m; ++i)
        acc += binomial(i + m, m) * stirling1(n, i + m) * y.pow(i) * q.pow(n - m - i);
    return acc;
}

std::vector<Rational> ones(int k) { return std::vector<Rational>(static_cast<std::size_t>(k), Rational(1)); }

ParameterGrid multi_grid(const GridDefaults& d, int lo, int hi, bool with_y = true)
{
    ParameterGrid g;
    g.axis("n", lo, hi).axis("a", 1, d.max_a).axis("q", d.q_values);
    if (with_y)
        g.axis("y", d.x_values);
    g.l_choices(d.l_values);
    return g;
}

ParameterGrid small_y(const GridDefaults& d, int hi)
{
    ParameterGrid g;
    g.axis("n", 0, hi).axis("a", 1, d.max_a).axis("q", d.q_values).axis("y", {Rational(0), Rational(1), Rational(-3, 2)});
    g.l_choices(d.l_values);
    return g;
}

void register_g21(Registry& reg)
{
    reg.add("G21.shif1", "c^(k)_{n,a,q,L} = sum (-q)^(n-m) P^(m+a)/(m+a)^k [n m], against the box integral",
            {"n", "a", "q", "L"}, [](const GridDefaults& d) { return multi_grid(d, 1, d.max_n_double, false); },
            [](const Point& p) {
                const int n = p.i("n"), a = p.i("a");
                const Rational& q = p.r("q");
                Poly f = Poly::monomial(Rational(1), a);
                for (int j = 1; j <= n - 1; ++j)
                    f = f * (X() - K(Rational(j) * q));
                return same(shifted_cauchy_number(CauchyKind::first, n, a, q, p.l()), box_integral(f, p.l()));
            });
    reg.add("G21.shif2", "c^^(k)_{n,a,q,L} = (-1)^n sum q^(n-m) P^(m+a)/(m+a)^k [n m], against the box integral",
            {"n", "a", "q", "L"}, [](const GridDefaults& d) { return multi_grid(d, 1, d.max_n_double, false); },
            [](const Point& p) {
                const int n = p.i("n"), a = p.i("a");
                const Rational& q = p.r("q");
                Poly f = pow(-X(), a) * sgn(a - 1);
                for (int j = 1; j <= n - 1; ++j)
                    f = f * (-X() - K(Rational(j) * q));
                return same(shifted_cauchy_number(CauchyKind::second, n, a, q, p.l()), box_integral(f, p.l()));
            });
    reg.add("G21.para1", "multiparameter c via bivariate Stirling polynomials equals the box integral",
            {"n", "a", "q", "y", "L"}, [](const GridDefaults& d) { return small_y(d, d.max_n_triple); },
            [](const Point& p) {
                const MultiParam mp = param(p, p.i("n"));
                return same(multiparam_cauchy(CauchyKind::first, mp), multiparam_cauchy_integral(CauchyKind::first, mp));
            });
    reg.add("G21.para2", "multiparameter c^ via bivariate Stirling polynomials equals the box integral",
            {"n", "a", "q", "y", "L"}, [](const GridDefaults& d) { return small_y(d, d.max_n_triple); },
            [](const Point& p) {
                const MultiParam mp = param(p, p.i("n"));
                return same(multiparam_cauchy(CauchyKind::second, mp), multiparam_cauchy_integral(CauchyKind::second, mp));
            });
    reg.add("G21.para-explicit", "c = (-1)^(a-1) sum (-1)^n [n m]_(y,q) CC_{m+a-1}(x;L), c^ with (-1)^(n-m) and (-y,q)",
            {"n", "a", "q", "y", "L"}, [](const GridDefaults& d) { return multi_grid(d, 0, d.max_n_triple); },
            [](const Point& p) {
                const int n = p.i("n"), a = p.i("a");
                const Rational &q = p.r("q"), &y = p.r("y");
                const MultiParam mp = param(p, n);
                Poly first, second;
                for (int m = 0; m <= n; ++m) {
                    const Poly cc = c_aux_poly_L(m + a - 1, p.l());
                    first += cc * (sgn(n) * S1_explicit(n, m, y, q));
                    second += cc * (sgn(n - m) * S1_explicit(n, m, -y, q));
                }
                return all_of({same(multiparam_cauchy(CauchyKind::first, mp), first * sgn(a - 1)),
                               same(multiparam_cauchy(CauchyKind::second, mp), second * sgn(a - 1))});
            });
    reg.add("G21.def2", "CC_j(x;L) = sum (-1)^i/(i+1)^k P^(i+1) C(j,i) x^(j-i), CC_0 = P", {"n", "L"},
            [](const GridDefaults& d) {
                ParameterGrid g;
                g.axis("n", 0, d.max_n_single).l_choices(d.l_values);
                return g;
            },
            [](const Point& p) {
                const int j = p.i("n");
                const auto& L = p.l();
                const Rational P = product(L);
                const int k = static_cast<int>(L.size());
                Poly rhs;
                if (j == 0)
                    rhs = K(P);
                for (int i = 0; j >= 1 && i <= j; ++i)
                    rhs += Poly::monomial(sgn(i) * inv_pow(i + 1, k) * P.pow(i + 1) * binomial(j, i), j - i);
                std::vector<Outcome> parts{same(c_aux_poly_L(j, L), rhs)};
                if (L == ones(k))
                    parts.push_back(same(c_aux_poly_L(j, L), c_aux_poly(j, k)));
                return all_of(parts);
            });
    reg.add("G21.bivariate-generating", "prod_{j<n} (x - y - jq) = sum (-1)^(n-m) [n m]_(y,q) x^m", {"n", "q", "y"},
            [](const GridDefaults& d) {
                return ParameterGrid().axis("n", 0, d.max_n_double).axis("q", d.q_values).axis("y", d.x_values);
            },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational &q = p.r("q"), &y = p.r("y");
                Poly lhs(Rational(1));
                for (int j = 0; j < n; ++j)
                    lhs = lhs * (X() - K(y + Rational(j) * q));
                Poly a, b;
                for (int m = 0; m <= n; ++m) {
                    a += Poly::monomial(sgn(n - m) * S1(n, m, y, q), m);
                    b += Poly::monomial(sgn(n - m) * S1_explicit(n, m, y, q), m);
                }
                return all_of({same(lhs, a), same(lhs, b)});
            });
    reg.add("G21.bivariate-zero", "[n m]_(0,q) = [n m] q^(n-m)", {"n", "m", "q"},
            [](const GridDefaults& d) {
                return ParameterGrid()
                    .axis("n", 0, d.max_n_single)
                    .axis("m", 0, d.max_n_single)
                    .axis("q", d.q_values)
                    .where("m<=n", [](const Point& p) { return le(p, "m", "n"); });
            },
            [](const Point& p) {
                const int n = p.i("n"), m = p.i("m");
                const Rational& q = p.r("q");
                return same(S1(n, m, Rational(0), q), stirling1(n, m) * q.pow(n - m));
            });
    reg.add("G21.x0", "c_{n,a,q,L,y}(0) = sum (-1)^(n-m) [n m]_(y,q) P^(m+a)/(m+a)^k, c^(0) = (-1)^n sum [n m]_(-y,q) ...",
            {"n", "a", "q", "y", "L"}, [](const GridDefaults& d) { return multi_grid(d, 0, d.max_n_triple); },
            [](const Point& p) {
                const int n = p.i("n"), a = p.i("a");
                const Rational &q = p.r("q"), &y = p.r("y");
                const MultiParam mp = param(p, n);
                const Rational P = product(mp.L);
                Rational first, second;
                for (int m = 0; m <= n; ++m) {
                    const Rational w = P.pow(m + a) * inv_pow(m + a, mp.k);
                    first += sgn(n - m) * S1(n, m, y, q) * w;
                    second += S1(n, m, -y, q) * w;
                }
                return all_of({same(multiparam_cauchy(CauchyKind::first, mp)(Rational(0)), first),
                               same(multiparam_cauchy(CauchyKind::second, mp)(Rational(0)), sgn(n) * second)});
            });
    reg.add("G21.y0-shifted", "c_{n,a,q,L,0}(0) and c^_{n,a,q,L,0}(0) are the shifted numbers", {"n", "a", "q", "L"},
            [](const GridDefaults& d) { return multi_grid(d, 0, d.max_n_double, false); },
            [](const Point& p) {
                const int n = p.i("n"), a = p.i("a");
                const MultiParam mp{n, static_cast<int>(p.l().size()), a, p.r("q"), p.l(), Rational(0)};
                return all_of({same(multiparam_cauchy(CauchyKind::first, mp)(Rational(0)),
                                    shifted_cauchy_number(CauchyKind::first, n, a, mp.q, mp.L)),
                               same(multiparam_cauchy(CauchyKind::second, mp)(Rational(0)),
                                    shifted_cauchy_number(CauchyKind::second, n, a, mp.q, mp.L))});
            });
    reg.add("G21.reduction", "a = q = l_i = 1, y = 0 gives c^(k)_n(x) = sum (-1)^n [n m] CC_m(x) and c^ with (-1)^(n-m)",
            {"n", "k"}, [](const GridDefaults& d) { return ParameterGrid().axis("n", 0, d.max_n_double).axis("k", 1, d.max_k); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                const MultiParam mp{n, k, 1, Rational(1), ones(k), Rational(0)};
                Poly a, b;
                for (int m = 0; m <= n; ++m) {
                    a += c_aux_poly(m, k) * (sgn(n) * stirling1(n, m));
                    b += c_aux_poly(m, k) * (sgn(n - m) * stirling1(n, m));
                }
                const Poly c = c1(n, k), ch = c2(n, k);
                return all_of({same(multiparam_cauchy(CauchyKind::first, mp), c), same(c, a),
                               same(multiparam_cauchy(CauchyKind::second, mp), ch), same(ch, b)});
            });
    reg.add("G21.reduction-in-y", "a = q = l_i = 1: c_{n,y}(0) = c^(k)_n(y) and c^_{n,y}(0) = c^^(k)_n(y)", {"n", "k", "y"},
            [](const GridDefaults& d) {
                return ParameterGrid().axis("n", 0, d.max_n_double).axis("k", 1, d.max_k).axis("y", d.x_values);
            },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                const Rational& y = p.r("y");
                const MultiParam mp{n, k, 1, Rational(1), ones(k), y};
                return all_of({same(multiparam_cauchy(CauchyKind::first, mp)(Rational(0)), c1(n, k)(y)),
                               same(multiparam_cauchy(CauchyKind::second, mp)(Rational(0)), c2(n, k)(y))});
            });
    reg.add("G21.degree", "multiparameter polynomials have degree n+a-1", {"n", "a", "q", "y", "L"},
            [](const GridDefaults& d) { return multi_grid(d, 0, d.max_n_triple); },
            [](const Point& p) {
                const MultiParam mp = param(p, p.i("n"));
                const int expect = mp.n + mp.a - 1;
                const int d1 = multiparam_cauchy(CauchyKind::first, mp).degree();
                const int d2 = multiparam_cauchy(CauchyKind::second, mp).degree();
                return holds(d1 == expect && d2 == expect, std::to_string(d1) + "," + std::to_string(d2),
                             std::to_string(expect));
            });
    reg.add("G21.a1-symmetry", "for a = 1 both families are symmetric in x and y", {"n", "q", "L"},
            [](const GridDefaults& d) {
                ParameterGrid g;
                g.axis("n", 0, d.max_n_triple).axis("q", d.q_values).l_choices(d.l_values);
                return g;
            },
            [](const Point& p) {
                const auto& L = p.l();
                const MultiParam mp{p.i("n"), static_cast<int>(L.size()), 1, p.r("q"), L, Rational(0)};
                std::vector<Outcome> parts;
                for (auto kind : {CauchyKind::first, CauchyKind::second}) {
                    const BivariatePoly b = multiparam_cauchy_xy(kind, mp);
                    parts.push_back(holds(b == transpose(b), "transpose differs", "symmetric"));
                }
                return all_of(parts);
            });
    reg.add("G21.xy-consistency", "the bivariate form evaluated at y matches the univariate one", {"n", "a", "q", "y", "L"},
            [](const GridDefaults& d) { return small_y(d, d.max_n_triple); },
            [](const Point& p) {
                const MultiParam mp = param(p, p.i("n"));
                std::vector<Outcome> parts;
                for (auto kind : {CauchyKind::first, CauchyKind::second})
                    parts.push_back(same(eval_inner(multiparam_cauchy_xy(kind, mp), mp.y), multiparam_cauchy(kind, mp)));
                return all_of(parts);
            });
    reg.add("G21.minus-q", "c_{n,a,q,L,y}(x) = (-1)^n c^_{n,a,-q,L,y}(x)", {"n", "a", "q", "y", "L"},
            [](const GridDefaults& d) { return multi_grid(d, 0, d.max_n_triple); },
            [](const Point& p) {
                const MultiParam mp = param(p, p.i("n"));
                MultiParam neg = mp;
                neg.q = -mp.q;
                return same(multiparam_cauchy(CauchyKind::first, mp), multiparam_cauchy(CauchyKind::second, neg) * sgn(mp.n));
            });
    auto sqrt5 = [](CauchyKind kind) {
        return [kind](const Point&) {
            const MultiParam mp = golden::sqrt5_point();
            const QuadraticSurd expect = golden::sqrt5_value(kind);
            const QuadraticSurd got = evaluate_at_sqrt(multiparam_cauchy(kind, mp), Rational(5));
            // Swap roles: y = sqrt(5), x = -3/2.
            const QuadraticSurd swapped =
                evaluate_at_sqrt(eval_outer(multiparam_cauchy_xy(kind, mp), mp.y), Rational(5));
            auto show = [](const QuadraticSurd& s) { return s.rational.to_string() + " + " + s.radical.to_string() + " sqrt5"; };
            return all_of({holds(got == expect, show(got), show(expect)), holds(swapped == expect, show(swapped), show(expect))});
        };
    };
    reg.add("G21.sqrt5-first", "c^(3)_{4,1,-3,(1,1,1/2),-3/2}(sqrt 5) and its x<->y swap", {}, [](const GridDefaults&) {
        return ParameterGrid::unit();
    }, sqrt5(CauchyKind::first));
    reg.add("G21.sqrt5-second", "c^^(3)_{4,1,-3,(1,1,1/2),-3/2}(sqrt 5) and its x<->y swap", {}, [](const GridDefaults&) {
        return ParameterGrid::unit();
    }, sqrt5(CauchyKind::second));
    reg.add("G21.stirling-pair", "[.]_(y,q) and {.}_(y,q) are mutually inverse with sign (-1)^(n-l)", {"n", "m", "q", "y"},
            [](const GridDefaults& d) {
                return ParameterGrid()
                    .axis("n", 0, d.max_n_double)
                    .axis("m", 0, d.max_n_double)
                    .axis("q", d.q_values)
                    .axis("y", d.x_values)
                    .where("m<=n", [](const Point& p) { return le(p, "m", "n"); });
            },
            [](const Point& p) {
                const int n = p.i("n"), m = p.i("m");
                const Rational &q = p.r("q"), &y = p.r("y");
                Rational a, b;
                for (int l = m; l <= n; ++l) {
                    a += sgn(n - l) * S1(n, l, y, q) * S2(l, m, y, q);
                    b += S2(n, l, y, q) * sgn(l - m) * S1(l, m, y, q);
                }
                return all_of({same(a, delta(n, m)), same(b, delta(n, m)), same(S2(n, m, y, q), S2_explicit(n, m, y, q))});
            });
    reg.add("G21.stirling-pair-generating", "x^n = sum {n m}_(y,q) prod_{j<m} (x - y - jq)", {"n", "q", "y"},
            [](const GridDefaults& d) {
                return ParameterGrid().axis("n", 0, d.max_n_double).axis("q", d.q_values).axis("y", d.x_values);
            },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational &q = p.r("q"), &y = p.r("y");
                Poly rhs, falling(Rational(1));
                for (int m = 0; m <= n; ++m) {
                    rhs += falling * S2(n, m, y, q);
                    falling = falling * (X() - K(y + Rational(m) * q));
                }
                return same(Poly::monomial(Rational(1), n), rhs);
            });
    reg.add("G21.mp-bernoulli", "B_{n,a,q,L,y}(x) = (-1)^n sum m! {n m}_(y,q) CC_{m+a-1}(x;L)", {"n", "a", "q", "y", "L"},
            [](const GridDefaults& d) { return multi_grid(d, 0, d.max_n_triple); },
            [](const Point& p) {
                const int n = p.i("n"), a = p.i("a");
                const Rational &q = p.r("q"), &y = p.r("y");
                Poly rhs;
                for (int m = 0; m <= n; ++m)
                    rhs += c_aux_poly_L(m + a - 1, p.l()) * (factorial(m) * S2_explicit(n, m, y, q));
                return same(multiparam_poly_bernoulli(param(p, n)), rhs * sgn(n));
            });

    struct Rel {
        const char* id;
        const char* ref;
        int variant;
    };
    static constexpr Rel rels[] = {
        {"G21.mp-relation-first", "B = (-1)^(n+a-1) sum sum (-1)^m m! {n m}_(y,q) {m l}_(y,q) c_l", 0},
        {"G21.mp-relation-second", "B = (-1)^(n+a-1) sum sum m! {n m}_(y,q) {m l}_(-y,q) c^_l", 1},
        {"G21.mp-relation-third", "c = (-1)^(n+a-1) sum sum (-1)^m/m! [n m]_(y,q) [m l]_(y,q) B_l", 2},
        {"G21.mp-relation-fourth", "c^ = (-1)^(n+a-1) sum sum 1/m! [n m]_(-y,q) [m l]_(y,q) B_l", 3},
    };
    for (const auto& r : rels) {
        reg.add(r.id, r.ref, {"n", "a", "q", "y", "L"}, [](const GridDefaults& d) { return small_y(d, d.max_n_triple); },
                [r](const Point& p) {
                    const int n = p.i("n"), a = p.i("a");
                    const Rational &q = p.r("q"), &y = p.r("y");
                    std::vector<Poly> seq;
                    for (int l = 0; l <= n; ++l) {
                        const MultiParam mp = param(p, l);
                        seq.push_back(r.variant == 0   ? multiparam_cauchy(CauchyKind::first, mp)
                                      : r.variant == 1 ? multiparam_cauchy(CauchyKind::second, mp)
                                                       : multiparam_poly_bernoulli(mp));
                    }
                    Poly rhs;
                    for (int m = 0; m <= n; ++m) {
                        Poly inner;
                        for (int l = 0; l <= m; ++l) {
                            switch (r.variant) {
                            case 0: inner += seq[l] * S2(m, l, y, q); break;
                            case 1: inner += seq[l] * S2(m, l, -y, q); break;
                            default: inner += seq[l] * S1(m, l, y, q); break;
                            }
                        }
                        switch (r.variant) {
                        case 0: rhs += inner * (sgn(m) * factorial(m) * S2(n, m, y, q)); break;
                        case 1: rhs += inner * (factorial(m) * S2(n, m, y, q)); break;
                        case 2: rhs += inner * (sgn(m) * S1(n, m, y, q) / factorial(m)); break;
                        default: rhs += inner * (S1(n, m, -y, q) / factorial(m)); break;
                        }
                    }
                    const MultiParam mp = param(p, n);
                    const Poly lhs = r.variant < 2    ? multiparam_poly_bernoulli(mp)
                                     : r.variant == 2 ? multiparam_cauchy(CauchyKind::first, mp)
                                                      : multiparam_cauchy(CauchyKind::second, mp);
                    return same(lhs, rhs * sgn(n + a - 1));
                });
    }
    reg.add("G21.reduce-inform", "a = q = l_i = 1, y = 0 turns the multiparameter Bernoulli family into PB'^(k)_n", {"n", "k"},
            [](const GridDefaults& d) { return ParameterGrid().axis("n", 0, d.max_n_double).axis("k", 1, d.max_k); },
            [](const Point& p) {
                const int n = p.i("n"), k = p.i("k");
                const MultiParam mp{n, k, 1, Rational(1), ones(k), Rational(0)};
                return same(multiparam_poly_bernoulli(mp), poly_bernoulli_kl(n, k));
            });
}

Poly H(int m) { return harmonic_poly(m); }

void register_g22(Registry& reg)
{
    reg.add("G22.hcauchy1", "sum (-1)^m H_m(x+1) c_{n-m}(y)/(n-m)! = C(x-y, n)", {"n", "y"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_double).axis("y", d.x_values); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational& y = p.r("y");
                Poly lhs;
                for (int m = 0; m <= n; ++m)
                    lhs += shift(H(m), Rational(1)) * (sgn(m) * c1(n - m)(y) / factorial(n - m));
                return same(lhs, binom_poly(-y, n));
            });
    reg.add("G22.hcauchy2", "sum (-1)^m H_m(x+2) c^_{n-m}(y)/(n-m)! = C(x+y, n)", {"n", "y"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_double).axis("y", d.x_values); },
            [](const Point& p) {
                const int n = p.i("n");
                const Rational& y = p.r("y");
                Poly lhs;
                for (int m = 0; m <= n; ++m)
                    lhs += shift(H(m), Rational(2)) * (sgn(m) * c2(n - m)(y) / factorial(n - m));
                return same(lhs, binom_poly(y, n));
            });
    reg.add("G22.chat-harmonic", "c^_n(x)/n! = C(x,n) - sum_{m<n} (-1)^m c_{n-m}/(n-m-1)! H_m(x+1)", {"n"},
            [](const GridDefaults& d) { return grid_n(1, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Poly rhs = binom_poly(Rational(0), n);
                for (int m = 0; m < n; ++m)
                    rhs -= shift(H(m), Rational(1)) * (sgn(m) * cn1(n - m) / factorial(n - m - 1));
                return same(c2(n) * factorial(n).inverse(), rhs);
            });
    // Argument of c_m on the left; the printed c_m(-x) only survives n = 0.
    auto compare = [](bool printed) {
        return [printed](const Point& p) {
            const int n = p.i("n");
            Poly lhs, rhs;
            for (int m = 0; m <= n; ++m) {
                const Poly c = printed ? reflect(c1(m)) : sub(c1(m), -1, Rational(2));
                lhs += c * (sgn(m) / (factorial(m) * Rational(n - m + 1) * Rational(n - m + 2)));
                rhs += H(m) * (sgn(n - m) * cn1(n + 1 - m) / factorial(n - m));
            }
            return same(lhs, rhs);
        };
    };
    reg.add("G22.compare", "sum (-1)^m c_m(2-x)/(m!(n-m+1)(n-m+2)) = sum (-1)^(n-m) c_{n+1-m}/(n-m)! H_m(x)", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); }, compare(false));
    reg.probe("G22.compare-argument", "which argument of c_m balances the harmonic comparison", {"n"},
              [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
              {{"minus-x", compare(true)}, {"two-minus-x", compare(false)}});
    reg.add("G22.compare-x0", "sum (-1)^m c_m(2)/(m!(n-m+1)(n-m+2)) = sum (-1)^(n-m) c_{n+1-m}/(n-m)! H_{m+1}", {"n"},
            [](const GridDefaults& d) { return grid_n(0, d.max_n_single); },
            [](const Point& p) {
                const int n = p.i("n");
                Rational lhs, rhs;
                for (int m = 0; m <= n; ++m) {
                    lhs += sgn(m) * c1(m)(Rational(2)) / (factorial(m) * Rational(n - m + 1) * Rational(n - m + 2));
                    rhs += sgn(n - m) * cn1(n + 1 - m) / factorial(n - m) * harmonic_number(m + 1);
                }
                return same(lhs, rhs);
            });
    reg.add("G22.at-zero", "H_m(0) = H_{m+1}", {"m"},
            [](const GridDefaults& d) { return ParameterGrid().axis("m", 0, d.max_n_single); },
            [](const Point& p) {
                const int m = p.i("m");
                return same(H(m)(Rational(0)), harmonic_number(m + 1));
            });
    reg.add("G22.explicit", "H_m(x) = sum (-1)^i C(x-1, i)/(m-i+1)", {"m"},
            [](const GridDefaults& d) { return ParameterGrid().axis("m", 0, d.max_n_single); },
            [](const Point& p) {
                const int m = p.i("m");
                Poly rhs;
                for (int i = 0; i <= m; ++i)
                    rhs += binom_poly(Rational(-1), i) * (sgn(i) * inv(m - i + 1));
                return same(H(m), rhs);
            });
    reg.add("G22.generating-function", "H_m(x) is the t^m coefficient of -log(1-t)/(t (1-t)^(1-x))", {"m"},
            [](const GridDefaults& d) { return ParameterGrid().axis("m", 0, d.max_n_single); },
            [](const Point& p) {
                const int m = p.i("m");
                return same(H(m), gf_harmonic_poly(m)[m]);
            });
}

} // namespace

void register_multi(Registry& reg)
{
    register_g21(reg);
    register_g22(reg);
}

} // namespace polycauchy::identity
