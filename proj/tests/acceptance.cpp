// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "polycauchy/bernoulli.hpp"
#include "polycauchy/cauchy.hpp"
#include "polycauchy/format.hpp"
#include "polycauchy/golden.hpp"
#include "polycauchy/identity.hpp"
#include "polycauchy/series.hpp"
#include "polycauchy/stirling.hpp"

using namespace polycauchy;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail << what;
        }
    }
};

int failures = 0;

void report(int id, const std::string& title, Verdict& v)
{
    if (!v.ok)
        ++failures;
    std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
    const std::string d = v.detail.str();
    if (!d.empty())
        std::cout << " (" << d << ")";
    std::cout << '\n';
}

void golden_tables()
{
    Verdict v;
    const auto t0 = Clock::now();
    const Construction all[] = {Construction::gsn, Construction::integral, Construction::series,
                                Construction::binomial_conv, Construction::stirling_expansion};
    for (auto kind : {CauchyKind::first, CauchyKind::second}) {
        const auto table = golden::cauchy_table(kind);
        for (auto c : all)
            for (int n = 0; n <= 6; ++n) {
                const Poly got = cauchy_poly(kind, n, 1, c);
                v.require(got == table[n], std::string(to_string(kind)) + "/" + std::string(to_string(c)) +
                                               " n=" + std::to_string(n) + ": " + to_string(got));
            }
    }
    const double s = seconds_since(t0);
    v.require(s < 1.0, "took " + std::to_string(s) + " s");
    v.detail << (v.ok ? "" : "; ") << s << " s";
    report(1, "published c_n, c^_n for n <= 6 under all constructions", v);
}

void poly_cauchy_six()
{
    Verdict v;
    const auto t0 = Clock::now();
    for (auto kind : {CauchyKind::first, CauchyKind::second})
        for (int k = 1; k <= 4; ++k)
            for (auto c : {Construction::gsn, Construction::integral, Construction::binomial_conv}) {
                const Poly got = cauchy_poly(kind, 6, k, c);
                v.require(got == golden::poly_cauchy_6(kind, k),
                          std::string(to_string(kind)) + " k=" + std::to_string(k) + ": " + to_string(got));
            }
    const double s = seconds_since(t0);
    v.require(s < 1.0, "took " + std::to_string(s) + " s");
    report(2, "c_6^(k), c^_6^(k) for k = 1..4", v);
}

void sqrt5()
{
    Verdict v;
    const MultiParam mp = golden::sqrt5_point();
    const Rational five(5);
    for (auto kind : {CauchyKind::first, CauchyKind::second}) {
        const std::string name(to_string(kind));
        const QuadraticSurd expect = golden::sqrt5_value(kind);
        const QuadraticSurd got = evaluate_at_sqrt(multiparam_cauchy(kind, mp), five);
        v.require(got == expect, name + ": " + got.rational.to_string() + " + " + got.radical.to_string() + " sqrt5");
        const QuadraticSurd integral = evaluate_at_sqrt(multiparam_cauchy_integral(kind, mp), five);
        v.require(integral == expect, name + ": integral construction differs");

        // a = 1: the bivariate polynomial is symmetric, so x = -3/2, y = sqrt5 gives the same value.
        const BivariatePoly xy = multiparam_cauchy_xy(kind, mp);
        v.require(transpose(xy) == xy, name + ": bivariate form not symmetric");
        v.require(evaluate_at_sqrt(eval_outer(xy, mp.y), five) == expect, name + ": swapped evaluation differs");
    }
    report(3, "multiparameter values at sqrt5 and the a=1 x<->y symmetry", v);
}

void suite()
{
    Verdict v;
    const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    const auto t0 = Clock::now();
    const identity::SuiteResult r = identity::run_all(identity::GridDefaults{}, jobs);
    const double s = seconds_since(t0);
    std::size_t points = 0;
    for (const auto& rep : r.reports) {
        points += rep.points;
        v.require(rep.passed(), rep.id + " failed at " + std::to_string(rep.failure_count) + " points");
    }
    v.require(s < 300.0, "took " + std::to_string(s) + " s");
    if (v.ok)
        v.detail << r.reports.size() << " cases, " << points << " points, " << s << " s";
    report(4, "identity suite on default grids", v);
}

void oracles()
{
    Verdict v;
    const int order = 12;
    const auto c1 = egf_coefficients(gf_cauchy1(order));
    const auto c2 = egf_coefficients(gf_cauchy2(order));
    for (int n = 0; n <= order; ++n) {
        v.require(c1[n] == cauchy_poly(CauchyKind::first, n, 1, Construction::gsn), "first kind n=" + std::to_string(n));
        v.require(c2[n] == cauchy_poly(CauchyKind::second, n, 1, Construction::gsn), "second kind n=" + std::to_string(n));
    }
    const auto b = egf_coefficients(gf_gen_bernoulli(1, order));
    for (int n = 0; n <= order; ++n) {
        const Rational bn = b[n](Rational(0));
        v.require(bn == bernoulli_number(n), "B_" + std::to_string(n) + " = " + bn.to_string());
        if (n >= 3 && n % 2 == 1)
            v.require(bn == Rational(0), "B_" + std::to_string(n) + " nonzero");
    }
    v.require(b[4](Rational(0)) == Rational(-1, 30), "B_4");
    v.require(b[1](Rational(0)) == Rational(-1, 2), "B_1");
    report(5, "generating-function oracles", v);
}

void central_factorial_convention()
{
    Verdict v;
    // c_{2n}(x) = n sum_{m=1}^n u(n,m)/m ((x+n-1)^(2m) - B_{2m}) at n = 2
    const int n = 2;
    const Poly base = shift(Poly::x(), Rational(n - 1));
    Poly c4;
    for (int m = 1; m <= n; ++m)
        c4 += (pow(base, 2 * m) - Poly{bernoulli_number(2 * m)}) * (central_u(n, m) * Rational(n, m));
    const Poly expect{Rational(-19, 30), Rational(0), Rational(4), Rational(4), Rational(1)};
    v.require(c4 == expect, "got " + to_string(c4));
    v.require(c4 == cauchy_poly(CauchyKind::first, 4), "differs from the gsn construction");
    report(6, "central factorial convention reproduces c_4(x)", v);
}

void sign_probe()
{
    Verdict v;
    const auto* c = identity::find_case("G06.k-recurrence-sign");
    v.require(c && c->is_probe(), "probe not registered");
    if (c) {
        const identity::Report r = identity::verify(*c, c->default_grid(identity::GridDefaults{}));
        int survivors = 0;
        for (const auto& var : r.variants)
            if (var.points > 0 && var.failures == 0)
                ++survivors;
        v.require(survivors == 1, std::to_string(survivors) + " variants hold");
        v.require(r.passed(), "probe reported failures");
        v.detail << r.finding;
    }
    report(7, "recurrence sign probe", v);
}

Rational random_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
    return Rational(num(rng), den(rng));
}

void inversion()
{
    Verdict v;
    std::mt19937 rng(20240917);
    std::uniform_int_distribution<int> len(1, 8);
    for (int trial = 0; trial < 100 && v.ok; ++trial) {
        const int size = len(rng);
        std::vector<Rational> g(size);
        for (auto& e : g)
            e = random_rational(rng);
        const Rational x0 = random_rational(rng);
        const std::string where = "trial " + std::to_string(trial);

        // symbolic in x: f_n = sum (-1)^(n-m) [n m]_x g_m, then g_n = sum {n m}_x f_m, and the reverse order
        std::vector<Poly> f(size), h(size);
        for (int n = 0; n < size; ++n)
            for (int m = 0; m <= n; ++m) {
                f[n] += gsn1(n, m) * (sign_power(n - m) * g[m]);
                h[n] += gsn2(n, m) * g[m];
            }
        for (int n = 0; n < size; ++n) {
            Poly back, back2;
            for (int m = 0; m <= n; ++m) {
                back += gsn2(n, m) * f[m];
                back2 += gsn1(n, m) * h[m] * sign_power(n - m);
            }
            v.require(back == Poly{g[n]} && back2 == Poly{g[n]}, where + ": symbolic, n=" + std::to_string(n));
        }

        // the same pair evaluated at a random rational x, plus the orthogonality it rests on
        for (int n = 0; n < size; ++n) {
            Rational back;
            for (int m = 0; m <= n; ++m) {
                Rational fm;
                for (int j = 0; j <= m; ++j)
                    fm += gsn1_at(m, j, x0) * sign_power(m - j) * g[j];
                back += gsn2_at(n, m, x0) * fm;
            }
            v.require(back == g[n], where + ": at x=" + x0.to_string() + ", n=" + std::to_string(n));
            for (int m = 0; m <= n; ++m) {
                Rational delta;
                for (int l = m; l <= n; ++l)
                    delta += sign_power(n - l) * gsn1_at(n, l, x0) * gsn2_at(l, m, x0);
                v.require(delta == Rational(n == m ? 1 : 0), where + ": orthogonality (" + std::to_string(n) + "," +
                                                                 std::to_string(m) + ")");
            }
        }
    }
    report(8, "inversion on 100 random rational sequences of length <= 8", v);
}

} // namespace

int main()
{
    golden_tables();
    poly_cauchy_six();
    sqrt5();
    suite();
    oracles();
    central_factorial_convention();
    sign_probe();
    inversion();
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
