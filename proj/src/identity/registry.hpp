// Shared plumbing for the catalog translation units.
#ifndef POLYCAUCHY_IDENTITY_REGISTRY_HPP
#define POLYCAUCHY_IDENTITY_REGISTRY_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "polycauchy/bernoulli.hpp"
#include "polycauchy/cauchy.hpp"
#include "polycauchy/harmonic.hpp"
#include "polycauchy/identity.hpp"
#include "polycauchy/stirling.hpp"

namespace polycauchy::identity {

struct Registry {
    std::vector<IdentityCase> cases;

    void add(std::string id, std::string ref, std::vector<std::string> arity, GridBuilder grid, Check check)
    {
        std::string group = id.substr(0, 3);
        cases.push_back({std::move(id), std::move(group), std::move(ref), std::move(arity), std::move(grid),
                         std::move(check), {}});
    }

    void probe(std::string id, std::string ref, std::vector<std::string> arity, GridBuilder grid,
               std::vector<ProbeVariant> variants)
    {
        std::string group = id.substr(0, 3);
        cases.push_back({std::move(id), std::move(group), std::move(ref), std::move(arity), std::move(grid), {},
                         std::move(variants)});
    }
};

void register_basic(Registry& reg);      // G01-G08
void register_derivative(Registry& reg); // G09-G10
void register_bernoulli(Registry& reg);  // G11-G13
void register_poly(Registry& reg);       // G14-G20
void register_multi(Registry& reg);      // G21-G22

namespace cat {

inline Poly c1(int n, int k = 1) { return cauchy_poly(CauchyKind::first, n, k); }
inline Poly c2(int n, int k = 1) { return cauchy_poly(CauchyKind::second, n, k); }
inline Rational cn1(int n, int k = 1) { return cauchy_number(CauchyKind::first, n, k); }
inline Rational cn2(int n, int k = 1) { return cauchy_number(CauchyKind::second, n, k); }

inline Poly X() { return Poly::x(); }
inline Poly K(const Rational& r) { return Poly(r); }

/// p(s*x + a).
inline Poly sub(const Poly& p, int s, const Rational& a) { return affine_compose(p, s, a); }

inline Rational sgn(long e) { return sign_power(e); }
inline Rational delta(int a, int b) { return Rational(a == b ? 1 : 0); }
inline Rational inv(long v) { return Rational(1, v); }
inline Rational inv_pow(long v, int k) { return Rational(1, v).pow(k); }

inline const Poly& G1(int n, int m) { return gsn1(n, m); }
inline const Poly& G2(int n, int m) { return gsn2(n, m); }

/// [n, m]_x evaluated at -x, written out as an alternating coefficient sum.
inline Poly G1_neg(int n, int m) { return reflect(gsn1(n, m)); }

inline ParameterGrid grid_n(int lo, int hi) { return ParameterGrid().axis("n", lo, hi); }

inline bool le(const Point& p, const char* a, const char* b) { return p.r(a) <= p.r(b); }

} // namespace cat

} // namespace polycauchy::identity

#endif
