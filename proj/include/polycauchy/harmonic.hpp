#ifndef POLYCAUCHY_HARMONIC_HPP
#define POLYCAUCHY_HARMONIC_HPP

#include "polycauchy/polynomial.hpp"
#include "polycauchy/rational.hpp"

namespace polycauchy {

/// H_n^(x) = sum_{t=1}^n C(x+n-t-1, n-t)/t, degree n-1; zero polynomial for n = 0.
Poly hyperharmonic_poly(int n);

/// 1 + 1/2 + ... + 1/n, with H_0 = 0.
Rational harmonic_number(int n);

/// Harmonic polynomial H_m(x) from -log(1-t)/(t (1-t)^(1-x)).
Poly harmonic_poly(int m);

} // namespace polycauchy

#endif
