#ifndef POLYCAUCHY_BERNOULLI_HPP
#define POLYCAUCHY_BERNOULLI_HPP

#include "polycauchy/cauchy.hpp"
#include "polycauchy/polynomial.hpp"
#include "polycauchy/rational.hpp"

namespace polycauchy {

/// B_n with B_1 = -1/2.
Rational bernoulli_number(int n);

/// B_n(x).
Poly bernoulli_poly(int n);

/// Higher-order Bernoulli polynomial B_n^(alpha)(x), alpha >= 0, read off the
/// generating function (t/(e^t-1))^alpha e^(xt). Cached per alpha.
Poly gen_bernoulli_poly(int n, int alpha);

/// S_n(x) with S_n(m) = 1^n + ... + m^n for positive integers m.
Poly power_sum_poly(int n);

/// E_n(x) = (2/(n+1)) (B_{n+1}(x) - 2^(n+1) B_{n+1}(x/2)).
Poly euler_poly(int n);

/// Poly-Bernoulli polynomial over generalized Stirling numbers of the second
/// kind: (-1)^n sum_m (-1)^m m!/(m+1)^k {n m}_x. Domain error for k < 1.
Poly poly_bernoulli_gsn(int n, int k);

/// Komatsu-Luca poly-Bernoulli polynomial:
/// (-1)^n sum_m (-1)^m m! {n m} sum_i C(m, i) (-x)^i/(m-i+1)^k. Domain error for k < 1.
Poly poly_bernoulli_kl(int n, int k);

/// Multiparameter poly-Bernoulli polynomial:
/// (-1)^n sum_m m! {n m}_(y,q) C_{m+a-1}^(k)(x; L). Domain error for q = 0 or invalid p.
Poly multiparam_poly_bernoulli(const MultiParam& p);

} // namespace polycauchy

#endif
