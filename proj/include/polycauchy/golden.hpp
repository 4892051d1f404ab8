#ifndef POLYCAUCHY_GOLDEN_HPP
#define POLYCAUCHY_GOLDEN_HPP

#include <array>
#include <vector>

#include "polycauchy/cauchy.hpp"
#include "polycauchy/polynomial.hpp"
#include "polycauchy/rational.hpp"

namespace polycauchy::golden {

// Published Cauchy polynomials for n = 0..6, coefficients by ascending power.
inline std::vector<Poly> cauchy_table(CauchyKind kind)
{
    using R = Rational;
    if (kind == CauchyKind::first)
        return {
            Poly{R(1)},
            Poly{R(1, 2), R(-1)},
            Poly{R(-1, 6), R(0), R(1)},
            Poly{R(1, 4), R(0), R(-3, 2), R(-1)},
            Poly{R(-19, 30), R(0), R(4), R(4), R(1)},
            Poly{R(9, 4), R(0), R(-15), R(-55, 3), R(-15, 2), R(-1)},
            Poly{R(-863, 84), R(0), R(72), R(100), R(105, 2), R(12), R(1)},
        };
    return {
        Poly{R(1)},
        Poly{R(-1, 2), R(1)},
        Poly{R(5, 6), R(-2), R(1)},
        Poly{R(-9, 4), R(6), R(-9, 2), R(1)},
        Poly{R(251, 30), R(-24), R(22), R(-8), R(1)},
        Poly{R(-475, 12), R(120), R(-125), R(175, 3), R(-25, 2), R(1)},
        Poly{R(19087, 84), R(-720), R(822), R(-450), R(255, 2), R(-18), R(1)},
    };
}

// Published c_6^(k)(x) and its second-kind counterpart: entry [i][j] multiplies
// x^i / (j+1)^k.
inline Poly poly_cauchy_6(CauchyKind kind, int k)
{
    static constexpr std::array<std::array<long, 7>, 7> first{{
        {0, -120, 274, -225, 85, -15, 1},
        {120, -548, 675, -340, 75, -6, 0},
        {274, -675, 510, -150, 15, 0, 0},
        {225, -340, 150, -20, 0, 0, 0},
        {85, -75, 15, 0, 0, 0, 0},
        {15, -6, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0},
    }};
    static constexpr std::array<std::array<long, 7>, 7> second{{
        {0, 120, 274, 225, 85, 15, 1},
        {-120, -548, -675, -340, -75, -6, 0},
        {274, 675, 510, 150, 15, 0, 0},
        {-225, -340, -150, -20, 0, 0, 0},
        {85, 75, 15, 0, 0, 0, 0},
        {-15, -6, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0},
    }};
    const auto& t = kind == CauchyKind::first ? first : second;
    std::vector<Rational> c;
    for (int i = 0; i <= 6; ++i) {
        Rational acc;
        for (int j = 0; j <= 6; ++j)
            acc += Rational(t[i][j]) * Rational(1, j + 1).pow(k);
        c.push_back(acc);
    }
    return Poly(std::move(c));
}

// Published multiparameter point: n=4, k=3, a=1, q=-3, L=(1,1,1/2), y=-3/2,
// evaluated at x = sqrt(5) as A + B sqrt(5).
inline MultiParam sqrt5_point()
{
    return MultiParam{4, 3, 1, Rational(-3), {Rational(1), Rational(1), Rational(1, 2)}, Rational(-3, 2)};
}

inline QuadraticSurd sqrt5_value(CauchyKind kind)
{
    if (kind == CauchyKind::first)
        return {Rational(114177911, 144000), Rational(-284203, 768)};
    return {Rational(14046697, 288000), Rational(10805, 768)};
}

} // namespace polycauchy::golden

#endif
