#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "polycauchy/stirling.hpp"

using namespace polycauchy;

TEST_CASE("small values")
{
    CHECK(stirling1(4, 2) == Rational(11));
    CHECK(stirling2(5, 3) == Rational(25));
    CHECK(lah(4, 2) == Rational(36));
    CHECK(stirling1(0, 0) == Rational(1));
    CHECK(stirling2(3, 0) == Rational(0));
    CHECK(stirling2(2, 5) == Rational(0));
    CHECK(central_u(2, 1) == Rational(-1));
    CHECK(central_u(3, 1) == Rational(4));
    CHECK(central_u(3, 3) == Rational(1));
    CHECK_THROWS_AS(stirling1(-1, 0), std::domain_error);
}

TEST_CASE("row sums")
{
    Rational bell, perms;
    for (int m = 0; m <= 6; ++m) {
        bell += stirling2(6, m);
        perms += stirling1(6, m);
    }
    CHECK(bell == Rational(203));
    CHECK(perms == factorial(6));
}

TEST_CASE("orthogonality")
{
    for (int n = 0; n <= 9; ++n)
        for (int m = 0; m <= n; ++m) {
            Rational s;
            for (int j = m; j <= n; ++j)
                s += sign_power(n - j) * stirling1(n, j) * stirling2(j, m);
            CHECK(s == Rational(n == m ? 1 : 0));
        }
}

TEST_CASE("generalized Stirling polynomials at zero")
{
    for (int n = 0; n <= 7; ++n)
        for (int m = 0; m <= n; ++m) {
            CHECK(gsn1_at(n, m, Rational(0)) == stirling1(n, m));
            CHECK(gsn2_at(n, m, Rational(0)) == stirling2(n, m));
        }
    CHECK(gsn1(3, 1)(Rational(2)) == gsn1_at(3, 1, Rational(2)));
    CHECK_THROWS(gsn1(2, 3));
}

TEST_CASE("Whitney numbers with m = 1, r = 0 are Stirling numbers")
{
    for (int n = 0; n <= 6; ++n)
        for (int l = 0; l <= n; ++l) {
            CHECK(whitney(StirlingKind::second, Rational(1), Rational(0), n, l) == stirling2(n, l));
            CHECK(whitney(StirlingKind::first, Rational(1), Rational(0), n, l) == stirling1(n, l));
        }
}

TEST_CASE("triangle cache round trip")
{
    const auto dir = std::filesystem::temp_directory_path() / "polycauchy_test_cache";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    TriangleCache a(TriangleKind::stirling2);
    CHECK(a.at(8, 3) == stirling2(8, 3));
    a.save(dir / "s2.tsv");
    TriangleCache b(TriangleKind::stirling2);
    b.load(dir / "s2.tsv");
    CHECK(b.rows() == a.rows());
    CHECK(b.at(8, 3) == a.at(8, 3));

    std::ofstream(dir / "bad.tsv") << "not a cache\n";
    CHECK_THROWS_AS(b.load(dir / "bad.tsv"), std::runtime_error);
    std::filesystem::remove_all(dir);
}
