#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "polycauchy/identity.hpp"

using namespace polycauchy;
using namespace polycauchy::identity;

TEST_CASE("catalog ids are unique and grouped")
{
    const auto& cat = catalog();
    CHECK(cat.size() >= 60);
    std::set<std::string> ids;
    for (const auto& c : cat) {
        CHECK(ids.insert(c.id).second);
        CHECK(c.id.rfind(c.group + ".", 0) == 0);
    }
    CHECK(find_case("G04.int1") != nullptr);
    CHECK(find_case("no.such.case") == nullptr);
}

TEST_CASE("default grid of a single-index case")
{
    const Report r = verify("G04.int1", find_case("G04.int1")->default_grid(GridDefaults{}));
    CHECK(r.passed());
    CHECK(r.points == 11);
    CHECK(r.status() == "pass");
}

TEST_CASE("empty grid passes vacuously")
{
    const Report r = verify("G04.int1", ParameterGrid{}.axis("n", 1, 0));
    CHECK(r.passed());
    CHECK(r.points == 0);
}

TEST_CASE("grids")
{
    ParameterGrid g;
    g.axis("n", 0, 3).axis("x", {Rational(0), Rational(1, 2)}).where("x<n", [](const Point& p) {
        return p.r("x") < Rational(p.i("n"));
    });
    CHECK(g.points().size() == 6);
    CHECK(ParameterGrid::unit().points().size() == 1);
    CHECK_THROWS(ParameterGrid{}.axis("n", 0, 1).axis("n", 0, 1));
}

TEST_CASE("failures carry the offending point")
{
    IdentityCase c;
    c.id = "T.broken";
    c.group = "T";
    c.arity = {"n"};
    c.check = [](const Point& p) { return same(Rational(p.i("n")), Rational(2)); };
    const Report r = verify(c, ParameterGrid{}.axis("n", 0, 3));
    CHECK_FALSE(r.passed());
    CHECK(r.failure_count == 3);
    REQUIRE_FALSE(r.failures.empty());
    CHECK(r.failures.front().lhs == "0");
    CHECK(r.failures.front().rhs == "2");
    CHECK(r.to_json(false).at("status") == "fail");
}

TEST_CASE("exceptions inside a check count as failures")
{
    IdentityCase c;
    c.id = "T.throws";
    c.group = "T";
    c.check = [](const Point&) -> Outcome { throw std::domain_error("boom"); };
    const Report r = verify(c, ParameterGrid::unit());
    CHECK(r.failure_count == 1);
}

TEST_CASE("probes name the surviving variant")
{
    const Report r = verify("G06.k-recurrence-sign", find_case("G06.k-recurrence-sign")->default_grid(GridDefaults{}));
    CHECK(r.passed());
    CHECK(r.finding.find("'plus'") != std::string::npos);
}

TEST_CASE("config overrides")
{
    GridDefaults d;
    d.apply_config("# smaller\nmax_n_single = 4\nx_values = 0, 1/3\n");
    CHECK(d.max_n_single == 4);
    CHECK(d.x_values.size() == 2);
    CHECK_THROWS_AS(d.apply_config("no_such_key=1"), std::invalid_argument);
    CHECK_THROWS_AS(d.apply_config("max_n_single=x"), std::invalid_argument);
    d.cap_n(2);
    CHECK(d.max_n_single == 2);
    CHECK(d.max_n_double == 2);
}

TEST_CASE("reports are deterministic across job counts")
{
    GridDefaults d;
    d.cap_n(4);
    const std::vector<std::string> ids{"G04.int1", "G06.k-recurrence-sign", "G12.monomial-first", "G14.gsn-first-k"};
    const SuiteResult a = run_all(d, 1, ids);
    const SuiteResult b = run_all(d, 4, ids);
    CHECK(a.failed_cases() == 0);
    CHECK(a.to_json(false).dump() == b.to_json(false).dump());
    REQUIRE(a.reports.size() == ids.size());
    CHECK(a.reports[2].id == "G12.monomial-first");
    CHECK_THROWS_AS(run_all(d, 1, {"nope"}), std::invalid_argument);
}
