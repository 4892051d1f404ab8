#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "polycauchy/cauchy.hpp"
#include "polycauchy/format.hpp"

using namespace polycauchy;

namespace {
std::vector<ExportRecord> sample()
{
    std::vector<ExportRecord> out;
    for (int n = 0; n <= 3; ++n)
        out.push_back({"cauchy", {{"n", std::to_string(n)}, {"kind", "first"}}, cauchy_poly(CauchyKind::first, n)});
    return out;
}
}

TEST_CASE("json coefficients are strings")
{
    const auto j = to_json(Poly{Rational(1, 2), Rational(-1)});
    CHECK(j.dump() == R"(["1/2","-1"])");
    CHECK(poly_from_json(j) == Poly{Rational(1, 2), Rational(-1)});
    CHECK_THROWS(poly_from_json(nlohmann::json::parse("[1.5]")));
}

TEST_CASE("json export round trips")
{
    const auto records = sample();
    const auto back = import_json(nlohmann::json::parse(export_json(records).dump()));
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].family == records[i].family);
        CHECK(back[i].params == records[i].params);
        CHECK(back[i].poly == records[i].poly);
    }
}

TEST_CASE("tsv export")
{
    const std::string tsv = export_tsv(sample());
    CHECK(tsv == export_tsv(sample()));
    CHECK(tsv.rfind("family\tparams\tcoefficients\n", 0) == 0);
    CHECK(tsv.find("cauchy\tkind=first,n=2\t-1/6 0 1\n") != std::string::npos);
    CHECK(export_tsv({}) == "family\tparams\tcoefficients\n");
}

TEST_CASE("file errors name the path")
{
    const std::filesystem::path bad = "/nonexistent-dir/out.json";
    try {
        write_file(bad, "x");
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
    }
    CHECK_THROWS_AS(read_file("/nonexistent-dir/in.json"), std::runtime_error);
}
