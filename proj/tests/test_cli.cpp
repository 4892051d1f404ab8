#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli_app.hpp"
#include "polycauchy/format.hpp"

using namespace polycauchy;

namespace {
struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }
}

TEST_CASE("table of Cauchy numbers")
{
    const auto r = run({"table", "cauchy-numbers", "--kind", "first", "--max-n", "4"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out == "n\tvalue\n0\t1\n1\t1/2\n2\t-1/6\n3\t1/4\n4\t-19/30\n");
}

TEST_CASE("table of a triangle")
{
    const auto r = run({"table", "stirling2", "--max-n", "2"});
    CHECK(r.out == "n\tm\tvalue\n0\t0\t1\n1\t0\t0\n1\t1\t1\n2\t0\t0\n2\t1\t1\n2\t2\t1\n");
}

TEST_CASE("bernoulli table takes --n")
{
    const auto r = run({"table", "bernoulli", "--n", "4"});
    CHECK(r.out == "n\tvalue\n0\t1\n1\t-1/2\n2\t1/6\n3\t0\n4\t-1/30\n");
}

TEST_CASE("eval")
{
    CHECK(run({"eval", "cauchy", "--kind", "second", "--n", "2", "--k", "1", "--x", "1"}).out == "-1/6\n");
    CHECK(run({"eval", "cauchy", "--n", "4", "--k", "2", "--x", "1/2"}).code == cli::exit_ok);
    CHECK(run({"eval", "bernoulli-poly", "2", "0"}).out == "1/6\n");
    CHECK(run({"eval", "cauchy", "--n", "2"}).out == "-1/6 + x^2\n");
    CHECK(run({"eval", "stirling1", "--n", "4", "--m", "2"}).out == "11\n");
}

TEST_CASE("numeric flags accept fractions and reject junk")
{
    CHECK(run({"eval", "cauchy", "--n", "4/2", "--x", "0"}).out == "-1/6\n");
    CHECK(run({"eval", "cauchy", "--n", "1/2"}).code == cli::exit_usage);
    CHECK(run({"eval", "cauchy", "--n", "abc"}).code == cli::exit_usage);
    CHECK(run({"eval", "cauchy", "--n", "-1"}).code == cli::exit_usage);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == cli::exit_usage);
    CHECK(run({"eval", "cauchy", "--bogus-flag"}).code == cli::exit_usage);
    CHECK(run({"table", "nope"}).code == cli::exit_usage);
    CHECK(run({"verify", "--id", "nope"}).code == cli::exit_usage);
    CHECK(run({"--help"}).code == cli::exit_ok);
}

TEST_CASE("series rows")
{
    const auto r = run({"series", "cauchy1", "--order", "2"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.find("2\t2\t-1/12 + 1/2*x^2\t-1/6 + x^2\n") != std::string::npos);
}

TEST_CASE("verify")
{
    const auto human = run({"verify", "--id", "G04.int1"});
    CHECK(human.code == cli::exit_ok);
    CHECK(human.out.find("0 failed") != std::string::npos);

    const auto a = run({"verify", "--id", "G04.int1", "--id", "G12.monomial-first", "--max-n", "3", "--json", "--no-timing"});
    const auto b = run({"verify", "--id", "G04.int1", "--id", "G12.monomial-first", "--max-n", "3", "--json", "--no-timing",
                        "--jobs", "2"});
    CHECK(a.code == cli::exit_ok);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j.dump().find("millis") == std::string::npos);
}

TEST_CASE("verify with a config file")
{
    const auto cfg = temp("polycauchy_cli_test.cfg");
    write_file(cfg, "max_n_single=2\n");
    const auto r = run({"verify", "--id", "G04.int1", "--config", cfg.string(), "--json"});
    CHECK(nlohmann::json::parse(r.out).dump().find("\"points\":3") != std::string::npos);
    write_file(cfg, "bogus=1\n");
    CHECK(run({"verify", "--config", cfg.string()}).code == cli::exit_usage);
    std::filesystem::remove(cfg);
}

TEST_CASE("export")
{
    const auto json = temp("polycauchy_cli_test.json");
    REQUIRE(run({"export", "--format", "json", "--out", json.string(), "--max-n", "6"}).code == cli::exit_ok);
    const auto records = import_json(nlohmann::json::parse(read_file(json)));
    REQUIRE(records.size() == 7);
    CHECK(records[4].poly(Rational(0)) == Rational(-19, 30));

    const auto tsv = temp("polycauchy_cli_test.tsv");
    REQUIRE(run({"export", "--format", "tsv", "--out", tsv.string(), "--max-n", "3"}).code == cli::exit_ok);
    const std::string first = read_file(tsv);
    run({"export", "--format", "tsv", "--out", tsv.string(), "--max-n", "3"});
    CHECK(read_file(tsv) == first);

    run({"export", "--format", "tsv", "--out", tsv.string(), "--min-n", "3", "--max-n", "2"});
    CHECK(read_file(tsv) == "family\tparams\tcoefficients\n");

    const auto bad = run({"export", "--out", "/nonexistent-dir/x.json"});
    CHECK(bad.code == cli::exit_usage);
    CHECK(bad.err.find("/nonexistent-dir/x.json") != std::string::npos);
    std::filesystem::remove(json);
    std::filesystem::remove(tsv);
}
