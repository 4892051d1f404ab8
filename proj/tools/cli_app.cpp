#include "cli_app.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "polycauchy/bernoulli.hpp"
#include "polycauchy/cauchy.hpp"
#include "polycauchy/format.hpp"
#include "polycauchy/harmonic.hpp"
#include "polycauchy/identity.hpp"
#include "polycauchy/series.hpp"
#include "polycauchy/stirling.hpp"

namespace polycauchy::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::string& name, const std::string& text)
{
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

int int_flag(const std::string& name, const std::string& text)
{
    const Rational r = rational_flag(name, text);
    if (!r.is_integer())
        throw UsageError("--" + name + " must be an integer, got " + text);
    return static_cast<int>(r.to_long());
}

std::vector<Rational> rational_list(const std::string& name, const std::string& text)
{
    std::vector<Rational> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        values.push_back(rational_flag(name, item));
    return values;
}

CauchyKind parse_kind(const std::string& s) { return s == "second" ? CauchyKind::second : CauchyKind::first; }

Construction parse_construction(const std::string& s)
{
    static const std::map<std::string, Construction> names{{"gsn", Construction::gsn},
                                                           {"integral", Construction::integral},
                                                           {"series", Construction::series},
                                                           {"binomial_conv", Construction::binomial_conv},
                                                           {"stirling_expansion", Construction::stirling_expansion}};
    return names.at(s);
}

std::string coefficients(const Poly& p)
{
    std::string s;
    for (int i = 0; i <= std::max(p.degree(), 0); ++i) {
        if (i)
            s += ' ';
        s += p.coeff(i).to_string();
    }
    return s;
}

/// Flags shared by the value-producing verbs, kept as text until a family asks for them.
struct Values {
    std::string kind = "first";
    std::string construction = "gsn";
    std::string n = "0", k = "1", m = "0", x, y = "0", a = "1", q = "1", r = "0", l = "0", alpha = "1";
    std::string L = "1";
    std::string min_n = "0";
    std::optional<std::string> max_n;

    int get_n() const { return int_flag("n", n); }
    int get_k() const { return int_flag("k", k); }
    int get_max(int fallback) const { return max_n ? int_flag("max-n", *max_n) : fallback; }

    MultiParam multi() const
    {
        MultiParam p;
        p.n = get_n();
        p.a = int_flag("a", a);
        p.q = rational_flag("q", q);
        p.L = rational_list("L", L);
        p.k = static_cast<int>(p.L.size());
        p.y = rational_flag("y", y);
        p.validate();
        return p;
    }
};

/// Polynomial-valued families keyed by name; n is the index.
using PolyFamily = std::function<Poly(const Values&, int n)>;

const std::map<std::string, PolyFamily>& poly_families()
{
    static const std::map<std::string, PolyFamily> f{
        {"cauchy", [](const Values& v, int n) {
             return cauchy_poly(parse_kind(v.kind), n, v.get_k(), parse_construction(v.construction));
         }},
        {"bernoulli-poly", [](const Values&, int n) { return bernoulli_poly(n); }},
        {"gen-bernoulli", [](const Values& v, int n) { return gen_bernoulli_poly(n, int_flag("alpha", v.alpha)); }},
        {"euler-poly", [](const Values&, int n) { return euler_poly(n); }},
        {"power-sum", [](const Values&, int n) { return power_sum_poly(n); }},
        {"poly-bernoulli", [](const Values& v, int n) { return poly_bernoulli_gsn(n, v.get_k()); }},
        {"poly-bernoulli-kl", [](const Values& v, int n) { return poly_bernoulli_kl(n, v.get_k()); }},
        {"hyperharmonic", [](const Values&, int n) { return hyperharmonic_poly(n); }},
        {"harmonic-poly", [](const Values&, int n) { return harmonic_poly(n); }},
        {"gsn1", [](const Values& v, int n) { return gsn1(n, int_flag("m", v.m)); }},
        {"gsn2", [](const Values& v, int n) { return gsn2(n, int_flag("m", v.m)); }},
        {"aux", [](const Values& v, int n) { return c_aux_poly(n, v.get_k()); }},
        {"multiparam", [](const Values& v, int n) {
             MultiParam p = v.multi();
             p.n = n;
             return multiparam_cauchy(parse_kind(v.kind), p);
         }},
        {"multiparam-bernoulli", [](const Values& v, int n) {
             MultiParam p = v.multi();
             p.n = n;
             return multiparam_poly_bernoulli(p);
         }},
    };
    return f;
}

std::vector<std::string> keys_of(const std::map<std::string, PolyFamily>& m)
{
    std::vector<std::string> k;
    for (const auto& [name, _] : m)
        k.push_back(name);
    return k;
}

void emit_triangle(std::ostream& out, TriangleKind kind, int max_n)
{
    out << "n\tm\tvalue\n";
    for (int n = 0; n <= max_n; ++n)
        for (int m = 0; m <= n; ++m)
            out << n << '\t' << m << '\t' << TriangleCache::shared(kind).at(n, m) << '\n';
}

int do_table(const std::string& family, const Values& v, bool n_as_max, std::ostream& out)
{
    const int max_n = n_as_max && !v.max_n ? v.get_n() : v.get_max(10);
    const int min_n = int_flag("min-n", v.min_n);
    if (family == "cauchy-numbers") {
        const CauchyKind kind = parse_kind(v.kind);
        out << "n\tvalue\n";
        for (int n = min_n; n <= max_n; ++n)
            out << n << '\t' << cauchy_number(kind, n, v.get_k()) << '\n';
        return exit_ok;
    }
    if (family == "bernoulli") {
        out << "n\tvalue\n";
        for (int n = min_n; n <= max_n; ++n)
            out << n << '\t' << bernoulli_number(n) << '\n';
        return exit_ok;
    }
    if (family == "harmonic") {
        out << "n\tvalue\n";
        for (int n = min_n; n <= max_n; ++n)
            out << n << '\t' << harmonic_number(n) << '\n';
        return exit_ok;
    }
    static const std::map<std::string, TriangleKind> triangles{{"stirling1", TriangleKind::stirling1_unsigned},
                                                               {"stirling2", TriangleKind::stirling2},
                                                               {"central-u", TriangleKind::central_u},
                                                               {"lah", TriangleKind::lah}};
    if (auto it = triangles.find(family); it != triangles.end()) {
        emit_triangle(out, it->second, max_n);
        return exit_ok;
    }
    const auto& fams = poly_families();
    auto it = fams.find(family);
    if (it == fams.end())
        throw UsageError("table: unknown family '" + family + "'");
    out << "n\tcoefficients\n";
    for (int n = min_n; n <= max_n; ++n)
        out << n << '\t' << coefficients(it->second(v, n)) << '\n';
    return exit_ok;
}

int do_eval(const std::string& family, const Values& v, std::ostream& out)
{
    if (family == "stirling1" || family == "stirling2" || family == "lah" || family == "central-u") {
        const int n = v.get_n(), m = int_flag("m", v.m);
        const Rational value = family == "stirling1"   ? stirling1(n, m)
                               : family == "stirling2" ? stirling2(n, m)
                               : family == "lah"       ? lah(n, m)
                                                       : central_u(n, m);
        out << value << '\n';
        return exit_ok;
    }
    if (family == "whitney-first" || family == "whitney-second") {
        const auto kind = family == "whitney-first" ? StirlingKind::first : StirlingKind::second;
        out << whitney(kind, rational_flag("m", v.m), rational_flag("r", v.r), v.get_n(), int_flag("l", v.l)) << '\n';
        return exit_ok;
    }
    if (family == "shifted-cauchy") {
        const MultiParam p = v.multi();
        out << shifted_cauchy_number(parse_kind(v.kind), p.n, p.a, p.q, p.L) << '\n';
        return exit_ok;
    }
    if (family == "bernoulli") {
        out << bernoulli_number(v.get_n()) << '\n';
        return exit_ok;
    }
    const auto& fams = poly_families();
    auto it = fams.find(family);
    if (it == fams.end())
        throw UsageError("eval: unknown family '" + family + "'");
    const Poly p = it->second(v, v.get_n());
    if (v.x.empty()) {
        out << to_string(p) << '\n';
        return exit_ok;
    }
    const std::string sqrt_prefix = "sqrt:";
    if (v.x.rfind(sqrt_prefix, 0) == 0) {
        const QuadraticSurd s = evaluate_at_sqrt(p, rational_flag("x", v.x.substr(sqrt_prefix.size())));
        out << s.rational << '\t' << s.radical << '\n';
        return exit_ok;
    }
    out << p(rational_flag("x", v.x)) << '\n';
    return exit_ok;
}

int do_series(const std::string& gf, int order, const Values& v, std::ostream& out)
{
    if (order < 0)
        throw UsageError("series: --order must be non-negative");
    PolySeries s(0);
    bool exponential = true;
    if (gf == "cauchy1")
        s = gf_cauchy1(order);
    else if (gf == "cauchy2")
        s = gf_cauchy2(order);
    else if (gf == "gen-bernoulli")
        s = gf_gen_bernoulli(int_flag("alpha", v.alpha), order);
    else if (gf == "hyperharmonic")
        s = gf_hyperharmonic(order), exponential = false;
    else if (gf == "harmonic-poly")
        s = gf_harmonic_poly(order), exponential = false;
    else
        throw UsageError("series: unknown generating function '" + gf + "'");
    out << "n\tn!\tcoefficient" << (exponential ? "\tn!*coefficient" : "") << '\n';
    for (int n = 0; n <= order; ++n) {
        out << n << '\t' << factorial(n) << '\t' << to_string(s[n]);
        if (exponential)
            out << '\t' << to_string(s[n] * factorial(n));
        out << '\n';
    }
    return exit_ok;
}

int do_export(const std::string& family, const std::string& format, const std::string& path, const Values& v,
              std::ostream& out)
{
    const auto& fams = poly_families();
    auto it = fams.find(family);
    if (it == fams.end())
        throw UsageError("export: unknown family '" + family + "'");
    const int max_n = v.get_max(6);
    const int min_n = int_flag("min-n", v.min_n);
    std::vector<ExportRecord> records;
    for (int n = min_n; n <= max_n; ++n) {
        std::map<std::string, std::string> params{{"n", std::to_string(n)}};
        if (family == "cauchy") {
            params["kind"] = v.kind;
            params["k"] = std::to_string(v.get_k());
        } else if (family.rfind("poly-bernoulli", 0) == 0 || family == "aux") {
            params["k"] = std::to_string(v.get_k());
        }
        records.push_back({family, std::move(params), it->second(v, n)});
    }
    const std::string text = format == "json" ? export_json(records).dump(2) + "\n" : export_tsv(records);
    write_file(path, text);
    out << "wrote " << records.size() << " records to " << path << '\n';
    return exit_ok;
}

int do_verify(const std::vector<std::string>& ids, const std::string& group, std::optional<std::string> max_n,
              const std::string& config, unsigned jobs, bool json, bool timing, bool list, std::ostream& out)
{
    using namespace identity;
    if (list) {
        for (const auto& c : catalog())
            out << c.id << '\t' << (c.is_probe() ? "probe" : "identity") << '\t' << c.ref << '\n';
        return exit_ok;
    }
    GridDefaults defaults;
    if (!config.empty()) {
        try {
            defaults.apply_config(read_file(config));
        } catch (const std::invalid_argument& e) {
            throw UsageError(config + ": " + e.what());
        }
    }
    if (max_n)
        defaults.cap_n(int_flag("max-n", *max_n));

    std::vector<std::string> selected = ids;
    for (const auto& id : ids)
        if (!find_case(id))
            throw UsageError("verify: unknown identity id '" + id + "'");
    if (!group.empty()) {
        for (const auto& c : catalog())
            if (c.group == group)
                selected.push_back(c.id);
        if (selected.empty())
            throw UsageError("verify: no cases in group '" + group + "'");
    }

    const SuiteResult result = run_all(defaults, jobs, selected);
    if (json)
        out << result.to_json(timing).dump(2) << '\n';
    else
        out << result.summary_text();
    return result.failed_cases() == 0 ? exit_ok : exit_failures;
}

class CacheGuard {
public:
    CacheGuard()
    {
        if (const char* dir = std::getenv("POLYCAUCHY_CACHE_DIR"); dir && *dir) {
            dir_ = dir;
            if (std::filesystem::exists(*dir_))
                load_triangle_caches(*dir_);
        }
    }

    void save() const
    {
        if (!dir_)
            return;
        std::filesystem::create_directories(*dir_);
        save_triangle_caches(*dir_);
    }

private:
    std::optional<std::filesystem::path> dir_;
};

void add_value_flags(CLI::App* cmd, Values& v)
{
    cmd->add_option("--kind", v.kind, "first or second")->check(CLI::IsMember({"first", "second"}));
    cmd->add_option("--construction", v.construction, "cauchy construction")
        ->check(CLI::IsMember({"gsn", "integral", "series", "binomial_conv", "stirling_expansion"}));
    cmd->add_option("--n", v.n, "index n");
    cmd->add_option("--k", v.k, "poly index k");
    cmd->add_option("--m", v.m, "second index m (Whitney: scale m)");
    cmd->add_option("--x", v.x, "evaluation point p/q, or sqrt:d for sqrt(d)");
    cmd->add_option("--y", v.y, "multiparameter y");
    cmd->add_option("--a", v.a, "multiparameter shift a");
    cmd->add_option("--q", v.q, "multiparameter q");
    cmd->add_option("--L", v.L, "comma separated l_1,...,l_k");
    cmd->add_option("--r", v.r, "Whitney r");
    cmd->add_option("--l", v.l, "Whitney l");
    cmd->add_option("--alpha", v.alpha, "order of generalized Bernoulli polynomials");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Cauchy, poly-Cauchy, Stirling and Bernoulli computations", "polycauchy"};
    app.require_subcommand(1);

    Values v;
    std::string family, gf, format = "json", out_path, config, group;
    int order = default_series_order;
    std::vector<std::string> ids;
    std::optional<std::string> verify_max;
    unsigned jobs = 1;
    bool json = false, no_timing = false, list = false;

    auto* table = app.add_subcommand("table", "print a sequence, triangle or polynomial family as TSV");
    table->add_option("family", family, "family name")->required();
    add_value_flags(table, v);
    table->add_option("--max-n", v.max_n, "last row; for sequences --n also sets it");
    table->add_option("--min-n", v.min_n, "first row (sequences and polynomial families)");

    auto* eval = app.add_subcommand("eval", "evaluate a single value or polynomial");
    eval->add_option("family", family, "family name")->required();
    add_value_flags(eval, v);
    std::string pos_n, pos_x;
    eval->add_option("n_pos", pos_n, "index n, same as --n");
    eval->add_option("x_pos", pos_x, "point x, same as --x");

    auto* series = app.add_subcommand("series", "dump a generating function");
    series->add_option("gf", gf, "cauchy1, cauchy2, gen-bernoulli, hyperharmonic, harmonic-poly")->required();
    series->add_option("--order", order, "truncation order");
    series->add_option("--alpha", v.alpha, "order for gen-bernoulli");

    auto* verify = app.add_subcommand("verify", "run identity checks");
    verify->add_option("--id", ids, "case id (repeatable)");
    verify->add_option("--group", group, "run every case of a group, e.g. G05");
    verify->add_option("--max-n", verify_max, "cap every n range");
    verify->add_option("--config", config, "key=value grid overrides")->check(CLI::ExistingFile);
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
    verify->add_flag("--json", json, "print the JSON report");
    verify->add_flag("--no-timing", no_timing, "omit millis from the JSON report");
    verify->add_flag("--list", list, "list case ids and exit");

    auto* exp = app.add_subcommand("export", "write a polynomial family to a file");
    exp->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    exp->add_option("--out", out_path, "output path")->required();
    exp->add_option("--family", family, "polynomial family")->default_val("cauchy");
    add_value_flags(exp, v);
    exp->add_option("--max-n", v.max_n, "last index (default 6)");
    exp->add_option("--min-n", v.min_n, "first index");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (!pos_n.empty())
        v.n = pos_n;
    if (!pos_x.empty())
        v.x = pos_x;

    try {
        CacheGuard cache;
        int code = exit_ok;
        if (*table)
            code = do_table(family, v, table->count("--n") > 0, out);
        else if (*eval)
            code = do_eval(family, v, out);
        else if (*series)
            code = do_series(gf, order, v, out);
        else if (*verify)
            code = do_verify(ids, group, verify_max, config, jobs, json, !no_timing, list, out);
        else if (*exp)
            code = do_export(family, format, out_path, v, out);
        cache.save();
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace polycauchy::cli
