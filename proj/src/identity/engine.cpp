#include "polycauchy/identity.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "polycauchy/format.hpp"
#include "registry.hpp"

namespace polycauchy::identity {

const Rational& Point::r(const std::string& name) const
{
    for (const auto& [k, v] : values)
        if (k == name)
            return v;
    throw std::out_of_range("grid point has no coordinate '" + name + "'");
}

int Point::i(const std::string& name) const
{
    const Rational& v = r(name);
    if (!v.is_integer())
        throw std::range_error("coordinate '" + name + "' is not an integer: " + v.to_string());
    return static_cast<int>(v.to_long());
}

const std::vector<Rational>& Point::l() const
{
    if (!L)
        throw std::out_of_range("grid point has no L tuple");
    return *L;
}

nlohmann::json Point::to_json() const
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : values)
        j[k] = v.to_string();
    if (L) {
        auto arr = nlohmann::json::array();
        for (const auto& v : *L)
            arr.push_back(v.to_string());
        j["L"] = arr;
    }
    return j;
}

ParameterGrid ParameterGrid::unit()
{
    ParameterGrid g;
    g.unit_ = true;
    return g;
}

ParameterGrid& ParameterGrid::axis(std::string name, std::vector<Rational> values)
{
    for (const auto& a : axes_)
        if (a.name == name)
            throw std::invalid_argument("duplicate grid axis '" + name + "'");
    if (name == "L")
        throw std::invalid_argument("L is set with l_choices, not as an axis");
    axes_.push_back({std::move(name), std::move(values)});
    return *this;
}

ParameterGrid& ParameterGrid::axis(std::string name, int lo, int hi)
{
    std::vector<Rational> v;
    for (int i = lo; i <= hi; ++i)
        v.emplace_back(i);
    return axis(std::move(name), std::move(v));
}

ParameterGrid& ParameterGrid::l_choices(std::vector<std::vector<Rational>> choices)
{
    ls_ = std::move(choices);
    return *this;
}

ParameterGrid& ParameterGrid::where(std::string label, std::function<bool(const Point&)> pred)
{
    filters_.emplace_back(std::move(label), std::move(pred));
    return *this;
}

std::vector<Point> ParameterGrid::points() const
{
    std::vector<Point> out;
    if (is_empty())
        return out;
    std::vector<std::size_t> idx(axes_.size(), 0);
    for (const auto& a : axes_)
        if (a.values.empty())
            return out;
    if (ls_ && ls_->empty())
        return out;
    const std::size_t nl = ls_ ? ls_->size() : 1;
    while (true) {
        for (std::size_t li = 0; li < nl; ++li) {
            Point p;
            for (std::size_t a = 0; a < axes_.size(); ++a)
                p.values.emplace_back(axes_[a].name, axes_[a].values[idx[a]]);
            if (ls_)
                p.L = (*ls_)[li];
            const bool keep = std::all_of(filters_.begin(), filters_.end(),
                                          [&](const auto& f) { return f.second(p); });
            if (keep)
                out.push_back(std::move(p));
        }
        std::size_t a = axes_.size();
        while (a > 0) {
            --a;
            if (++idx[a] < axes_[a].values.size())
                break;
            idx[a] = 0;
            if (a == 0)
                return out;
        }
        if (axes_.empty())
            return out;
    }
}

namespace {

std::string describe_values(const std::vector<Rational>& v)
{
    // Integer runs print as lo..hi.
    bool run = v.size() > 2;
    for (std::size_t i = 0; run && i < v.size(); ++i)
        run = v[i].is_integer() && (i == 0 || v[i] - v[i - 1] == Rational(1));
    if (run)
        return v.front().to_string() + ".." + v.back().to_string();
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].to_string();
    return s + "}";
}

} // namespace

std::string ParameterGrid::describe() const
{
    if (unit_)
        return "unit";
    if (is_empty())
        return "empty";
    std::string s;
    for (const auto& a : axes_)
        s += (s.empty() ? "" : " ") + a.name + "=" + describe_values(a.values);
    if (ls_) {
        s += (s.empty() ? "" : " ") + std::string("L={");
        for (std::size_t i = 0; i < ls_->size(); ++i) {
            s += i ? ";" : "";
            for (std::size_t j = 0; j < (*ls_)[i].size(); ++j)
                s += (j ? "," : "") + (*ls_)[i][j].to_string();
        }
        s += "}";
    }
    for (const auto& f : filters_)
        s += " where " + f.first;
    return s;
}

void GridDefaults::cap_n(int max_n)
{
    if (max_n < 0)
        throw std::invalid_argument("max-n must be >= 0");
    max_n_single = std::min(max_n_single, max_n);
    max_n_double = std::min(max_n_double, max_n);
    max_n_triple = std::min(max_n_triple, max_n);
}

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<Rational> parse_list(const std::string& s, char sep = ',')
{
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = trim(item);
        if (!item.empty())
            out.push_back(Rational::parse(item));
    }
    return out;
}

int parse_bound(const std::string& key, const std::string& v)
{
    const Rational r = Rational::parse(v);
    if (!r.is_integer() || r.sign() < 0 || r > Rational(64))
        throw std::invalid_argument("config: " + key + " must be an integer in 0..64");
    return static_cast<int>(r.to_long());
}

} // namespace

void GridDefaults::apply_config(const std::string& text)
{
    std::stringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "max_n_single")
                max_n_single = parse_bound(key, val);
            else if (key == "max_n_double")
                max_n_double = parse_bound(key, val);
            else if (key == "max_n_triple")
                max_n_triple = parse_bound(key, val);
            else if (key == "max_k") {
                max_k = parse_bound(key, val);
                if (max_k < 1)
                    throw std::invalid_argument("config: max_k must be >= 1");
            } else if (key == "max_r")
                max_r = parse_bound(key, val);
            else if (key == "max_a") {
                max_a = parse_bound(key, val);
                if (max_a < 1)
                    throw std::invalid_argument("config: max_a must be >= 1");
            } else if (key == "q_values")
                q_values = parse_list(val);
            else if (key == "x_values")
                x_values = parse_list(val);
            else if (key == "whitney_m")
                whitney_m = parse_list(val);
            else if (key == "l_values") {
                l_values.clear();
                std::stringstream ss(val);
                std::string tuple;
                while (std::getline(ss, tuple, ';'))
                    if (auto t = parse_list(tuple); !t.empty())
                        l_values.push_back(std::move(t));
            } else
                throw std::invalid_argument("config: unknown key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    for (const auto& q : q_values)
        if (q.is_zero())
            throw std::invalid_argument("config: q_values must be nonzero");
    for (const auto& m : whitney_m)
        if (m.is_zero())
            throw std::invalid_argument("config: whitney_m must be nonzero");
    for (const auto& t : l_values)
        for (const auto& l : t)
            if (l.is_zero())
                throw std::invalid_argument("config: l_values entries must be nonzero");
}

nlohmann::json GridDefaults::to_json() const
{
    auto list = [](const std::vector<Rational>& v) {
        auto a = nlohmann::json::array();
        for (const auto& r : v)
            a.push_back(r.to_string());
        return a;
    };
    auto ls = nlohmann::json::array();
    for (const auto& t : l_values)
        ls.push_back(list(t));
    return {{"max_n_single", max_n_single}, {"max_n_double", max_n_double}, {"max_n_triple", max_n_triple},
            {"max_k", max_k}, {"max_r", max_r}, {"max_a", max_a}, {"q_values", list(q_values)},
            {"x_values", list(x_values)}, {"whitney_m", list(whitney_m)}, {"l_values", ls}};
}

Outcome same(const Rational& lhs, const Rational& rhs)
{
    return {lhs == rhs, lhs.to_string(), rhs.to_string()};
}

Outcome same(const Poly& lhs, const Poly& rhs)
{
    return {lhs == rhs, to_string(lhs), to_string(rhs)};
}

Outcome holds(bool ok, std::string lhs, std::string rhs)
{
    return {ok, std::move(lhs), std::move(rhs)};
}

Outcome all_of(std::vector<Outcome> parts)
{
    Outcome joined;
    for (auto& p : parts) {
        if (!p.ok)
            return std::move(p);
        joined.lhs += (joined.lhs.empty() ? "" : " ; ") + p.lhs;
        joined.rhs += (joined.rhs.empty() ? "" : " ; ") + p.rhs;
    }
    return joined;
}

std::string Report::status() const
{
    if (kind == "probe")
        return "probe";
    return passed() ? "pass" : "fail";
}

nlohmann::json Report::to_json(bool include_timing) const
{
    nlohmann::json j;
    j["id"] = id;
    j["group"] = group;
    j["kind"] = kind;
    j["grid"] = grid;
    j["points"] = points;
    j["status"] = status();
    j["failure_count"] = failure_count;
    auto f = nlohmann::json::array();
    for (const auto& x : failures)
        f.push_back({{"params", x.point.to_json()}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    j["failures"] = f;
    if (kind == "probe") {
        auto v = nlohmann::json::array();
        for (const auto& r : variants)
            v.push_back({{"name", r.name}, {"points", r.points}, {"failures", r.failures}});
        j["variants"] = v;
        j["finding"] = finding;
    }
    if (include_timing)
        j["millis"] = millis;
    return j;
}

const std::vector<IdentityCase>& catalog()
{
    static const std::vector<IdentityCase> cases = [] {
        Registry reg;
        register_basic(reg);
        register_derivative(reg);
        register_bernoulli(reg);
        register_poly(reg);
        register_multi(reg);
        std::set<std::string> ids;
        std::set<std::string> groups;
        for (const auto& c : reg.cases) {
            if (!ids.insert(c.id).second)
                throw std::logic_error("duplicate identity id " + c.id);
            groups.insert(c.group);
        }
        for (int g = 1; g <= 22; ++g) {
            const std::string name = (g < 10 ? "G0" : "G") + std::to_string(g);
            if (!groups.count(name))
                throw std::logic_error("identity group " + name + " has no cases");
        }
        return std::move(reg.cases);
    }();
    return cases;
}

const IdentityCase* find_case(const std::string& id)
{
    for (const auto& c : catalog())
        if (c.id == id)
            return &c;
    return nullptr;
}

namespace {

void check_arity(const IdentityCase& c, const ParameterGrid& grid)
{
    if (grid.is_empty())
        return;
    std::set<std::string> want(c.arity.begin(), c.arity.end());
    std::set<std::string> have;
    for (const auto& a : grid.axes())
        have.insert(a.name);
    if (grid.has_l())
        have.insert("L");
    if (grid.is_unit() && !want.empty())
        throw std::invalid_argument(c.id + ": unit grid given for a case with parameters");
    if (want != have) {
        std::string w, h;
        for (const auto& s : want)
            w += (w.empty() ? "" : ",") + s;
        for (const auto& s : have)
            h += (h.empty() ? "" : ",") + s;
        throw std::invalid_argument(c.id + ": grid axes {" + h + "} do not match case arity {" + w + "}");
    }
}

Outcome guarded(const Check& check, const Point& p)
{
    try {
        return check(p);
    } catch (const std::exception& e) {
        return {false, std::string("exception: ") + e.what(), "-"};
    }
}

} // namespace

Report verify(const IdentityCase& c, const ParameterGrid& grid)
{
    check_arity(c, grid);
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.id = c.id;
    r.group = c.group;
    r.kind = c.is_probe() ? "probe" : "identity";
    r.grid = grid.describe();
    const auto pts = grid.points();
    r.points = pts.size();
    if (c.is_probe()) {
        for (const auto& v : c.variants) {
            VariantResult vr{v.name, pts.size(), 0};
            for (const auto& p : pts)
                if (!guarded(v.check, p).ok)
                    ++vr.failures;
            r.variants.push_back(vr);
        }
        std::vector<std::string> good;
        for (const auto& v : r.variants)
            if (v.failures == 0 && v.points > 0)
                good.push_back(v.name);
        if (pts.empty())
            r.finding = "no points evaluated";
        else if (good.size() == 1)
            r.finding = "variant '" + good.front() + "' holds at all " + std::to_string(pts.size()) +
                        " points; every other variant fails";
        else if (good.empty())
            r.finding = "no variant holds at every point";
        else
            r.finding = std::to_string(good.size()) + " variants hold at every point";
    } else {
        for (const auto& p : pts) {
            Outcome o = guarded(c.check, p);
            if (o.ok)
                continue;
            ++r.failure_count;
            if (r.failures.size() < max_recorded_failures)
                r.failures.push_back({p, std::move(o.lhs), std::move(o.rhs)});
        }
    }
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Report verify(const std::string& id, const ParameterGrid& grid)
{
    const IdentityCase* c = find_case(id);
    if (!c)
        throw std::invalid_argument("unknown identity id '" + id + "'");
    return verify(*c, grid);
}

std::size_t SuiteResult::failed_cases() const
{
    return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const Report& r) {
        return r.status() == "fail";
    }));
}

nlohmann::json SuiteResult::to_json(bool include_timing) const
{
    auto rs = nlohmann::json::array();
    for (const auto& r : reports)
        rs.push_back(r.to_json(include_timing));
    auto gs = nlohmann::json::array();
    for (const auto& g : groups)
        gs.push_back({{"group", g.group}, {"cases", g.cases}, {"passed", g.passed}, {"failed", g.failed},
                      {"probes", g.probes}, {"points", g.points}});
    return {{"reports", rs}, {"summary", gs}, {"failed_cases", failed_cases()}};
}

std::string SuiteResult::summary_text() const
{
    std::ostringstream out;
    std::size_t cases = 0, points = 0;
    for (const auto& g : groups) {
        out << g.group << "  " << g.passed << "/" << (g.cases - g.probes) << " pass";
        if (g.probes)
            out << ", " << g.probes << " probe";
        out << ", " << g.points << " points\n";
        cases += g.cases;
        points += g.points;
    }
    for (const auto& r : reports) {
        if (r.kind == "probe")
            out << "probe " << r.id << ": " << r.finding << "\n";
        else if (!r.passed()) {
            out << "FAIL " << r.id << ": " << r.failure_count << " of " << r.points << " points";
            if (!r.failures.empty())
                out << "; first at " << r.failures.front().point.to_json().dump() << " lhs=" << r.failures.front().lhs
                    << " rhs=" << r.failures.front().rhs;
            out << "\n";
        }
    }
    out << "total: " << cases << " cases, " << points << " points, " << failed_cases() << " failed\n";
    return out.str();
}

SuiteResult run_all(const GridDefaults& defaults, unsigned jobs, const std::vector<std::string>& ids)
{
    std::vector<const IdentityCase*> selected;
    if (ids.empty()) {
        for (const auto& c : catalog())
            selected.push_back(&c);
    } else {
        for (const auto& id : ids) {
            const IdentityCase* c = find_case(id);
            if (!c)
                throw std::invalid_argument("unknown identity id '" + id + "'");
            selected.push_back(c);
        }
    }

    SuiteResult result;
    result.reports.resize(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++)
            result.reports[i] = verify(*selected[i], selected[i]->default_grid(defaults));
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(selected.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    std::map<std::string, GroupSummary> groups;
    for (const auto& r : result.reports) {
        auto& g = groups[r.group];
        g.group = r.group;
        ++g.cases;
        g.points += r.points;
        if (r.kind == "probe")
            ++g.probes;
        else if (r.passed())
            ++g.passed;
        else
            ++g.failed;
    }
    for (auto& [_, g] : groups)
        result.groups.push_back(g);
    return result;
}

} // namespace polycauchy::identity
