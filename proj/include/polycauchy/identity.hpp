#ifndef POLYCAUCHY_IDENTITY_HPP
#define POLYCAUCHY_IDENTITY_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polycauchy/polynomial.hpp"
#include "polycauchy/rational.hpp"

namespace polycauchy::identity {

/// One grid point: named rational coordinates plus an optional L tuple.
struct Point {
    std::vector<std::pair<std::string, Rational>> values;
    std::optional<std::vector<Rational>> L;

    /// Throws std::out_of_range for an unknown name.
    const Rational& r(const std::string& name) const;
    /// Integer coordinate; throws std::range_error if not an integer.
    int i(const std::string& name) const;
    const std::vector<Rational>& l() const;

    nlohmann::json to_json() const;
};

struct Axis {
    std::string name;
    std::vector<Rational> values;
};

/// Cartesian product of axes (first axis outermost), then L choices, filtered.
///
/// A default-constructed grid has no points. A unit grid has exactly one
/// empty point and is the grid for cases without parameters.
class ParameterGrid {
public:
    ParameterGrid() = default;

    static ParameterGrid unit();

    ParameterGrid& axis(std::string name, std::vector<Rational> values);
    ParameterGrid& axis(std::string name, int lo, int hi);
    ParameterGrid& l_choices(std::vector<std::vector<Rational>> choices);
    /// Keeps only points satisfying pred; label is shown in the grid description.
    ParameterGrid& where(std::string label, std::function<bool(const Point&)> pred);

    bool is_unit() const { return unit_; }
    bool is_empty() const { return !unit_ && axes_.empty() && !ls_; }
    const std::vector<Axis>& axes() const { return axes_; }
    bool has_l() const { return ls_.has_value(); }

    std::vector<Point> points() const;
    std::string describe() const;

private:
    bool unit_ = false;
    std::vector<Axis> axes_;
    std::optional<std::vector<std::vector<Rational>>> ls_;
    std::vector<std::pair<std::string, std::function<bool(const Point&)>>> filters_;
};

/// Default ranges for run_all. Keys accepted by apply_config are the field names.
struct GridDefaults {
    int max_n_single = 12;
    int max_n_double = 8;
    int max_n_triple = 5;
    int max_k = 4;
    int max_r = 4;
    int max_a = 3;
    std::vector<Rational> q_values{Rational(1), Rational(-1), Rational(1, 2), Rational(-3)};
    std::vector<Rational> x_values{Rational(0), Rational(1), Rational(-1), Rational(1, 2),
                                   Rational(-1, 2), Rational(2, 3), Rational(-3, 2)};
    std::vector<Rational> whitney_m{Rational(-2), Rational(-1), Rational(1), Rational(2), Rational(3)};
    std::vector<std::vector<Rational>> l_values{
        {Rational(1)},
        {Rational(2)},
        {Rational(1), Rational(1)},
        {Rational(1, 2), Rational(3)},
        {Rational(1), Rational(1), Rational(1, 2)},
        {Rational(-1), Rational(2), Rational(1, 3)},
    };

    /// Caps every n range at max_n (used by --max-n).
    void cap_n(int max_n);
    /// Applies "key=value" lines ('#' comments allowed). Lists are comma separated
    /// rationals; l_values uses ';' between tuples. Throws std::invalid_argument.
    void apply_config(const std::string& text);
    nlohmann::json to_json() const;
};

/// Result of one evaluation: both sides rendered as text.
struct Outcome {
    bool ok = true;
    std::string lhs;
    std::string rhs;
};

Outcome same(const Rational& lhs, const Rational& rhs);
Outcome same(const Poly& lhs, const Poly& rhs);
/// Text-only outcome for predicates that are not an equality.
Outcome holds(bool ok, std::string lhs, std::string rhs);
/// First failing outcome, or a passing one joining all sides.
Outcome all_of(std::vector<Outcome> parts);

using Check = std::function<Outcome(const Point&)>;
using GridBuilder = std::function<ParameterGrid(const GridDefaults&)>;

struct ProbeVariant {
    std::string name;
    Check check;
};

/// One registered identity. Probe cases carry competing variants and report
/// which of them hold instead of failing.
struct IdentityCase {
    std::string id;
    std::string group;
    std::string ref;
    std::vector<std::string> arity;
    GridBuilder default_grid;
    Check check;
    std::vector<ProbeVariant> variants;

    bool is_probe() const { return !variants.empty(); }
};

struct Failure {
    Point point;
    std::string lhs;
    std::string rhs;
};

struct VariantResult {
    std::string name;
    std::size_t points = 0;
    std::size_t failures = 0;
};

struct Report {
    std::string id;
    std::string group;
    std::string kind;
    std::string grid;
    std::size_t points = 0;
    std::vector<Failure> failures;
    std::size_t failure_count = 0;
    long long millis = 0;
    std::vector<VariantResult> variants;
    std::string finding;

    bool passed() const { return failure_count == 0; }
    std::string status() const;
    /// Schema: {id, group, kind, grid, points, status, failure_count, failures:[{params,lhs,rhs}], millis}
    /// plus variants/finding for probes. include_timing=false drops millis.
    nlohmann::json to_json(bool include_timing = true) const;
};

/// Maximum failures kept per report (the count is always exact).
inline constexpr std::size_t max_recorded_failures = 20;

/// Registry in catalog order. Building it asserts that every group G01..G22 is populated.
const std::vector<IdentityCase>& catalog();

/// Lookup by id; nullptr when absent.
const IdentityCase* find_case(const std::string& id);

/// Runs one case over grid. Throws std::invalid_argument for an unknown id or a
/// grid whose axes do not match the case arity.
Report verify(const std::string& id, const ParameterGrid& grid);
Report verify(const IdentityCase& c, const ParameterGrid& grid);

struct GroupSummary {
    std::string group;
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t probes = 0;
    std::size_t points = 0;
};

struct SuiteResult {
    std::vector<Report> reports;
    std::vector<GroupSummary> groups;

    std::size_t failed_cases() const;
    nlohmann::json to_json(bool include_timing = true) const;
    std::string summary_text() const;
};

/// Runs the given cases (all when ids is empty) with default grids. jobs > 1
/// evaluates cases concurrently; reports stay in catalog order.
SuiteResult run_all(const GridDefaults& defaults, unsigned jobs = 1, const std::vector<std::string>& ids = {});

} // namespace polycauchy::identity

#endif
