#ifndef POLYCAUCHY_FORMAT_HPP
#define POLYCAUCHY_FORMAT_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "polycauchy/polynomial.hpp"
#include "polycauchy/rational.hpp"

namespace polycauchy {

/// "c0 + c1*x + c2*x^2" with zero terms dropped and signs folded; "0" for the zero polynomial.
std::string to_string(const Poly& p, const std::string& var = "x");

/// Array of coefficient strings, index = power.
nlohmann::json to_json(const Poly& p);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
Poly poly_from_json(const nlohmann::json& j);

/// One exported polynomial: family name, its parameters ("p/q" text), coefficients.
struct ExportRecord {
    std::string family;
    std::map<std::string, std::string> params;
    Poly poly;

    friend bool operator==(const ExportRecord&, const ExportRecord&) = default;
};

/// Array of {family, params, coefficients}.
nlohmann::json export_json(const std::vector<ExportRecord>& records);
std::vector<ExportRecord> import_json(const nlohmann::json& j);

/// Header "family\tparams\tcoefficients" then one row per record;
/// params as k=v joined by ',' and coefficients joined by ' '.
std::string export_tsv(const std::vector<ExportRecord>& records);

/// Writes text to path; throws std::runtime_error naming the path on failure.
void write_file(const std::filesystem::path& path, const std::string& text);
std::string read_file(const std::filesystem::path& path);

} // namespace polycauchy

#endif
