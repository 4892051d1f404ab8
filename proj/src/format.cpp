#include "polycauchy/format.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polycauchy {

std::string to_string(const Poly& p, const std::string& var)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational c = p.coeff(i);
        if (c.is_zero())
            continue;
        const Rational mag = abs(c);
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        std::string term;
        if (i == 0 || mag != Rational(1))
            term = mag.to_string();
        if (i > 0) {
            if (!term.empty())
                term += '*';
            term += var;
            if (i > 1)
                term += '^' + std::to_string(i);
        }
        out += term;
    }
    return out;
}

nlohmann::json to_json(const Poly& p)
{
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coefficients())
        arr.push_back(c.to_string());
    return arr;
}

Poly poly_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("polynomial JSON must be an array of coefficient strings");
    std::vector<Rational> c;
    for (const auto& v : j) {
        if (!v.is_string())
            throw std::invalid_argument("polynomial coefficient must be a \"p/q\" string");
        c.push_back(Rational::parse(v.get<std::string>()));
    }
    return Poly(std::move(c));
}

nlohmann::json export_json(const std::vector<ExportRecord>& records)
{
    auto arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [k, v] : r.params)
            params[k] = v;
        arr.push_back({{"family", r.family}, {"params", params}, {"coefficients", to_json(r.poly)}});
    }
    return arr;
}

std::vector<ExportRecord> import_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("export JSON must be an array");
    std::vector<ExportRecord> out;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("family") || !item.contains("coefficients"))
            throw std::invalid_argument("export record needs family and coefficients");
        ExportRecord r;
        r.family = item.at("family").get<std::string>();
        if (item.contains("params"))
            for (const auto& [k, v] : item.at("params").items())
                r.params[k] = v.get<std::string>();
        r.poly = poly_from_json(item.at("coefficients"));
        out.push_back(std::move(r));
    }
    return out;
}

std::string export_tsv(const std::vector<ExportRecord>& records)
{
    std::ostringstream out;
    out << "family\tparams\tcoefficients\n";
    for (const auto& r : records) {
        out << r.family << '\t';
        bool first = true;
        for (const auto& [k, v] : r.params) {
            out << (first ? "" : ",") << k << '=' << v;
            first = false;
        }
        out << '\t';
        first = true;
        for (const auto& c : r.poly.coefficients()) {
            out << (first ? "" : " ") << c;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path.string());
    out << text;
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open for reading: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace polycauchy
