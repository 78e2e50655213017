#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "gammaq/analysis.hpp"
#include "gammaq/recurrences.hpp"

namespace gammaq::io {

using json = nlohmann::ordered_json;

/// RFC 4180 quoting: fields holding a comma, quote, or line break are quoted
/// and inner quotes doubled.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    return out + "\r\n";
}

inline std::string decimal(const BigFloat& x, unsigned digits) { return x.str(static_cast<int>(digits)); }

inline std::string decimal(const std::optional<BigFloat>& x, unsigned digits) {
    return x ? decimal(*x, digits) : std::string();
}

inline const std::vector<std::string>& convergence_columns() {
    static const std::vector<std::string> cols{"n",           "value",        "target",     "abs_error",
                                               "normalized_error", "growth_ratio", "linear_form_ratio",
                                               "error_sign",  "digits"};
    return cols;
}

inline std::vector<std::string> csv_fields(const ConvergenceRow& r) {
    return {std::to_string(r.n),
            decimal(r.value_pq, r.digits),
            decimal(r.target, r.digits),
            decimal(r.abs_error, r.digits),
            decimal(r.normalized_error, r.digits),
            decimal(r.q_growth_ratio, r.digits),
            decimal(r.linear_form_ratio, r.digits),
            std::to_string(r.error_sign),
            std::to_string(r.digits)};
}

inline std::string to_csv(const std::vector<ConvergenceRow>& rows) {
    std::string out = csv_line(convergence_columns());
    for (const auto& r : rows) out += csv_line(csv_fields(r));
    return out;
}

inline json to_json(const ConvergenceRow& r) {
    const auto fields = csv_fields(r);
    json j;
    j["n"] = r.n;
    for (std::size_t i = 1; i < 7; ++i) {
        if (fields[i].empty())
            j[convergence_columns()[i]] = nullptr;
        else
            j[convergence_columns()[i]] = fields[i];
    }
    j["error_sign"] = r.error_sign;
    j["digits"] = r.digits;
    return j;
}

inline json to_json(const std::vector<ConvergenceRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back(to_json(r));
    return out;
}

inline std::string to_csv(const std::vector<GrowthRow>& rows, unsigned digits) {
    std::string out = csv_line({"n", "growth_ratio", "reference", "relative_deviation"});
    for (const auto& r : rows)
        out += csv_line({std::to_string(r.n), decimal(r.q_growth_ratio, digits), decimal(r.reference, digits),
                         decimal(r.relative_deviation, digits)});
    return out;
}

inline json to_json(const std::vector<GrowthRow>& rows, unsigned digits) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"n", r.n},
                       {"growth_ratio", decimal(r.q_growth_ratio, digits)},
                       {"reference", decimal(r.reference, digits)},
                       {"relative_deviation", decimal(r.relative_deviation, digits)}});
    return out;
}

inline json to_json(const AsymptoticConstants& k, unsigned digits) {
    return {{"c1", decimal(k.c1, digits)}, {"c2", decimal(k.c2, digits)}, {"ratio", decimal(k.ratio, digits)}};
}

inline json to_json(const RationalPolynomial& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(c.str());
    return out;
}

inline RationalPolynomial polynomial_from_json(const json& j) {
    std::vector<BigRational> c;
    for (const auto& s : j) c.push_back(BigRational::parse(s.get<std::string>()));
    return RationalPolynomial(std::move(c));
}

/// Coefficient polynomials in n, ascending, as exact "p/q" strings.
inline json to_json(const RecurrenceSpec& spec) {
    json j;
    j["name"] = spec.name;
    j["order"] = spec.order;
    j["shift"] = spec.shift;
    j["offset"] = spec.offset;
    j["parameter"] = spec.parameter ? json(spec.parameter->str()) : json(nullptr);
    json coeffs = json::array();
    for (const auto& p : spec.coefficients) coeffs.push_back(to_json(p));
    j["coefficients"] = std::move(coeffs);
    return j;
}

inline RecurrenceSpec recurrence_spec_from_json(const json& j) {
    RecurrenceSpec spec;
    spec.name = j.at("name").get<std::string>();
    spec.order = j.at("order").get<unsigned>();
    spec.shift = j.at("shift").get<long>();
    spec.offset = j.at("offset").get<long>();
    if (!j.at("parameter").is_null()) spec.parameter = BigRational::parse(j.at("parameter").get<std::string>());
    for (const auto& p : j.at("coefficients")) spec.coefficients.push_back(polynomial_from_json(p));
    if (spec.coefficients.size() != spec.order + 1)
        throw domain_error("recurrence of order " + std::to_string(spec.order) + " needs " +
                           std::to_string(spec.order + 1) + " coefficient polynomials");
    return spec;
}

}  // namespace gammaq::io
