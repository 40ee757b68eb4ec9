#pragma once

// Flat, deterministic report documents rendered as CSV or JSON.
//
// Every cell is stored as already-formatted text with a kind tag, so CSV and
// JSON carry the same digits.  Exact rationals travel as "num/den" strings.

#include "ostat/rational.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ostat {

inline constexpr const char* kToolVersion = "0.1.0";

struct Cell {
    enum class Kind { text, integer, decimal, boolean };
    Kind kind = Kind::text;
    std::string text;

    static Cell str(std::string s) { return {Kind::text, std::move(s)}; }
    static Cell integer(long long v) { return {Kind::integer, std::to_string(v)}; }
    static Cell decimal(std::string formatted) { return {Kind::decimal, std::move(formatted)}; }
    static Cell boolean(bool b) { return {Kind::boolean, b ? "true" : "false"}; }
    static Cell fraction(const Rational& q) { return {Kind::text, to_fraction_string(q)}; }
};

/// Rounds a double half away from zero through its exact binary value.
inline Cell decimal_cell(double value, int places) {
    return Cell::decimal(to_decimal(Rational(value), places));
}

using Record = std::vector<std::pair<std::string, Cell>>;

struct Summary {
    long long passed = 0;
    long long failed = 0;
};

struct ReportDocument {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Record> rows;
    Summary summary;
    std::string tool_version = kToolVersion;
    std::optional<std::uint64_t> seed;

    bool all_passed() const { return summary.failed == 0; }

    void tally(bool ok) { ok ? ++summary.passed : ++summary.failed; }
};

namespace detail {

inline nlohmann::ordered_json cell_json(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::integer:
        case Cell::Kind::decimal: return nlohmann::ordered_json::parse(c.text);
        case Cell::Kind::boolean: return c.text == "true";
        case Cell::Kind::text: break;
    }
    return c.text;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace detail

inline std::string to_json(const ReportDocument& doc) {
    nlohmann::ordered_json j;
    j["command"] = doc.command;
    j["tool_version"] = doc.tool_version;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : doc.parameters) params[k] = v;
    j["parameters"] = params;
    if (doc.seed) j["seed"] = *doc.seed;
    else j["seed"] = nullptr;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& rec : doc.rows) {
        nlohmann::ordered_json row = nlohmann::ordered_json::object();
        for (const auto& [k, c] : rec) row[k] = detail::cell_json(c);
        rows.push_back(std::move(row));
    }
    j["rows"] = rows;
    j["summary"] = {{"passed", doc.summary.passed}, {"failed", doc.summary.failed}};
    return j.dump(2) + "\n";
}

/// Columns are every key in order of first appearance; a row missing a key
/// gets an empty field.
inline std::string to_csv(const ReportDocument& doc) {
    std::ostringstream out;
    if (doc.rows.empty()) return "";
    std::vector<std::string> columns;
    for (const auto& rec : doc.rows)
        for (const auto& [key, cell] : rec)
            if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << detail::csv_field(columns[i]);
    out << '\n';
    for (const auto& rec : doc.rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            auto it = std::find_if(rec.begin(), rec.end(), [&](const auto& kv) { return kv.first == columns[i]; });
            out << (i ? "," : "") << (it == rec.end() ? "" : detail::csv_field(it->second.text));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace ostat
