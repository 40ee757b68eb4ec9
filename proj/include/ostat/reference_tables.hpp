#pragma once

// Published three-decimal h(k) tables for exponential samples of size
// n = 5, 6, 8, 9, and their comparison against the exact values.

#include "ostat/exact.hpp"
#include "ostat/rational.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace ostat {

struct PublishedRow {
    int n;
    int t;
    std::vector<std::string_view> h;  // k = 1..n-t
};

inline const std::vector<PublishedRow>& published_exp_tables() {
    static const std::vector<PublishedRow> rows = {
        {5, 1, {"0.390", "0.480", "0.461", "0.317"}},
        {5, 2, {"0.187", "0.221", "0.146"}},
        {5, 3, {"0.086", "0.070"}},
        {5, 4, {"0.027"}},
        {6, 1, {"0.410", "0.520", "0.540", "0.491", "0.329"}},
        {6, 2, {"0.213", "0.281", "0.265", "0.162"}},
        {6, 3, {"0.115", "0.138", "0.087"}},
        {6, 4, {"0.056", "0.045"}},
        {6, 5, {"0.019"}},
        {8, 1, {"0.434", "0.565", "0.615", "0.624", "0.599", "0.526", "0.345"}},
        {8, 2, {"0.245", "0.347", "0.384", "0.374", "0.315", "0.182"}},
        {8, 3, {"0.151", "0.217", "0.230", "0.197", "0.109"}},
        {8, 4, {"0.094", "0.130", "0.121", "0.068"}},
        {8, 5, {"0.056", "0.068", "0.042"}},
        {8, 6, {"0.030", "0.024"}},
        {8, 7, {"0.010"}},
        {9, 1, {"0.441", "0.578", "0.635", "0.656", "0.650", "0.617", "0.537", "0.351"}},
        {9, 2, {"0.355", "0.367", "0.417", "0.426", "0.401", "0.331", "0.188"}},
        {9, 3, {"0.162", "0.241", "0.271", "0.263", "0.215", "0.116"}},
        {9, 4, {"0.106", "0.157", "0.167", "0.141", "0.075"}},
        {9, 5, {"0.069", "0.097", "0.090", "0.050"}},
        {9, 6, {"0.043", "0.052", "0.031"}},
        {9, 7, {"0.022", "0.018"}},
        {9, 8, {"0.008"}},
    };
    return rows;
}

inline constexpr std::array<int, 4> kPublishedSampleSizes{5, 6, 8, 9};

// match:      the exact value rounds (half away from zero) to the published digits
// last-digit: off by less than one unit in the third decimal (published value
//             is the floor or ceiling of the exact one)
// typo:       off by a full unit or more
enum class CellStatus { match, last_digit, typo };

inline std::string to_string(CellStatus s) {
    switch (s) {
        case CellStatus::match: return "match";
        case CellStatus::last_digit: return "last-digit";
        case CellStatus::typo: return "typo";
    }
    return "?";
}

struct GoldenCell {
    int n = 0;
    int t = 0;
    int k = 0;
    Rational exact;
    std::string published;
    std::string rounded;
    CellStatus status = CellStatus::match;
};

inline CellStatus classify_cell(const Rational& exact, const std::string& published) {
    if (to_decimal(exact, 3) == published) return CellStatus::match;
    Rational diff = exact - parse_rational(published);
    if (diff < 0) diff = -diff;
    return diff < Rational(1, 1000) ? CellStatus::last_digit : CellStatus::typo;
}

/// Every published cell for sample size n, next to the exact value.
inline std::vector<GoldenCell> golden_cells(int n) {
    std::vector<GoldenCell> out;
    for (const auto& row : published_exp_tables()) {
        if (row.n != n) continue;
        const auto table = corr_table(n, row.t, ExactFamily::exponential);
        for (std::size_t i = 0; i < row.h.size(); ++i) {
            GoldenCell c;
            c.n = n;
            c.t = row.t;
            c.k = static_cast<int>(i) + 1;
            c.exact = table.values[i].h;
            c.published = std::string(row.h[i]);
            c.rounded = to_decimal(c.exact, 3);
            c.status = classify_cell(c.exact, c.published);
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace ostat
