#pragma once

// Report-producing commands behind the ostat command-line tool.

#include "ostat/bounds.hpp"
#include "ostat/dist.hpp"
#include "ostat/exact.hpp"
#include "ostat/explore.hpp"
#include "ostat/monte_carlo.hpp"
#include "ostat/order_stats.hpp"
#include "ostat/parallel.hpp"
#include "ostat/proofcheck.hpp"
#include "ostat/reference_tables.hpp"
#include "ostat/report_document.hpp"
#include "ostat/verify.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ostat {

// Bad command-line input: unknown names, empty or invalid ranges.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "a..b" or a single integer "a".
inline IntRange parse_int_range(const std::string& text) {
    try {
        auto dots = text.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            int v = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {v, v};
        }
        std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
        IntRange r{std::stoi(lo, &used), 0};
        if (used != lo.size()) throw std::invalid_argument(text);
        r.hi = std::stoi(hi, &used);
        if (used != hi.size()) throw std::invalid_argument(text);
        if (r.empty()) throw std::invalid_argument(text);
        return r;
    } catch (const std::logic_error&) {
        throw UsageError("malformed integer range '" + text + "' (expected a..b)");
    }
}

inline std::string range_text(IntRange r) {
    return r.lo == r.hi ? std::to_string(r.lo) : std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

inline const DistSpec& lookup_dist(const DistRegistry& registry, const std::string& name) {
    const std::string key = name == "exponential" ? "exp" : name;
    if (!registry.contains(key)) throw UsageError("unknown distribution: " + name);
    return registry.get(key);
}

// ---------------------------------------------------------------- table

struct TableOptions {
    int n = 5;
    int t = 1;
    std::string dist = "exp";
    int precision = 3;
};

inline ReportDocument cmd_table(const TableOptions& opt, const DistRegistry& registry = {}) {
    const DistSpec& d = lookup_dist(registry, opt.dist);
    if (opt.n < 2 || opt.t < 1 || opt.t > opt.n - 1)
        throw UsageError("table needs n >= 2 and 1 <= t <= n-1");
    if (opt.precision < 0 || opt.precision > 30) throw UsageError("precision must be in 0..30");

    ReportDocument doc;
    doc.command = "table";
    doc.parameters = {{"n", std::to_string(opt.n)},
                      {"t", std::to_string(opt.t)},
                      {"dist", d.name},
                      {"precision", std::to_string(opt.precision)}};

    const bool exact = d.reference != ExactReference::none;
    std::vector<std::optional<Rational>> exact_h_values;
    std::vector<double> rho_values;
    for (int k = 1; k <= opt.n - opt.t; ++k) {
        if (exact) exact_h_values.push_back(exact_h(d, opt.n, k, opt.t));
        else rho_values.push_back(rho_generic(d, opt.n, k, opt.t));
    }
    std::size_t peak = 0;
    for (std::size_t i = 1; i < static_cast<std::size_t>(opt.n - opt.t); ++i) {
        bool better = exact ? *exact_h_values[i] > *exact_h_values[peak] : rho_values[i] > rho_values[peak];
        if (better) peak = i;
    }
    for (int k = 1; k <= opt.n - opt.t; ++k) {
        const auto i = static_cast<std::size_t>(k - 1);
        Record rec;
        rec.emplace_back("k", Cell::integer(k));
        if (exact) {
            const Rational& h = *exact_h_values[i];
            rec.emplace_back("h_exact", Cell::fraction(h));
            rec.emplace_back("h", Cell::decimal(to_decimal(h, opt.precision)));
            rec.emplace_back("rho", Cell::decimal(sqrt_to_decimal(h, opt.precision)));
        } else {
            rec.emplace_back("h_exact", Cell::str(""));
            rec.emplace_back("h", decimal_cell(rho_values[i] * rho_values[i], opt.precision));
            rec.emplace_back("rho", decimal_cell(rho_values[i], opt.precision));
        }
        rec.emplace_back("peak", Cell::boolean(i == peak));
        doc.rows.push_back(std::move(rec));
    }
    return doc;
}

struct GoldFiles {
    std::vector<std::filesystem::path> fixtures;
    std::filesystem::path notes;
};

inline std::string golden_fixture_csv(int n) {
    ReportDocument doc;
    for (const auto& c : golden_cells(n)) {
        Record rec;
        rec.emplace_back("n", Cell::integer(c.n));
        rec.emplace_back("t", Cell::integer(c.t));
        rec.emplace_back("k", Cell::integer(c.k));
        rec.emplace_back("h_exact", Cell::fraction(c.exact));
        rec.emplace_back("h_rounded", Cell::decimal(c.rounded));
        rec.emplace_back("published", Cell::decimal(c.published));
        rec.emplace_back("status", Cell::str(to_string(c.status)));
        doc.rows.push_back(std::move(rec));
    }
    return to_csv(doc);
}

inline std::string golden_notes_text() {
    std::string out =
        "# Published exponential h(k) tables: flagged cells\n\n"
        "Exact values are ratios of harmonic square sums. A published cell is\n"
        "`last-digit` when it differs from the exact value by less than 0.001\n"
        "(the published digit is the floor or ceiling), and `typo` when it is off\n"
        "by 0.001 or more.\n\n"
        "| n | t | k | published | exact (rounded) | exact fraction | status |\n"
        "|---|---|---|---|---|---|---|\n";
    for (int n : kPublishedSampleSizes)
        for (const auto& c : golden_cells(n))
            if (c.status != CellStatus::match)
                out += "| " + std::to_string(c.n) + " | " + std::to_string(c.t) + " | " + std::to_string(c.k) +
                       " | " + c.published + " | " + to_decimal(c.exact, 6) + " | " + to_fraction_string(c.exact) +
                       " | " + to_string(c.status) + " |\n";
    return out;
}

/// Writes exp_table_n{5,6,8,9}.csv and exp_table_notes.md into dir.
inline GoldFiles write_gold_fixtures(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    GoldFiles files;
    auto write = [](const std::filesystem::path& p, const std::string& text) {
        std::ofstream out(p, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + p.string());
        out << text;
    };
    for (int n : kPublishedSampleSizes) {
        auto p = dir / ("exp_table_n" + std::to_string(n) + ".csv");
        write(p, golden_fixture_csv(n));
        files.fixtures.push_back(p);
    }
    files.notes = dir / "exp_table_notes.md";
    write(files.notes, golden_notes_text());
    return files;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::string target = "thm1";
    int n_max = 60;
    std::optional<int> n_min;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    int lemma_cases = 10000;
};

inline int verify_min_n(const std::string& target) {
    if (target == "thm1" || target == "bounds") return 4;
    if (target == "edge") return 3;
    if (target == "thm2" || target == "uniform-shape") return 2;
    if (target == "identities") return 1;
    if (target == "lemma") return 1;
    throw UsageError("unknown verify target: " + target +
                     " (expected thm1|edge|thm2|identities|bounds|lemma|uniform-shape)");
}

namespace detail {

inline Record report_row(const VerificationReport& r, const std::vector<std::pair<std::string, Cell>>& leading) {
    Record rec = leading;
    for (const auto& [k, v] : r.details)
        if (k != "lhs" && k != "rhs" && k != "vacuous") rec.emplace_back(k, Cell::str(v));
    rec.emplace_back("checks", Cell::integer(r.checks_run));
    rec.emplace_back("passed", Cell::boolean(r.passed()));
    rec.emplace_back("first_failure", Cell::str(r.passed() ? "" : r.failures.front().parameters));
    return rec;
}

inline Rational random_positive_rational(std::mt19937_64& engine) {
    std::uniform_int_distribution<int> pick(1, 1000);
    int num = pick(engine);
    int den = pick(engine);
    return Rational(num, den);
}

}  // namespace detail

inline ReportDocument cmd_verify(const VerifyOptions& opt) {
    const int lo = std::max(verify_min_n(opt.target), opt.n_min.value_or(1));
    ReportDocument doc;
    doc.command = "verify";
    doc.parameters = {{"target", opt.target}};

    if (opt.target == "lemma") {
        if (opt.lemma_cases < 1) throw UsageError("lemma needs --cases >= 1");
        doc.parameters.emplace_back("cases", std::to_string(opt.lemma_cases));
        doc.seed = opt.seed;
        std::mt19937_64 engine(opt.seed);
        struct Tally {
            long long cases = 0, checks = 0;
            std::vector<Failure> failures;
        };
        std::vector<std::pair<std::string, Tally>> by_case = {{"a", {}}, {"b", {}}, {"premise-equal", {}}};
        for (int i = 0; i < opt.lemma_cases; ++i) {
            auto a = detail::random_positive_rational(engine);
            auto b = detail::random_positive_rational(engine);
            auto c = detail::random_positive_rational(engine);
            auto d = detail::random_positive_rational(engine);
            auto r = lemma_check(a, b, c, d);
            const std::string which = r.details.front().second;
            for (auto& [name, tally] : by_case)
                if (name == which) {
                    ++tally.cases;
                    tally.checks += r.checks_run;
                    tally.failures.insert(tally.failures.end(), r.failures.begin(), r.failures.end());
                }
        }
        for (const auto& [name, tally] : by_case) {
            Record rec;
            rec.emplace_back("case", Cell::str(name));
            rec.emplace_back("cases", Cell::integer(tally.cases));
            rec.emplace_back("checks", Cell::integer(tally.checks));
            rec.emplace_back("passed", Cell::boolean(tally.failures.empty()));
            rec.emplace_back("first_failure", Cell::str(tally.failures.empty() ? "" : tally.failures.front().parameters));
            doc.tally(tally.failures.empty());
            doc.rows.push_back(std::move(rec));
        }
        return doc;
    }

    if (opt.n_max < lo)
        throw UsageError("verify " + opt.target + " needs --n-max >= " + std::to_string(lo));
    doc.parameters.emplace_back("n_min", std::to_string(lo));
    doc.parameters.emplace_back("n_max", std::to_string(opt.n_max));

    // One work item per n; rows come back in (n, t) order.
    auto per_n = parallel_map(static_cast<std::size_t>(opt.n_max - lo + 1), opt.jobs, [&](std::size_t i) {
        const int n = lo + static_cast<int>(i);
        std::vector<Record> rows;
        auto nt = [&](int t) {
            return std::vector<std::pair<std::string, Cell>>{{"n", Cell::integer(n)}, {"t", Cell::integer(t)}};
        };
        if (opt.target == "thm1") {
            for (int t = 1; t <= n - 3; ++t) rows.push_back(detail::report_row(verify_theorem1(n, t), nt(t)));
        } else if (opt.target == "edge") {
            rows.push_back(detail::report_row(verify_edge_case(n), nt(n - 2)));
        } else if (opt.target == "thm2") {
            rows.push_back(detail::report_row(verify_theorem2(n), {{"n", Cell::integer(n)}}));
        } else if (opt.target == "identities") {
            for (const auto& r : {identity_one(n), identity_two(n)}) {
                auto rec = detail::report_row(r, {{"n", Cell::integer(n)}, {"identity", Cell::str(r.claim_id)}});
                rec.insert(rec.begin() + 2, {"value", Cell::str(r.details.front().second)});
                rows.push_back(std::move(rec));
            }
        } else if (opt.target == "bounds") {
            for (int t = 1; t <= n - 3; ++t) rows.push_back(detail::report_row(verify_bounds(n, t), nt(t)));
        } else if (opt.target == "uniform-shape") {
            for (int t = 1; t <= n - 1; ++t) rows.push_back(detail::report_row(uniform_shape(n, t), nt(t)));
        }
        return rows;
    });
    for (auto& rows : per_n)
        for (auto& rec : rows) {
            bool ok = false;
            for (const auto& [k, c] : rec)
                if (k == "passed") ok = c.text == "true";
            doc.tally(ok);
            doc.rows.push_back(std::move(rec));
        }
    return doc;
}

// ---------------------------------------------------------------- proofcheck

inline ReportDocument cmd_proofcheck(const IneqSpec& spec, unsigned jobs = 1) {
    ReportDocument doc;
    doc.command = "proofcheck";
    doc.parameters.emplace_back("ineq", to_string(spec.id));
    if (spec.id == IneqId::p19) {
        doc.parameters.emplace_back("k", range_text(spec.k));
        doc.parameters.emplace_back("t", range_text(spec.t));
        doc.parameters.emplace_back("x", range_text(spec.x));
    } else {
        doc.parameters.emplace_back("m", range_text(spec.m));
        doc.parameters.emplace_back("t", range_text(spec.t));
    }
    VerificationReport r;
    try {
        r = positivity_scan(spec, jobs);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Record rec;
    rec.emplace_back("ineq", Cell::str(to_string(spec.id)));
    rec.emplace_back("grid", Cell::str(r.parameter_range));
    rec.emplace_back("cells", Cell::integer(r.checks_run));
    rec.emplace_back("non_positive", Cell::integer(static_cast<long long>(r.failures.size())));
    for (const auto& [k, v] : r.details) rec.emplace_back(k, Cell::str(v));
    rec.emplace_back("passed", Cell::boolean(r.passed()));
    doc.tally(r.passed());
    doc.rows.push_back(std::move(rec));
    return doc;
}

// ---------------------------------------------------------------- explore / mc

struct ExploreOptions {
    std::string dist = "tri-inc";
    IntRange n{3, 8};
    std::optional<IntRange> t;  // default: every valid t
    ExploreMethod method = ExploreMethod::quad;
    McConfig mc;
    unsigned jobs = 1;
    int precision = 6;
};

// Quadrature runs judge peak conformity, strict unimodality and rho < rho_uniform.
// Monte Carlo runs judge agreement with the exact value (|z| < 3) when one
// exists; their peaks and margins are reported but too noisy to judge.
inline ReportDocument cmd_explore(const ExploreOptions& opt, const DistRegistry& registry = {}) {
    const DistSpec& d = lookup_dist(registry, opt.dist);
    if (opt.n.lo < 2) throw UsageError("explore needs n >= 2");
    if (opt.method == ExploreMethod::mc) {
        try {
            validate(opt.mc);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    ReportDocument doc;
    doc.command = "explore";
    doc.parameters = {{"dist", d.name},
                      {"shape", to_string(d.shape)},
                      {"n", range_text(opt.n)},
                      {"t", opt.t ? range_text(*opt.t) : "all"},
                      {"method", opt.method == ExploreMethod::quad ? "quad" : "mc"}};
    if (opt.method == ExploreMethod::mc) {
        doc.parameters.emplace_back("samples", std::to_string(opt.mc.samples));
        doc.parameters.emplace_back("batch_size", std::to_string(opt.mc.batch_size));
        doc.seed = opt.mc.seed;
    }
    const bool quad = opt.method == ExploreMethod::quad;
    for (int n = opt.n.lo; n <= opt.n.hi; ++n) {
        const int t_lo = opt.t ? std::max(1, opt.t->lo) : 1;
        const int t_hi = opt.t ? std::min(n - 1, opt.t->hi) : n - 1;
        for (int t = t_lo; t <= t_hi; ++t) {
            Record rec;
            rec.emplace_back("n", Cell::integer(n));
            rec.emplace_back("t", Cell::integer(t));
            ExploreCell cell;
            try {
                cell = explore_cell(d, n, t, opt.method, opt.mc, opt.jobs);
            } catch (const std::runtime_error& e) {
                rec.emplace_back("error", Cell::str(e.what()));
                rec.emplace_back("passed", Cell::boolean(false));
                doc.tally(false);
                doc.rows.push_back(std::move(rec));
                continue;
            }
            bool ok = true;
            if (quad && cell.expected_peak) ok = ok && cell.peak_conforms() && cell.unimodal;
            if (quad && d.shape != DensityShape::constant) ok = ok && cell.below_uniform();
            if (!quad && cell.exact_max_z) ok = ok && *cell.exact_max_z < 3.0;

            std::string rho_list;
            for (std::size_t i = 0; i < cell.rho.size(); ++i)
                rho_list += (i ? ";" : "") + to_decimal(Rational(cell.rho[i]), opt.precision);
            rec.emplace_back("error", Cell::str(""));
            rec.emplace_back("peak_k", Cell::integer(cell.peak_k));
            rec.emplace_back("expected_peak", cell.expected_peak ? Cell::integer(*cell.expected_peak) : Cell::str(""));
            rec.emplace_back("peak_conforms", cell.expected_peak ? Cell::boolean(cell.peak_conforms()) : Cell::str(""));
            rec.emplace_back("unimodal", Cell::boolean(cell.unimodal));
            rec.emplace_back("tie_at_peak", Cell::boolean(cell.tie_at_peak));
            rec.emplace_back("uniform_margin", decimal_cell(cell.uniform_margin, opt.precision));
            rec.emplace_back("uniform_worst_k", Cell::integer(cell.uniform_worst_k));
            rec.emplace_back("below_uniform", Cell::boolean(cell.below_uniform()));
            if (quad)
                rec.emplace_back("exact_max_abs_dev",
                                 cell.exact_max_abs_dev ? Cell::str(to_decimal(Rational(*cell.exact_max_abs_dev), 12))
                                                        : Cell::str(""));
            else
                rec.emplace_back("exact_max_z", cell.exact_max_z ? decimal_cell(*cell.exact_max_z, 3) : Cell::str(""));
            rec.emplace_back("rho", Cell::str(rho_list));
            rec.emplace_back("passed", Cell::boolean(ok));
            doc.tally(ok);
            doc.rows.push_back(std::move(rec));
        }
    }
    return doc;
}

struct McOptions {
    std::string dist = "exp";
    int n = 5;
    int k = 2;
    int t = 1;
    McConfig mc;
    unsigned jobs = 1;
    int precision = 6;
};

inline ReportDocument cmd_mc(const McOptions& opt, const DistRegistry& registry = {}) {
    const DistSpec& d = lookup_dist(registry, opt.dist);
    if (opt.k < 1 || opt.t < 1 || opt.k + opt.t > opt.n) throw UsageError("mc needs k >= 1, t >= 1, k + t <= n");
    try {
        validate(opt.mc);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    ReportDocument doc;
    doc.command = "mc";
    doc.parameters = {{"dist", d.name},
                      {"n", std::to_string(opt.n)},
                      {"k", std::to_string(opt.k)},
                      {"t", std::to_string(opt.t)},
                      {"samples", std::to_string(opt.mc.samples)},
                      {"batch_size", std::to_string(opt.mc.batch_size)}};
    doc.seed = opt.mc.seed;
    const auto est = mc_rho(d, opt.n, opt.k, opt.t, opt.mc, opt.jobs);
    Record rec;
    rec.emplace_back("rho_hat", decimal_cell(est.rho_hat, opt.precision));
    rec.emplace_back("stderr", decimal_cell(est.std_error, opt.precision));
    rec.emplace_back("batches", Cell::integer(static_cast<long long>(est.batches)));
    rec.emplace_back("underpowered", Cell::boolean(est.underpowered));
    bool ok = true;
    if (auto h = exact_h(d, opt.n, opt.k, opt.t)) {
        const double rho = std::sqrt(to_double(*h));
        const double z = (est.rho_hat - rho) / est.std_error;
        ok = std::fabs(z) < 3.0;
        rec.emplace_back("h_exact", Cell::fraction(*h));
        rec.emplace_back("rho_exact", Cell::decimal(sqrt_to_decimal(*h, opt.precision)));
        rec.emplace_back("z", decimal_cell(z, 3));
        rec.emplace_back("within_3se", Cell::boolean(ok));
    } else {
        rec.emplace_back("h_exact", Cell::str(""));
        rec.emplace_back("rho_exact", Cell::str(""));
        rec.emplace_back("z", Cell::str(""));
        rec.emplace_back("within_3se", Cell::str(""));
    }
    doc.tally(ok);
    doc.rows.push_back(std::move(rec));
    return doc;
}

}  // namespace ostat
