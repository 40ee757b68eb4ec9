#pragma once

// Big-integer positivity scans for the polynomial inequalities behind the
// unimodality and exponential-vs-uniform proofs.
//
// Each inequality is evaluated in its unexpanded product form after
// substituting n; nothing here is expanded symbolically.

#include "ostat/parallel.hpp"
#include "ostat/rational.hpp"
#include "ostat/verification_report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ostat {

// even: n = 2m + t.  odd: n = 2m + t - 1.
enum class GapParity { even, odd };

enum class IneqId { i3_even, i3_odd, i10_even, i10_odd, p19 };

inline std::string to_string(IneqId id) {
    switch (id) {
        case IneqId::i3_even: return "I3-even";
        case IneqId::i3_odd: return "I3-odd";
        case IneqId::i10_even: return "I10-even";
        case IneqId::i10_odd: return "I10-odd";
        case IneqId::p19: return "P19";
    }
    return "?";
}

inline std::optional<IneqId> parse_ineq_id(const std::string& s) {
    for (auto id : {IneqId::i3_even, IneqId::i3_odd, IneqId::i10_even, IneqId::i10_odd, IneqId::p19})
        if (to_string(id) == s) return id;
    return std::nullopt;
}

namespace detail {

inline BigInt gap_n(int m, int t, GapParity parity) {
    return parity == GapParity::even ? BigInt(2 * m + t) : BigInt(2 * m + t - 1);
}

inline void require_mt(int m, int t) {
    if (m < 2 || t < 1)
        throw std::invalid_argument("needs m >= 2 and t >= 1; got m=" + std::to_string(m) +
                                    ", t=" + std::to_string(t));
}

}  // namespace detail

/// Peak lower-bound inequality:
///   (2n+1)(2n+1-2m-2t)[n^2+(n+1-m)^2+2n(n+1-m)(m-1)](n-m)^2
///     - 8(m+t) n^2 (n+1-m)^2 (n-m-t)^2
inline BigInt eval_ineq3(int m, int t, GapParity parity) {
    detail::require_mt(m, t);
    const BigInt n = detail::gap_n(m, t, parity);
    const BigInt M = m, T = t;
    const BigInt a = n + 1 - M;
    const BigInt bracket = n * n + a * a + 2 * n * a * (M - 1);
    return (2 * n + 1) * (2 * n + 1 - 2 * M - 2 * T) * bracket * (n - M) * (n - M) -
           8 * (M + T) * n * n * a * a * (n - M - T) * (n - M - T);
}

/// Rising-side inequality at m-1:
///   (2n+1)(2n+3-2m)[n^2+(n+2-m-t)^2+2n(n+2-m-t)(m+t-2)](n+1-m-t)^2
///     - 8(m-1) n^2 (n+2-m-t)^2 (n+1-m)^2
inline BigInt eval_ineq10(int m, int t, GapParity parity) {
    detail::require_mt(m, t);
    const BigInt n = detail::gap_n(m, t, parity);
    const BigInt M = m, T = t;
    const BigInt b = n + 2 - M - T;
    const BigInt bracket = n * n + b * b + 2 * n * b * (M + T - 2);
    return (2 * n + 1) * (2 * n + 3 - 2 * M) * bracket * (n + 1 - M - T) * (n + 1 - M - T) -
           8 * (M - 1) * n * n * b * b * (n + 1 - M) * (n + 1 - M);
}

/// Sufficient condition for h_exp < h_uniform when k, t >= 2, with n = k+t+x:
///   k(n+1-k-t)(2n+1)(2n+3-2k)(n+1-k)^2 [n^2+(n+1-k-t)^2+2n(n+1-k-t)(k+t-1)]
///     - 2(k+t)(n+1-k) n^2 (n+1-k-t)^2 [(2n+1)(2n+3-2k)+4(k-1)(n+1-k)^2]
inline BigInt eval_p19(int k, int t, int x) {
    if (k < 2 || t < 2 || x < 0)
        throw std::invalid_argument("eval_p19 needs k >= 2, t >= 2, x >= 0; got k=" +
                                    std::to_string(k) + ", t=" + std::to_string(t) +
                                    ", x=" + std::to_string(x));
    const BigInt K = k, T = t;
    const BigInt n = K + T + x;
    const BigInt a = n + 1 - K;      // n+1-k
    const BigInt b = n + 1 - K - T;  // n+1-k-t
    const BigInt lower_bracket = n * n + b * b + 2 * n * b * (K + T - 1);
    const BigInt upper_bracket = (2 * n + 1) * (2 * n + 3 - 2 * K) + 4 * (K - 1) * a * a;
    return K * b * (2 * n + 1) * (2 * n + 3 - 2 * K) * a * a * lower_bracket -
           2 * (K + T) * a * n * n * b * b * upper_bracket;
}

struct IntRange {
    int lo = 0;
    int hi = 0;
    bool empty() const { return hi < lo; }
    long long size() const { return empty() ? 0 : static_cast<long long>(hi) - lo + 1; }
};

// Grid for one inequality.  I3/I10 use (m, t); P19 uses (k, t, x).
struct IneqSpec {
    IneqId id = IneqId::i3_even;
    IntRange m{2, 200};
    IntRange t{1, 200};
    IntRange k{2, 60};
    IntRange x{0, 60};
};

inline IneqSpec default_ineq_spec(IneqId id) {
    IneqSpec s;
    s.id = id;
    if (id == IneqId::p19) s.t = {2, 60};
    return s;
}

inline void validate(const IneqSpec& s) {
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument(to_string(s.id) + ": " + what);
    };
    if (s.id == IneqId::p19) {
        if (s.k.lo < 2) fail("k must start at 2 or more");
        if (s.t.lo < 2) fail("t must start at 2 or more");
        if (s.x.lo < 0) fail("x must be non-negative");
        if (s.k.empty() || s.t.empty() || s.x.empty()) fail("empty grid");
    } else {
        if (s.m.lo < 2) fail("m must start at 2 or more");
        if (s.t.lo < 1) fail("t must start at 1 or more");
        if (s.m.empty() || s.t.empty()) fail("empty grid");
    }
}

/// Evaluates the chosen inequality on every grid cell.  Non-positive cells are
/// failures carrying the exact value; details record the minimum and where.
inline VerificationReport positivity_scan(const IneqSpec& spec, unsigned jobs = 1) {
    validate(spec);
    VerificationReport report;
    report.claim_id = to_string(spec.id);

    struct RowResult {
        long long checks = 0;
        std::vector<Failure> failures;
        std::optional<BigInt> min_value;
        std::string min_at;
    };
    auto consider = [](RowResult& row, BigInt value, std::string where) {
        ++row.checks;
        if (value <= 0) row.failures.push_back({where, Rational(value), Rational(0)});
        if (!row.min_value || value < *row.min_value) {
            row.min_value = std::move(value);
            row.min_at = std::move(where);
        }
    };

    std::vector<RowResult> rows;
    if (spec.id == IneqId::p19) {
        report.parameter_range = "k=" + std::to_string(spec.k.lo) + ".." + std::to_string(spec.k.hi) +
                                 ",t=" + std::to_string(spec.t.lo) + ".." + std::to_string(spec.t.hi) +
                                 ",x=" + std::to_string(spec.x.lo) + ".." + std::to_string(spec.x.hi);
        rows = parallel_map(static_cast<std::size_t>(spec.k.size()), jobs, [&](std::size_t i) {
            RowResult row;
            const int k = spec.k.lo + static_cast<int>(i);
            for (int t = spec.t.lo; t <= spec.t.hi; ++t)
                for (int x = spec.x.lo; x <= spec.x.hi; ++x)
                    consider(row, eval_p19(k, t, x),
                             "k=" + std::to_string(k) + ",t=" + std::to_string(t) + ",x=" + std::to_string(x));
            return row;
        });
    } else {
        report.parameter_range = "m=" + std::to_string(spec.m.lo) + ".." + std::to_string(spec.m.hi) +
                                 ",t=" + std::to_string(spec.t.lo) + ".." + std::to_string(spec.t.hi);
        const bool is3 = spec.id == IneqId::i3_even || spec.id == IneqId::i3_odd;
        const GapParity parity = (spec.id == IneqId::i3_even || spec.id == IneqId::i10_even)
                                     ? GapParity::even
                                     : GapParity::odd;
        rows = parallel_map(static_cast<std::size_t>(spec.m.size()), jobs, [&](std::size_t i) {
            RowResult row;
            const int m = spec.m.lo + static_cast<int>(i);
            for (int t = spec.t.lo; t <= spec.t.hi; ++t)
                consider(row, is3 ? eval_ineq3(m, t, parity) : eval_ineq10(m, t, parity),
                         "m=" + std::to_string(m) + ",t=" + std::to_string(t));
            return row;
        });
    }

    std::optional<BigInt> min_value;
    std::string min_at;
    for (auto& row : rows) {
        report.checks_run += row.checks;
        for (auto& f : row.failures) report.failures.push_back(std::move(f));
        if (row.min_value && (!min_value || *row.min_value < *min_value)) {
            min_value = row.min_value;
            min_at = row.min_at;
        }
    }
    report.note("min_value", min_value ? min_value->str() : "");
    report.note("min_at", min_at);
    return report;
}

}  // namespace ostat
