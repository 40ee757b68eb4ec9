#pragma once

// Peak location and exponential-vs-uniform comparisons for arbitrary
// distributions, checked against the unimodality rules that hold for
// exponentials and their expected extensions:
//   decreasing density: peak at m (same rule as the exponential)
//   increasing density: peak at m when n-t is odd, m+1 when n-t is even
//   any continuous density: rho <= rho_uniform for every k

#include "ostat/dist.hpp"
#include "ostat/exact.hpp"
#include "ostat/monte_carlo.hpp"
#include "ostat/order_stats.hpp"
#include "ostat/peak.hpp"
#include "ostat/verification_report.hpp"
#include "ostat/verify.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace ostat {

/// Exact h = rho^2 when the distribution has a closed form.
inline std::optional<Rational> exact_h(const DistSpec& d, int n, int k, int t) {
    switch (d.reference) {
        case ExactReference::exponential: return h_exp(n, k, t);
        case ExactReference::uniform: return h_uniform(n, k, t);
        case ExactReference::negated_exponential: {
            auto r = reflection_map(n, k, t);
            return h_exp(n, r.j, r.t);
        }
        case ExactReference::none: break;
    }
    return std::nullopt;
}

/// Peak index expected for this density shape, if any.
inline std::optional<int> expected_peak(DensityShape shape, int n, int t) {
    if (t > n - 2) return std::nullopt;
    const int m = parity_peak(n, t);
    const bool even = (n - t) % 2 == 0;
    switch (shape) {
        case DensityShape::decreasing: return m;
        case DensityShape::increasing: return even ? m + 1 : m;
        default: return std::nullopt;
    }
}

enum class ExploreMethod { quad, mc };

inline constexpr double kQuadTieTolerance = 1e-9;

struct ExploreCell {
    int n = 0;
    int t = 0;
    std::vector<double> rho;          // k = 1..n-t
    std::vector<double> std_error;    // Monte Carlo only
    int peak_k = 0;
    bool unimodal = false;            // strictly up to the peak, strictly down after
    bool tie_at_peak = false;         // rho(peak) == rho(peak + 1)
    std::optional<int> expected_peak;
    double uniform_margin = 0.0;    // min_k (rho_uniform - rho)
    int uniform_worst_k = 0;
    std::optional<double> exact_max_abs_dev;  // quad: max |rho - rho_exact|
    std::optional<double> exact_max_z;        // mc: max |rho - rho_exact| / stderr

    bool peak_conforms() const { return !expected_peak || *expected_peak == peak_k; }
    bool below_uniform() const { return uniform_margin > 0; }
};

inline ExploreCell explore_cell(const DistSpec& d, int n, int t, ExploreMethod method,
                                const McConfig& mc = {}, unsigned jobs = 1) {
    if (n < 2 || t < 1 || t > n - 1) throw std::out_of_range("explore needs 1 <= t <= n-1");
    ExploreCell cell;
    cell.n = n;
    cell.t = t;
    cell.expected_peak = expected_peak(d.shape, n, t);
    cell.uniform_margin = INFINITY;
    for (int k = 1; k <= n - t; ++k) {
        double r;
        if (method == ExploreMethod::quad) {
            r = rho_generic(d, n, k, t);
        } else {
            auto est = mc_rho(d, n, k, t, mc, jobs);
            r = est.rho_hat;
            cell.std_error.push_back(est.std_error);
        }
        cell.rho.push_back(r);
        if (auto h = exact_h(d, n, k, t)) {
            const double dev = std::fabs(r - std::sqrt(to_double(*h)));
            if (method == ExploreMethod::quad)
                cell.exact_max_abs_dev = std::max(cell.exact_max_abs_dev.value_or(0.0), dev);
            else
                cell.exact_max_z = std::max(cell.exact_max_z.value_or(0.0), dev / cell.std_error.back());
        }
        const double margin = std::sqrt(to_double(h_uniform(n, k, t))) - r;
        if (margin < cell.uniform_margin) {
            cell.uniform_margin = margin;
            cell.uniform_worst_k = k;
        }
    }
    // Quadrature values this close are an exact tie (e.g. a symmetric density).
    const double tie = method == ExploreMethod::quad ? kQuadTieTolerance : 0.0;
    std::size_t best = 0;
    for (std::size_t i = 1; i < cell.rho.size(); ++i)
        if (cell.rho[i] > cell.rho[best] + tie) best = i;
    cell.peak_k = static_cast<int>(best) + 1;
    cell.tie_at_peak = best + 1 < cell.rho.size() && std::fabs(cell.rho[best + 1] - cell.rho[best]) <= tie;
    cell.unimodal = true;
    for (std::size_t i = 0; i + 1 < cell.rho.size(); ++i) {
        if (i == best && cell.tie_at_peak) continue;
        const bool rising = i < best;
        const double step = cell.rho[i + 1] - cell.rho[i];
        if (rising ? !(step > tie) : !(step < -tie)) cell.unimodal = false;
    }
    return cell;
}

/// Quadrature scan of the peak rule and rho < rho_uniform over n in n_range and t in t_range
/// (t values outside 1..n-1 are skipped).  The peak rule is only judged for
/// monotone densities; rho < rho_uniform is skipped for the uniform itself.
inline VerificationReport conjecture_scan(const DistSpec& d, int n_lo, int n_hi, int t_lo, int t_hi,
                                          std::vector<ExploreCell>* cells = nullptr) {
    VerificationReport r;
    r.claim_id = "peak-and-below-uniform:" + d.name;
    r.parameter_range = "n=" + std::to_string(n_lo) + ".." + std::to_string(n_hi) + ",t=" +
                        std::to_string(t_lo) + ".." + std::to_string(t_hi);
    const bool judge_below_uniform = d.shape != DensityShape::constant;
    for (int n = std::max(2, n_lo); n <= n_hi; ++n)
        for (int t = std::max(1, t_lo); t <= std::min(t_hi, n - 1); ++t) {
            auto cell = explore_cell(d, n, t, ExploreMethod::quad);
            const std::string where = "n=" + std::to_string(n) + ",t=" + std::to_string(t);
            if (cell.expected_peak) {
                r.check(cell.peak_conforms(), where + " peak", Rational(cell.peak_k),
                        Rational(*cell.expected_peak));
                r.check(cell.unimodal, where + " unimodal", Rational(cell.unimodal ? 1 : 0), Rational(1));
            }
            if (judge_below_uniform)
                r.check(cell.below_uniform(), where + ",k=" + std::to_string(cell.uniform_worst_k) + " rho<rho_uniform",
                        Rational(cell.uniform_margin), Rational(0));
            if (cells) cells->push_back(std::move(cell));
        }
    return r;
}

}  // namespace ostat
