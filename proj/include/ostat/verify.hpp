#pragma once

// Exact checks of the unimodality and comparison results for exponential
// and uniform order-statistic correlations.  Every comparison is strict and
// done in rationals; a tie where strictness is claimed is a failure.

#include "ostat/exact.hpp"
#include "ostat/peak.hpp"
#include "ostat/rational.hpp"
#include "ostat/verification_report.hpp"

#include <stdexcept>
#include <string>

namespace ostat {

namespace detail {

inline std::string nkt(int n, int k, int t) {
    return "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",t=" + std::to_string(t);
}

}  // namespace detail

/// Mediant lemma for positive a, b, c, d:
///   a/(a+b) > c/d  implies  a/(a+b) > (a+c)/(a+b+d) > c/d
///   a/(a+b) < c/d  implies  a/(a+b) < (a+c)/(a+b+d)
inline VerificationReport lemma_check(const Rational& a, const Rational& b, const Rational& c,
                                      const Rational& d) {
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0)
        throw std::invalid_argument("lemma_check needs positive a, b, c, d");
    VerificationReport r;
    r.claim_id = "lemma";
    r.parameter_range = "a=" + to_fraction_string(a) + ",b=" + to_fraction_string(b) +
                        ",c=" + to_fraction_string(c) + ",d=" + to_fraction_string(d);
    Rational left = a / (a + b);
    Rational right = c / d;
    Rational mediant = (a + c) / (a + b + d);
    if (left > right) {
        r.note("case", "a");
        r.check(left > mediant, r.parameter_range + ":left>mediant", left, mediant);
        r.check(mediant > right, r.parameter_range + ":mediant>right", mediant, right);
    } else if (left < right) {
        r.note("case", "b");
        r.check(left < mediant, r.parameter_range + ":left<mediant", left, mediant);
    } else {
        r.note("case", "premise-equal");
    }
    return r;
}

/// Exponential h(k) is strictly increasing on 1..m and strictly decreasing on
/// m..n-t.  t = n-1 leaves a single k and passes vacuously; t = n-2 is the
/// separate edge case handled by verify_edge_case.
inline VerificationReport verify_theorem1(int n, int t) {
    if (t < 1 || t > n - 1 || t == n - 2)
        throw std::out_of_range("verify_theorem1 needs 1 <= t <= n-3 (or t = n-1); got n=" +
                                std::to_string(n) + ", t=" + std::to_string(t));
    VerificationReport r;
    r.claim_id = "unimodal-peak";
    r.parameter_range = "n=" + std::to_string(n) + ",t=" + std::to_string(t);
    if (t == n - 1) {
        r.note("vacuous", "single k");
        return r;
    }
    const int m = peak_index(n, t).m;
    const auto table = corr_table(n, t, ExactFamily::exponential);
    const auto& v = table.values;
    for (int k = 1; k < n - t; ++k) {
        const auto& here = v[static_cast<std::size_t>(k - 1)].h;
        const auto& next = v[static_cast<std::size_t>(k)].h;
        if (k < m)
            r.check(here < next, "h(" + std::to_string(k) + ")<h(" + std::to_string(k + 1) + ")," +
                                     r.parameter_range, here, next);
        else
            r.check(here > next, "h(" + std::to_string(k) + ")>h(" + std::to_string(k + 1) + ")," +
                                     r.parameter_range, here, next);
    }
    r.note("m", std::to_string(m));
    r.note("observed_peak", std::to_string(table.peak_k));
    return r;
}

/// For t = n-2: h(1) > h(2), together with the integral bound
/// sum_{i=2}^{n} 1/i^2 < 4(n-1)/(3(2n+1)) < (n-1)^2/n^2 that drives it.
inline VerificationReport verify_edge_case(int n) {
    if (n < 3) throw std::out_of_range("verify_edge_case needs n >= 3");
    VerificationReport r;
    r.claim_id = "edge-t-n-minus-2";
    r.parameter_range = "n=" + std::to_string(n) + ",t=" + std::to_string(n - 2);
    const int t = n - 2;
    Rational h1 = h_exp(n, 1, t);
    Rational h2 = h_exp(n, 2, t);
    r.check(h1 > h2, "h(1)>h(2)," + r.parameter_range, h1, h2);
    Rational tail = harmonic_sum(2, n, 2);
    Rational integral_bound(BigInt(4) * (n - 1), BigInt(3) * (2 * n + 1));
    r.check(tail < integral_bound, "sum_{i=2}^n 1/i^2 < 4(n-1)/(3(2n+1)),n=" + std::to_string(n),
            tail, integral_bound);
    Rational target(BigInt(n - 1) * (n - 1), BigInt(n) * n);
    r.check(integral_bound < target, "4(n-1)/(3(2n+1)) < (n-1)^2/n^2,n=" + std::to_string(n),
            integral_bound, target);
    return r;
}

/// h_exp(n,k,t) < h_uniform(n,k,t) for every k, t with k + t <= n.
inline VerificationReport verify_theorem2(int n) {
    if (n < 2) throw std::out_of_range("verify_theorem2 needs n >= 2");
    VerificationReport r;
    r.claim_id = "exp-below-uniform";
    r.parameter_range = "n=" + std::to_string(n);
    const auto tail = square_tail_sums(n);
    for (int t = 1; t <= n - 1; ++t)
        for (int k = 1; k + t <= n; ++k) {
            Rational he = tail[static_cast<std::size_t>(n + 1 - k)] /
                          tail[static_cast<std::size_t>(n + 1 - k - t)];
            Rational hu = h_uniform(n, k, t);
            r.check(he < hu, detail::nkt(n, k, t), he, hu);
        }
    return r;
}

/// Uniform h(k): strictly unimodal around m when n-t is odd; when n-t is even
/// it rises to m, ties at m and m+1, then falls.  At t = n-2 both values equal
/// 2/(n(n-1)).
inline VerificationReport uniform_shape(int n, int t) {
    if (n < 2 || t < 1 || t > n - 1)
        throw std::out_of_range("uniform_shape needs 1 <= t <= n-1");
    VerificationReport r;
    r.claim_id = "uniform-shape";
    r.parameter_range = "n=" + std::to_string(n) + ",t=" + std::to_string(t);
    const int m = parity_peak(n, t);
    const bool tie = (n - t) % 2 == 0;
    r.note("m", std::to_string(m));
    r.note("tie", tie ? "true" : "false");
    if (t == n - 1) {
        r.note("vacuous", "single k");
        return r;
    }
    for (int k = 1; k < n - t; ++k) {
        Rational here = h_uniform(n, k, t);
        Rational next = h_uniform(n, k + 1, t);
        std::string where = "h_u(" + std::to_string(k) + ")," + r.parameter_range;
        if (k < m)
            r.check(here < next, where + " rising", here, next);
        else if (tie && k == m)
            r.check(here == next, where + " tie", here, next);
        else
            r.check(here > next, where + " falling", here, next);
    }
    if (t == n - 2) {
        Rational edge(2, BigInt(n) * (n - 1));
        r.check(h_uniform(n, 1, t) == edge, "h_u(1)=2/(n(n-1))," + r.parameter_range,
                h_uniform(n, 1, t), edge);
        r.check(h_uniform(n, 2, t) == edge, "h_u(2)=2/(n(n-1))," + r.parameter_range,
                h_uniform(n, 2, t), edge);
    }
    return r;
}

struct ReflectedPair {
    int j = 0;
    int t = 0;
};

/// With Y_i = -X_{n+1-i}, corr(Y_(i), Y_(i+t)) = corr(X_(j), X_(j+t)) for
/// j = n+1-i-t.  The map is an involution.
inline ReflectedPair reflection_map(int n, int i, int t) {
    if (i < 1 || t < 1 || i + t > n)
        throw std::out_of_range("reflection_map needs i >= 1, t >= 1, i + t <= n");
    return {n + 1 - i - t, t};
}

}  // namespace ostat
