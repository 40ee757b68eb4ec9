#pragma once

// Closed-form rational brackets for h(k) and for rho at the peak index.
// All formulas are evaluated as written, in exact rationals.

#include "ostat/exact.hpp"
#include "ostat/peak.hpp"
#include "ostat/rational.hpp"
#include "ostat/verification_report.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace ostat {

// `same`: the bounds and target live on one scale.
// `root`: the bounds bracket sqrt(target); compared by squaring the bounds.
enum class BoundScale { same, root };

struct BoundsPair {
    Rational lower;
    Rational upper;
    std::optional<Rational> target;
    BoundScale scale = BoundScale::same;

    // Strict sandwich lower < target < upper, exactly.
    bool contains(const Rational& value) const {
        if (scale == BoundScale::same) return lower < value && value < upper;
        if (upper <= 0) return false;
        bool above = lower < 0 || lower * lower < value;
        return above && value < upper * upper;
    }
    bool holds() const { return target && contains(*target); }
    Rational gap() const { return upper - lower; }
};

namespace detail {

inline void require_bounds_regime(int n, int t) {
    if (t < 1 || t > n - 3)
        throw std::out_of_range("bounds need 1 <= t <= n-3; got n=" + std::to_string(n) +
                                ", t=" + std::to_string(t));
}

}  // namespace detail

/// Integral-comparison bounds on h(k):
///   lower = (2n+1)(2n+1-2k-2t)[n^2+(n+1-k)^2+2n(n+1-k)(k-1)] / (8n^2(n+1-k)^2(k+t))
///   upper = 8n^2(n+1-k-t)^2 k / ((2n+1)(2n+1-2k)[n^2+(n+1-k-t)^2+2n(n+1-k-t)(k+t-1)])
inline BoundsPair h_bounds(int n, int k, int t) {
    detail::require_bounds_regime(n, t);
    if (k < 1 || k > n - t) throw std::out_of_range("h_bounds needs 1 <= k <= n-t");
    const BigInt N = n, K = k, T = t;
    const BigInt a = N + 1 - K;      // n+1-k
    const BigInt b = N + 1 - K - T;  // n+1-k-t
    BigInt lower_num = (2 * N + 1) * (2 * N + 1 - 2 * K - 2 * T) * (N * N + a * a + 2 * N * a * (K - 1));
    BigInt lower_den = 8 * N * N * a * a * (K + T);
    BigInt upper_num = 8 * N * N * b * b * K;
    BigInt upper_den = (2 * N + 1) * (2 * N + 1 - 2 * K) * (N * N + b * b + 2 * N * b * (K + T - 1));
    return {Rational(lower_num, lower_den), Rational(upper_num, upper_den), h_exp(n, k, t),
            BoundScale::same};
}

/// (n-m-t)/(n-m) < rho_{m,t} < (n+1-m-t)/(n+1-m); target holds h = rho^2.
inline BoundsPair rho_peak_bounds(int n, int t) {
    const int m = peak_index(n, t).m;
    return {Rational(n - m - t, n - m), Rational(n + 1 - m - t, n + 1 - m), h_exp(n, m, t),
            BoundScale::root};
}

enum class AsymptoticCase {
    even_gap,           // n - [nx] even
    odd_gap,            // n - [nx] odd
    integer_even_gap,   // nx integer, n - nx even
    integer_odd_gap,    // nx integer, n - nx odd
};

inline std::string to_string(AsymptoticCase c) {
    switch (c) {
        case AsymptoticCase::even_gap: return "even";
        case AsymptoticCase::odd_gap: return "odd";
        case AsymptoticCase::integer_even_gap: return "integer-even";
        case AsymptoticCase::integer_odd_gap: return "integer-odd";
    }
    return "?";
}

struct AsymptoticBounds {
    BoundsPair bounds;  // on rho; target is h at the peak
    int t = 0;
    int m = 0;
    AsymptoticCase which = AsymptoticCase::even_gap;
    Rational limit;     // (1-x)/(1+x)
};

/// Peak-correlation sandwich re-expressed through t = floor(n x).
inline AsymptoticBounds rho_asymptotic_bounds(int n, const Rational& x) {
    if (x <= 0 || x >= 1) throw std::out_of_range("x must lie in (0, 1)");
    Rational nx = x * n;
    BigInt floor_nx = numer(nx) / denom(nx);
    if (floor_nx < 1 || floor_nx > n - 3)
        throw std::out_of_range("t = floor(n x) must satisfy 1 <= t <= n-3");
    const int t = floor_nx.convert_to<int>();
    const bool integral = denom(nx) == 1;
    const bool even = (n - t) % 2 == 0;

    AsymptoticBounds out;
    out.t = t;
    out.m = peak_index(n, t).m;
    out.limit = (1 - x) / (1 + x);
    out.bounds.scale = BoundScale::root;
    out.bounds.target = h_exp(n, out.m, t);
    const Rational inv_n(1, n);
    if (integral) {
        out.which = even ? AsymptoticCase::integer_even_gap : AsymptoticCase::integer_odd_gap;
        if (even) {
            out.bounds.lower = (1 - x) / (1 + x);
            out.bounds.upper = (1 - x + 2 * inv_n) / (1 + x + 2 * inv_n);
        } else {
            out.bounds.lower = (1 - x - inv_n) / (1 + x - inv_n);
            out.bounds.upper = (1 - x + inv_n) / (1 + x + inv_n);
        }
    } else {
        out.which = even ? AsymptoticCase::even_gap : AsymptoticCase::odd_gap;
        if (even) {
            out.bounds.lower = Rational(n - t, n + t);
            out.bounds.upper = Rational(n - t + 2, n + t + 2);
        } else {
            out.bounds.lower = Rational(n - t - 1, n + t - 1);
            out.bounds.upper = Rational(n - t + 1, n + t + 1);
        }
    }
    return out;
}

/// Checks the h(k) sandwich for every k and the peak rho sandwich at one
/// (n, t), recording the contiguous k-range over which the h(k) sandwich holds.
inline VerificationReport verify_bounds(int n, int t) {
    detail::require_bounds_regime(n, t);
    VerificationReport r;
    r.claim_id = "bounds";
    r.parameter_range = "n=" + std::to_string(n) + ",t=" + std::to_string(t);
    int first_hold = 0, last_hold = 0;
    bool contiguous = true;
    for (int k = 1; k <= n - t; ++k) {
        auto b = h_bounds(n, k, t);
        const std::string where = "n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                                  ",t=" + std::to_string(t);
        bool low_ok = b.lower < *b.target;
        bool up_ok = *b.target < b.upper;
        r.check(low_ok, where + " lower<h", b.lower, *b.target);
        r.check(up_ok, where + " h<upper", *b.target, b.upper);
        if (low_ok && up_ok) {
            if (first_hold == 0) first_hold = k;
            else if (last_hold != k - 1) contiguous = false;
            last_hold = k;
        }
    }
    auto peak = rho_peak_bounds(n, t);
    const std::string where = r.parameter_range + ",m=" + std::to_string(peak_index(n, t).m);
    r.check(peak.lower * peak.lower < *peak.target, where + " rho_lower^2<h",
            peak.lower * peak.lower, *peak.target);
    r.check(*peak.target < peak.upper * peak.upper, where + " h<rho_upper^2", *peak.target,
            peak.upper * peak.upper);
    r.note("k_hold_first", std::to_string(first_hold));
    r.note("k_hold_last", std::to_string(last_hold));
    r.note("k_hold_contiguous", contiguous ? "true" : "false");
    return r;
}

}  // namespace ostat
