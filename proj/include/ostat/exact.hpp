#pragma once

// Exact moments, covariances and squared correlations of exponential and
// uniform order statistics.
//
// For a sample of n unit-rate exponentials the spacings
// X_(k) - X_(k-1) are independent exponentials with mean 1/(n+1-k), so
//
//     E X_(k)   = sum_{i=n+1-k}^{n} 1/i
//     Var X_(k) = sum_{i=n+1-k}^{n} 1/i^2
//     Cov(X_(k), X_(k+t)) = Var X_(k).
//
// Everything here is carried out in exact rationals.  Square roots of the
// squared correlation h(k) = rho^2_{k,t} only appear at presentation time.

#include "ostat/rational.hpp"
#include "ostat/verification_report.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ostat {

struct OsMoments {
    int n = 0;
    int k = 0;
    Rational mean;
    Rational variance;
};

enum class ExactFamily { exponential, uniform };

inline std::string to_string(ExactFamily f) {
    return f == ExactFamily::exponential ? "exponential" : "uniform";
}

struct CorrEntry {
    int k = 0;
    Rational h;
};

struct CorrTable {
    int n = 0;
    int t = 0;
    std::vector<CorrEntry> values;  // k = 1 .. n-t, in order
    int peak_k = 0;                 // smallest k attaining the maximum h
    std::string distribution_tag;
};

namespace detail {

inline void require_pair_range(int n, int k, int t) {
    if (k < 1 || t < 1 || k + t > n)
        throw std::out_of_range("need k >= 1, t >= 1, k + t <= n; got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ", t=" + std::to_string(t));
}

}  // namespace detail

/// sum_{i=a}^{b} 1/i^power for power in {1, 2}.
inline Rational harmonic_sum(int a, int b, int power) {
    if (a < 1 || b < a)
        throw std::invalid_argument("harmonic_sum needs 1 <= a <= b; got a=" + std::to_string(a) +
                                    ", b=" + std::to_string(b));
    if (power != 1 && power != 2) throw std::invalid_argument("harmonic_sum power must be 1 or 2");
    Rational sum = 0;
    for (int i = a; i <= b; ++i) {
        BigInt d = i;
        if (power == 2) d *= i;
        sum += Rational(BigInt(1), d);
    }
    return sum;
}

inline OsMoments exp_os_moments(int n, int k) {
    if (n < 2 || k < 1 || k > n)
        throw std::out_of_range("need n >= 2 and 1 <= k <= n; got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
    return {n, k, harmonic_sum(n + 1 - k, n, 1), harmonic_sum(n + 1 - k, n, 2)};
}

/// Cov(X_(k), X_(k+t)) for unit-rate exponentials; equals Var X_(k).
inline Rational exp_cov(int n, int k, int t) {
    detail::require_pair_range(n, k, t);
    return harmonic_sum(n + 1 - k, n, 2);
}

/// Squared correlation of X_(k) and X_(k+t) for exponentials.
inline Rational h_exp(int n, int k, int t) {
    detail::require_pair_range(n, k, t);
    return harmonic_sum(n + 1 - k, n, 2) / harmonic_sum(n + 1 - k - t, n, 2);
}

/// Squared correlation of X_(k) and X_(k+t) for uniforms on [0, 1]:
/// k(n+1-k-t) / ((k+t)(n+1-k)).
inline Rational h_uniform(int n, int k, int t) {
    detail::require_pair_range(n, k, t);
    return Rational(BigInt(k) * (n + 1 - k - t), BigInt(k + t) * (n + 1 - k));
}

// Suffix sums tail[a] = sum_{i=a}^{n} 1/i^2 for a = 1..n+1, so a whole
// table costs n additions instead of n per entry.
inline std::vector<Rational> square_tail_sums(int n) {
    std::vector<Rational> tail(static_cast<std::size_t>(n) + 2, Rational(0));
    for (int i = n; i >= 1; --i)
        tail[static_cast<std::size_t>(i)] =
            tail[static_cast<std::size_t>(i) + 1] + Rational(BigInt(1), BigInt(i) * i);
    return tail;
}

/// h(k) for k = 1..n-t, either family, with the first maximizer recorded.
inline CorrTable corr_table(int n, int t, ExactFamily family) {
    if (n < 2 || t < 1 || t > n - 1)
        throw std::out_of_range("need n >= 2 and 1 <= t <= n-1; got n=" + std::to_string(n) +
                                ", t=" + std::to_string(t));
    CorrTable table;
    table.n = n;
    table.t = t;
    table.distribution_tag = to_string(family);
    table.values.reserve(static_cast<std::size_t>(n - t));
    std::vector<Rational> tail;
    if (family == ExactFamily::exponential) tail = square_tail_sums(n);
    for (int k = 1; k <= n - t; ++k) {
        Rational h = family == ExactFamily::exponential
                         ? tail[static_cast<std::size_t>(n + 1 - k)] /
                               tail[static_cast<std::size_t>(n + 1 - k - t)]
                         : h_uniform(n, k, t);
        table.values.push_back({k, std::move(h)});
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < table.values.size(); ++i)
        if (table.values[i].h > table.values[best].h) best = i;
    table.peak_k = table.values[best].k;
    return table;
}

inline BigInt binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    BigInt c = 1;
    for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
    return c;
}

/// sum_{i=1}^{n} C(n,i) (-1)^{i+1} / i^power, accumulated left to right.
inline Rational alternating_binomial_sum(int n, int power) {
    Rational sum = 0;
    for (int i = 1; i <= n; ++i) {
        BigInt d = power == 2 ? BigInt(i) * i : BigInt(i);
        Rational term(binomial(n, i), d);
        if (i % 2 == 0) term = -term;
        sum += term;
    }
    return sum;
}

/// sum C(n,i)(-1)^{i+1}/i^2 == (sum 1/i^2 + (sum 1/i)^2) / 2.
inline VerificationReport identity_one(int n) {
    if (n < 1) throw std::invalid_argument("identity_one needs n >= 1");
    VerificationReport r;
    r.claim_id = "identity-one";
    r.parameter_range = "n=" + std::to_string(n);
    Rational lhs = alternating_binomial_sum(n, 2);
    Rational h1 = harmonic_sum(1, n, 1);
    Rational rhs = (harmonic_sum(1, n, 2) + h1 * h1) / 2;
    r.check(lhs == rhs, "n=" + std::to_string(n), lhs, rhs);
    r.note("lhs", to_fraction_string(lhs));
    r.note("rhs", to_fraction_string(rhs));
    return r;
}

/// sum C(n,i)(-1)^{i+1}/i == sum 1/i.
inline VerificationReport identity_two(int n) {
    if (n < 1) throw std::invalid_argument("identity_two needs n >= 1");
    VerificationReport r;
    r.claim_id = "identity-two";
    r.parameter_range = "n=" + std::to_string(n);
    Rational lhs = alternating_binomial_sum(n, 1);
    Rational rhs = harmonic_sum(1, n, 1);
    r.check(lhs == rhs, "n=" + std::to_string(n), lhs, rhs);
    r.note("lhs", to_fraction_string(lhs));
    r.note("rhs", to_fraction_string(rhs));
    return r;
}

}  // namespace ostat
