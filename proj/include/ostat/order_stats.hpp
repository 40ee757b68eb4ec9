#pragma once

// Moments and correlations of order statistics of an arbitrary continuous
// distribution by quadrature in probability space.
//
// X_(j) = Q(U_(j)) where U_(j) ~ Beta(j, n-j+1), and (U_(j), U_(l)) has
// density n!/((j-1)!(l-j-1)!(n-l)!) u^{j-1} (v-u)^{l-j-1} (1-v)^{n-l} on
// 0 < u < v < 1.  The triangle is mapped to the unit square by u = v s:
//
//   Cov = c * int_0^1 (Q(v)-mu_l) v^{l-1} (1-v)^{n-l}
//               * int_0^1 (Q(vs)-mu_j) s^{j-1} (1-s)^{l-j-1} ds dv.
//
// Integrals use tanh-sinh quadrature, which tolerates the endpoint
// singularities of unbounded quantiles.  Centered integrands avoid the
// cancellation of E[XY] - E[X]E[Y].

#include "ostat/dist.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ostat {

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved, double requested)
        : std::runtime_error(message(what, achieved, requested)),
          achieved_(achieved), requested_(requested) {}
    double achieved() const { return achieved_; }
    double requested() const { return requested_; }

private:
    static std::string message(const std::string& what, double achieved, double requested) {
        std::ostringstream s;
        s.precision(2);
        s << std::scientific << what << ": achieved relative error " << achieved << ", requested " << requested;
        return s.str();
    }

    double achieved_;
    double requested_;
};

struct MeanVar {
    double mean = 0.0;
    double variance = 0.0;
};

inline constexpr double kMeanVarTolerance = 1e-9;
inline constexpr double kCrossTolerance = 1e-8;

namespace detail {

// Non-const: this Boost release declares integrate() const but defines it without.
inline boost::math::quadrature::tanh_sinh<double>& integrator() {
    thread_local boost::math::quadrature::tanh_sinh<double> instance;
    return instance;
}

// int_a^b f(u, 1-u) du for 0 <= a < b <= 1.  Both arguments stay exact near
// their own endpoint.
template <typename F>
void integrate_piece(F& f, double a, double b, double tolerance, double& value, double& error, double& l1) {
    const double half = (b - a) / 2;
    auto mapped = [&](double z, double zc) {
        double u, one_minus_u;
        if (z < 0) {
            u = a - half * zc;  // zc = -(1 + z)
            one_minus_u = 1 - u;
        } else {
            one_minus_u = (1 - b) + half * zc;  // zc = 1 - z
            u = 1 - one_minus_u;
        }
        double y = f(u, one_minus_u);
        return std::isfinite(y) ? y : 0.0;
    };
    double e = 0, l = 0;
    value += half * integrator().integrate(mapped, tolerance * 0.1, &e, &l);
    error += half * e;
    l1 += half * l;
}

// int_0^1 f(u, 1-u) du, split at the given interior points.
template <typename F>
double integrate_unit(F f, double tolerance, const char* what, const std::vector<double>& breaks = {}) {
    std::vector<double> edges{0.0};
    for (double x : breaks)
        if (x > 0 && x < 1) edges.push_back(x);
    std::sort(edges.begin() + 1, edges.end());
    edges.push_back(1.0);
    double value = 0, error = 0, l1 = 0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i] < edges[i + 1]) integrate_piece(f, edges[i], edges[i + 1], tolerance, value, error, l1);
    if (!std::isfinite(value)) throw QuadratureError(what, INFINITY, tolerance);
    double achieved = l1 > 0 ? error / l1 : 0.0;
    if (achieved > tolerance) throw QuadratureError(what, achieved, tolerance);
    return value;
}

inline double log_factorial(int n) { return std::lgamma(n + 1.0); }

inline void require_index(int n, int j) {
    if (n < 1 || j < 1 || j > n)
        throw std::out_of_range("need 1 <= j <= n; got n=" + std::to_string(n) + ", j=" + std::to_string(j));
}

}  // namespace detail

/// Mean and variance of X_(j) in a sample of n.
inline MeanVar os_mean_var(const DistSpec& d, int n, int j) {
    detail::require_index(n, j);
    const double log_c = detail::log_factorial(n) - detail::log_factorial(j - 1) - detail::log_factorial(n - j);
    auto weight = [&](double u, double w) {
        return std::exp(log_c + (j - 1) * std::log(u) + (n - j) * std::log(w));
    };
    MeanVar out;
    out.mean = detail::integrate_unit(
        [&](double u, double w) { return d.quantile_at(u, w) * weight(u, w); }, kMeanVarTolerance,
        "order-statistic mean", d.kinks);
    const double mu = out.mean;
    out.variance = detail::integrate_unit(
        [&](double u, double w) {
            double c = d.quantile_at(u, w) - mu;
            return c * c * weight(u, w);
        },
        kMeanVarTolerance, "order-statistic variance", d.kinks);
    return out;
}

/// Cov(X_(j), X_(l)) for j < l.
inline double os_covariance(const DistSpec& d, int n, int j, int l) {
    detail::require_index(n, j);
    detail::require_index(n, l);
    if (j >= l) throw std::invalid_argument("os_covariance needs j < l");
    const double mu_j = os_mean_var(d, n, j).mean;
    const double mu_l = os_mean_var(d, n, l).mean;
    const double log_c = detail::log_factorial(n) - detail::log_factorial(j - 1) -
                         detail::log_factorial(l - j - 1) - detail::log_factorial(n - l);
    auto inner = [&](double v, double v_c) {
        std::vector<double> breaks;
        for (double kink : d.kinks)
            if (kink < v) breaks.push_back(kink / v);
        return detail::integrate_unit(
            [&](double s, double s_c) {
                const double u = v * s;
                const double u_c = v_c + v * s_c;
                return (d.quantile_at(u, u_c) - mu_j) * std::pow(s, j - 1) * std::pow(s_c, l - j - 1);
            },
            kCrossTolerance * 1e-2, "order-statistic covariance (inner)", breaks);
    };
    return detail::integrate_unit(
        [&](double v, double v_c) {
            const double w = std::exp(log_c + (l - 1) * std::log(v) + (n - l) * std::log(v_c));
            if (w == 0) return 0.0;
            return (d.quantile_at(v, v_c) - mu_l) * w * inner(v, v_c);
        },
        kCrossTolerance, "order-statistic covariance", d.kinks);
}

/// E[X_(j) X_(l)] for j < l.
inline double os_cross_moment(const DistSpec& d, int n, int j, int l) {
    if (j >= l) throw std::invalid_argument("os_cross_moment needs j < l");
    return os_covariance(d, n, j, l) + os_mean_var(d, n, j).mean * os_mean_var(d, n, l).mean;
}

/// corr(X_(k), X_(k+t)).
inline double rho_generic(const DistSpec& d, int n, int k, int t) {
    if (k < 1 || t < 1 || k + t > n) throw std::out_of_range("rho_generic needs k >= 1, t >= 1, k + t <= n");
    const double cov = os_covariance(d, n, k, k + t);
    const double var_k = os_mean_var(d, n, k).variance;
    const double var_l = os_mean_var(d, n, k + t).variance;
    return cov / std::sqrt(var_k * var_l);
}

}  // namespace ostat
