#pragma once

// Continuous distributions described by pdf, cdf and quantile, plus a
// name-keyed registry of the built-in ones.

#include "ostat/verification_report.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ostat {

using RealFn = std::function<double(double)>;

enum class DensityShape { increasing, decreasing, constant, other };

inline std::string to_string(DensityShape s) {
    switch (s) {
        case DensityShape::increasing: return "increasing";
        case DensityShape::decreasing: return "decreasing";
        case DensityShape::constant: return "constant";
        case DensityShape::other: return "other";
    }
    return "?";
}

// Which exact closed form, if any, gives this distribution's correlations.
enum class ExactReference { none, exponential, uniform, negated_exponential };

struct DistSpec {
    std::string name;
    RealFn pdf;
    RealFn cdf;
    RealFn quantile;
    // Q(1 - q), for accuracy in the upper tail.  Optional.
    RealFn upper_quantile;
    double lower = 0.0;
    double upper = 1.0;
    DensityShape shape = DensityShape::other;
    ExactReference reference = ExactReference::none;
    // Interior points u in (0, 1) where the quantile is not smooth.  Quadrature
    // splits there; a kink left unlisted costs accuracy.
    std::vector<double> kinks;

    // Quantile at u, given both u and 1 - u so the closer endpoint can be used.
    double quantile_at(double u, double one_minus_u) const {
        if (upper_quantile && one_minus_u < u) return upper_quantile(one_minus_u);
        return quantile(u);
    }
};

inline DistSpec exponential_dist(double rate = 1.0) {
    if (!(rate > 0)) throw std::invalid_argument("exponential rate must be positive");
    DistSpec d;
    d.name = rate == 1.0 ? "exp" : "exp(rate=" + std::to_string(rate) + ")";
    d.pdf = [rate](double x) { return x < 0 ? 0.0 : rate * std::exp(-rate * x); };
    d.cdf = [rate](double x) { return x < 0 ? 0.0 : -std::expm1(-rate * x); };
    d.quantile = [rate](double u) { return -std::log1p(-u) / rate; };
    d.upper_quantile = [rate](double q) { return -std::log(q) / rate; };
    d.lower = 0.0;
    d.upper = std::numeric_limits<double>::infinity();
    d.shape = DensityShape::decreasing;
    d.reference = ExactReference::exponential;
    return d;
}

inline DistSpec uniform_dist() {
    DistSpec d;
    d.name = "uniform";
    d.pdf = [](double x) { return x < 0 || x > 1 ? 0.0 : 1.0; };
    d.cdf = [](double x) { return x < 0 ? 0.0 : x > 1 ? 1.0 : x; };
    d.quantile = [](double u) { return u; };
    d.upper_quantile = [](double q) { return 1.0 - q; };
    d.shape = DensityShape::constant;
    d.reference = ExactReference::uniform;
    return d;
}

// f(x) = 2x on [0, 1].
inline DistSpec tri_increasing_dist() {
    DistSpec d;
    d.name = "tri-inc";
    d.pdf = [](double x) { return x < 0 || x > 1 ? 0.0 : 2 * x; };
    d.cdf = [](double x) { return x < 0 ? 0.0 : x > 1 ? 1.0 : x * x; };
    d.quantile = [](double u) { return std::sqrt(u); };
    d.shape = DensityShape::increasing;
    return d;
}

// f(x) = 2(1 - x) on [0, 1].
inline DistSpec tri_decreasing_dist() {
    DistSpec d;
    d.name = "tri-dec";
    d.pdf = [](double x) { return x < 0 || x > 1 ? 0.0 : 2 * (1 - x); };
    d.cdf = [](double x) { return x < 0 ? 0.0 : x > 1 ? 1.0 : 1 - (1 - x) * (1 - x); };
    d.quantile = [](double u) { return 1 - std::sqrt(1 - u); };
    d.upper_quantile = [](double q) { return 1 - std::sqrt(q); };
    d.shape = DensityShape::decreasing;
    return d;
}

// Symmetric triangular density on [0, 1] with its mode at 1/2.
inline DistSpec tri_peak_dist() {
    DistSpec d;
    d.name = "tri-peak";
    d.pdf = [](double x) { return x < 0 || x > 1 ? 0.0 : x <= 0.5 ? 4 * x : 4 * (1 - x); };
    d.cdf = [](double x) {
        if (x <= 0) return 0.0;
        if (x >= 1) return 1.0;
        return x <= 0.5 ? 2 * x * x : 1 - 2 * (1 - x) * (1 - x);
    };
    d.quantile = [](double u) { return u <= 0.5 ? std::sqrt(u / 2) : 1 - std::sqrt((1 - u) / 2); };
    d.upper_quantile = [](double q) { return q >= 0.5 ? std::sqrt((1 - q) / 2) : 1 - std::sqrt(q / 2); };
    d.shape = DensityShape::other;
    d.kinks = {0.5};
    return d;
}

// Y = -X with X ~ Exp(1): f(y) = e^y on y < 0.
inline DistSpec negated_exponential_dist() {
    DistSpec d;
    d.name = "negexp";
    d.pdf = [](double y) { return y > 0 ? 0.0 : std::exp(y); };
    d.cdf = [](double y) { return y > 0 ? 1.0 : std::exp(y); };
    d.quantile = [](double u) { return std::log(u); };
    d.upper_quantile = [](double q) { return std::log1p(-q); };
    d.lower = -std::numeric_limits<double>::infinity();
    d.upper = 0.0;
    d.shape = DensityShape::increasing;
    d.reference = ExactReference::negated_exponential;
    return d;
}

/// Builds a distribution from a (cdf, quantile) pair.  The pdf is taken by
/// central differences of the cdf.
inline DistSpec custom_dist(std::string name, RealFn cdf, RealFn quantile, double lower, double upper,
                            DensityShape shape = DensityShape::other) {
    DistSpec d;
    d.name = std::move(name);
    d.cdf = cdf;
    d.quantile = std::move(quantile);
    d.pdf = [cdf](double x) {
        double h = 1e-6 * std::max(1.0, std::fabs(x));
        return std::max(0.0, (cdf(x + h) - cdf(x - h)) / (2 * h));
    };
    d.lower = lower;
    d.upper = upper;
    d.shape = shape;
    return d;
}

/// Round-trip |cdf(quantile(u)) - u| < tolerance on a u-grid, plus monotone
/// cdf and non-negative pdf along the same quantile points.
inline VerificationReport validate_dist(const DistSpec& d, double tolerance = 1e-8) {
    VerificationReport r;
    r.claim_id = "dist-validation";
    r.parameter_range = d.name;
    if (!d.cdf || !d.quantile || !d.pdf) {
        r.check(false, "missing pdf, cdf or quantile", Rational(0), Rational(1));
        return r;
    }
    std::vector<double> grid;
    for (double u : {1e-9, 1e-6, 1e-3}) grid.push_back(u);
    for (int i = 1; i < 200; ++i) grid.push_back(i / 200.0);
    for (double u : {1 - 1e-3, 1 - 1e-6}) grid.push_back(u);
    double prev_x = -std::numeric_limits<double>::infinity();
    double prev_f = 0.0;
    for (double u : grid) {
        double x = d.quantile(u);
        double back = d.cdf(x);
        const std::string where = d.name + ",u=" + std::to_string(u);
        r.check(std::isfinite(x) && std::fabs(back - u) < tolerance, where + " round-trip",
                std::isfinite(back) ? Rational(back) : Rational(-1), Rational(u));
        r.check(x >= prev_x && back >= prev_f, where + " monotone", Rational(back), Rational(prev_f));
        double f = d.pdf(x);
        r.check(f >= 0, where + " pdf>=0", std::isfinite(f) ? Rational(f) : Rational(-1), Rational(0));
        prev_x = x;
        prev_f = back;
    }
    return r;
}

class DistRegistry {
public:
    DistRegistry() {
        for (auto d : {exponential_dist(), uniform_dist(), tri_increasing_dist(), tri_decreasing_dist(),
                       tri_peak_dist(), negated_exponential_dist()})
            dists_.emplace(d.name, d);
    }

    /// Registers a distribution after validation; throws if validation fails
    /// or the name is taken.
    void add(const DistSpec& d) {
        if (dists_.count(d.name)) throw std::invalid_argument("distribution already registered: " + d.name);
        auto report = validate_dist(d);
        if (!report.passed())
            throw std::invalid_argument("distribution " + d.name + " failed validation at " +
                                        report.failures.front().parameters);
        dists_.emplace(d.name, d);
    }

    const DistSpec& get(const std::string& name) const {
        auto it = dists_.find(name);
        if (it == dists_.end()) throw std::out_of_range("unknown distribution: " + name);
        return it->second;
    }

    bool contains(const std::string& name) const { return dists_.count(name) != 0; }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& [name, d] : dists_) out.push_back(name);
        return out;
    }

private:
    std::map<std::string, DistSpec> dists_;
};

}  // namespace ostat
