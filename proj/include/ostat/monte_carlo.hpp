#pragma once

// Seeded Monte Carlo estimate of corr(X_(k), X_(k+t)).
//
// Samples are split into batches of cfg.batch_size replications.  Batch b
// draws from its own std::mt19937_64 seeded with
// seed_seq{seed_lo, seed_hi, b_lo, b_hi}, so any thread count produces the
// same numbers.  Per-batch co-moments are merged in batch order.  The
// standard error is the batch-means estimate sd(rho_b) / sqrt(B).

#include "ostat/dist.hpp"
#include "ostat/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ostat {

struct McConfig {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    std::uint64_t batch_size = 1000;
};

// Below this many samples the standard error is not meaningful.
inline constexpr std::uint64_t kMinMeaningfulSamples = 10000;

struct McEstimate {
    double rho_hat = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t batches = 0;
    bool underpowered = false;  // samples < kMinMeaningfulSamples
};

/// Open-interval uniform pair (u, 1-u), both exact, from 53 random bits.
inline std::pair<double, double> open_unit_pair(std::mt19937_64& engine) {
    const std::uint64_t bits = engine() >> 11;
    constexpr double scale = 0x1p-53;
    const double u = (static_cast<double>(bits) + 0.5) * scale;
    const double u_c = (static_cast<double>((std::uint64_t{1} << 53) - 1 - bits) + 0.5) * scale;
    return {u, u_c};
}

inline std::mt19937_64 batch_engine(std::uint64_t seed, std::uint64_t batch) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(batch >> 32)};
    return std::mt19937_64(seq);
}

// Running co-moments of (x, y).
struct CoMoments {
    double count = 0;
    double mean_x = 0, mean_y = 0;
    double m2_x = 0, m2_y = 0, c_xy = 0;

    void add(double x, double y) {
        count += 1;
        const double dx = x - mean_x;
        mean_x += dx / count;
        const double dy = y - mean_y;
        mean_y += dy / count;
        m2_x += dx * (x - mean_x);
        m2_y += dy * (y - mean_y);
        c_xy += dx * (y - mean_y);
    }

    void merge(const CoMoments& o) {
        if (o.count == 0) return;
        if (count == 0) {
            *this = o;
            return;
        }
        const double total = count + o.count;
        const double dx = o.mean_x - mean_x;
        const double dy = o.mean_y - mean_y;
        const double f = count * o.count / total;
        m2_x += o.m2_x + dx * dx * f;
        m2_y += o.m2_y + dy * dy * f;
        c_xy += o.c_xy + dx * dy * f;
        mean_x += dx * o.count / total;
        mean_y += dy * o.count / total;
        count = total;
    }

    double correlation() const {
        if (!(m2_x > 0) || !(m2_y > 0)) throw std::runtime_error("degenerate variance in Monte Carlo sample");
        return c_xy / std::sqrt(m2_x * m2_y);
    }
};

inline void validate(const McConfig& cfg) {
    if (cfg.samples == 0) throw std::invalid_argument("samples must be positive");
    if (cfg.batch_size == 0) throw std::invalid_argument("batch_size must be positive");
    if ((cfg.samples + cfg.batch_size - 1) / cfg.batch_size < 2)
        throw std::invalid_argument("need at least two batches for a batch-means standard error");
}

/// Draws cfg.samples samples of size n via the quantile transform and returns
/// the sample correlation of (X_(k), X_(k+t)) with its batch-means stderr.
inline McEstimate mc_rho(const DistSpec& d, int n, int k, int t, const McConfig& cfg, unsigned jobs = 1) {
    if (k < 1 || t < 1 || k + t > n) throw std::out_of_range("mc_rho needs k >= 1, t >= 1, k + t <= n");
    validate(cfg);
    const std::uint64_t batches = (cfg.samples + cfg.batch_size - 1) / cfg.batch_size;

    auto run_batch = [&](std::size_t b) {
        auto engine = batch_engine(cfg.seed, b);
        const std::uint64_t first = b * cfg.batch_size;
        const std::uint64_t count = std::min(cfg.batch_size, cfg.samples - first);
        std::vector<double> draw(static_cast<std::size_t>(n));
        CoMoments acc;
        for (std::uint64_t r = 0; r < count; ++r) {
            for (auto& x : draw) {
                auto [u, u_c] = open_unit_pair(engine);
                x = d.quantile_at(u, u_c);
            }
            std::sort(draw.begin(), draw.end());
            acc.add(draw[static_cast<std::size_t>(k - 1)], draw[static_cast<std::size_t>(k + t - 1)]);
        }
        return acc;
    };
    const auto per_batch = parallel_map(static_cast<std::size_t>(batches), jobs, run_batch);

    CoMoments pooled;
    std::vector<double> batch_rho;
    batch_rho.reserve(per_batch.size());
    for (const auto& acc : per_batch) {
        pooled.merge(acc);
        batch_rho.push_back(acc.correlation());
    }
    double mean = 0;
    for (double r : batch_rho) mean += r;
    mean /= static_cast<double>(batch_rho.size());
    double ss = 0;
    for (double r : batch_rho) ss += (r - mean) * (r - mean);
    const double sd = std::sqrt(ss / static_cast<double>(batch_rho.size() - 1));

    McEstimate out;
    out.rho_hat = pooled.correlation();
    out.std_error = sd / std::sqrt(static_cast<double>(batch_rho.size()));
    out.samples = cfg.samples;
    out.seed = cfg.seed;
    out.batches = batches;
    out.underpowered = cfg.samples < kMinMeaningfulSamples;
    if (!(out.std_error > 0)) throw std::runtime_error("Monte Carlo standard error is zero");
    return out;
}

}  // namespace ostat
