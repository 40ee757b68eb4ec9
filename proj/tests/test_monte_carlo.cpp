#include <catch2/catch_amalgamated.hpp>

#include "ostat/exact.hpp"
#include "ostat/monte_carlo.hpp"

#include <cmath>

namespace {

double exact_rho(int n, int k, int t) { return std::sqrt(ostat::to_double(ostat::h_exp(n, k, t))); }

}  // namespace

TEST_CASE("open_unit_pair stays inside (0, 1) with exact complements", "[mc]") {
    auto engine = ostat::batch_engine(1, 0);
    for (int i = 0; i < 100000; ++i) {
        auto [u, uc] = ostat::open_unit_pair(engine);
        REQUIRE(u > 0);
        REQUIRE(u < 1);
        REQUIRE(u + uc == 1.0);
    }
}

TEST_CASE("co-moment merge equals a single pass", "[mc]") {
    ostat::CoMoments whole, left, right;
    auto engine = ostat::batch_engine(3, 3);
    for (int i = 0; i < 1000; ++i) {
        auto [x, xc] = ostat::open_unit_pair(engine);
        auto [y, yc] = ostat::open_unit_pair(engine);
        const double yy = x + 0.5 * y;
        whole.add(x, yy);
        (i < 400 ? left : right).add(x, yy);
    }
    left.merge(right);
    CHECK(left.correlation() == Catch::Approx(whole.correlation()).epsilon(1e-12));
    CHECK(left.count == whole.count);
}

TEST_CASE("mc_rho agrees with the exact exponential value", "[mc]") {
    auto e = ostat::exponential_dist();
    ostat::McConfig cfg{1000000, 11, 10000};
    auto est = ostat::mc_rho(e, 5, 2, 1, cfg, 2);
    const double rho = exact_rho(5, 2, 1);
    CHECK(rho == Catch::Approx(0.6927).margin(1e-4));
    CHECK(std::fabs(est.rho_hat - rho) < 3 * est.std_error);
    CHECK(est.batches == 100);
    CHECK_FALSE(est.underpowered);
}

TEST_CASE("mc_rho for uniform n = 2", "[mc]") {
    auto est = ostat::mc_rho(ostat::uniform_dist(), 2, 1, 1, {200000, 5, 2000});
    CHECK(std::fabs(est.rho_hat - 0.5) < 3 * est.std_error);
}

TEST_CASE("negated samples reflect onto exponential indices", "[mc]") {
    auto neg = ostat::negated_exponential_dist();
    auto est = ostat::mc_rho(neg, 9, 2, 3, {200000, 99, 2000});
    CHECK(std::fabs(est.rho_hat - exact_rho(9, 5, 3)) < 3 * est.std_error);
}

TEST_CASE("results do not depend on the thread count", "[mc]") {
    auto e = ostat::exponential_dist();
    ostat::McConfig cfg{50000, 42, 1000};
    auto serial = ostat::mc_rho(e, 6, 2, 2, cfg, 1);
    auto threaded = ostat::mc_rho(e, 6, 2, 2, cfg, 4);
    CHECK(serial.rho_hat == threaded.rho_hat);
    CHECK(serial.std_error == threaded.std_error);
    auto again = ostat::mc_rho(e, 6, 2, 2, cfg, 3);
    CHECK(again.rho_hat == serial.rho_hat);
    auto other_seed = ostat::mc_rho(e, 6, 2, 2, {50000, 43, 1000}, 1);
    CHECK(other_seed.rho_hat != serial.rho_hat);
}

TEST_CASE("correlation is scale free", "[mc]") {
    ostat::McConfig cfg{200000, 17, 2000};
    auto unit = ostat::mc_rho(ostat::exponential_dist(1.0), 7, 3, 2, cfg);
    auto scaled = ostat::mc_rho(ostat::exponential_dist(2.5), 7, 3, 2, {200000, 18, 2000});
    const double combined = std::sqrt(unit.std_error * unit.std_error + scaled.std_error * scaled.std_error);
    CHECK(std::fabs(unit.rho_hat - scaled.rho_hat) < 3 * combined);
    // Same stream, different rate: every sample is rescaled, so rho is unchanged.
    auto same_stream = ostat::mc_rho(ostat::exponential_dist(2.5), 7, 3, 2, cfg);
    CHECK(same_stream.rho_hat == Catch::Approx(unit.rho_hat).epsilon(1e-12));
}

TEST_CASE("config validation", "[mc]") {
    auto e = ostat::exponential_dist();
    CHECK_THROWS_AS(ostat::mc_rho(e, 5, 2, 1, {0, 1, 10}), std::invalid_argument);
    CHECK_THROWS_AS(ostat::mc_rho(e, 5, 2, 1, {100, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ostat::mc_rho(e, 5, 2, 1, {100, 1, 100}), std::invalid_argument);
    CHECK_THROWS_AS(ostat::mc_rho(e, 5, 4, 2, {100, 1, 10}), std::out_of_range);
    auto small = ostat::mc_rho(e, 5, 2, 1, {1000, 1, 100});
    CHECK(small.underpowered);
    CHECK(small.std_error > 0);
}
