#include <catch2/catch_amalgamated.hpp>

#include "ostat/exact.hpp"
#include "support/oracles.hpp"

using ostat::Rational;

TEST_CASE("harmonic_sum", "[exact]") {
    CHECK(ostat::harmonic_sum(1, 1, 1) == 1);
    CHECK(ostat::harmonic_sum(1, 2, 2) == Rational(5, 4));
    CHECK(ostat::harmonic_sum(4, 5, 2) == Rational(41, 400));
    CHECK(ostat::harmonic_sum(1, 5, 1) == Rational(137, 60));
    CHECK_THROWS_AS(ostat::harmonic_sum(0, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(ostat::harmonic_sum(3, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(ostat::harmonic_sum(1, 2, 3), std::invalid_argument);
}

TEST_CASE("exponential order-statistic moments", "[exact]") {
    auto m = ostat::exp_os_moments(5, 1);
    CHECK(m.mean == Rational(1, 5));
    CHECK(m.variance == Rational(1, 25));

    m = ostat::exp_os_moments(2, 2);
    CHECK(m.mean == Rational(3, 2));
    CHECK(m.variance == Rational(5, 4));

    CHECK(ostat::exp_os_moments(5, 5).mean == Rational(137, 60));

    CHECK_THROWS_AS(ostat::exp_os_moments(1, 1), std::out_of_range);
    CHECK_THROWS_AS(ostat::exp_os_moments(5, 0), std::out_of_range);
    CHECK_THROWS_AS(ostat::exp_os_moments(5, 6), std::out_of_range);
}

TEST_CASE("spacing moments agree with the density-expansion oracle", "[exact][oracle]") {
    for (int n = 2; n <= 14; ++n)
        for (int k = 1; k <= n; ++k) {
            auto m = ostat::exp_os_moments(n, k);
            INFO("n=" << n << " k=" << k);
            REQUIRE(m.mean == oracle::exp_raw_moment(n, k, 1));
            REQUIRE(m.variance == oracle::exp_variance(n, k));
        }
}

TEST_CASE("exp_cov equals the lower variance", "[exact]") {
    CHECK(ostat::exp_cov(5, 1, 1) == Rational(1, 25));
    CHECK(ostat::exp_cov(5, 2, 3) == Rational(41, 400));
    for (int n = 2; n <= 20; ++n)
        for (int t = 1; t < n; ++t)
            for (int k = 1; k + t <= n; ++k) REQUIRE(ostat::exp_cov(n, k, t) == ostat::exp_os_moments(n, k).variance);
    CHECK_THROWS_AS(ostat::exp_cov(5, 3, 3), std::out_of_range);
    CHECK_THROWS_AS(ostat::exp_cov(5, 1, 0), std::out_of_range);
}

TEST_CASE("h_exp values", "[exact]") {
    CHECK(ostat::h_exp(5, 1, 1) == Rational(16, 41));
    CHECK(ostat::to_decimal(ostat::h_exp(5, 1, 1), 3) == "0.390");
    CHECK(ostat::to_decimal(ostat::h_exp(6, 3, 1), 3) == "0.540");
    CHECK(ostat::to_decimal(ostat::h_exp(8, 4, 3), 3) == "0.197");
    CHECK_THROWS_AS(ostat::h_exp(5, 0, 1), std::out_of_range);
}

TEST_CASE("h_uniform values and Beta-covariance oracle", "[exact][oracle]") {
    CHECK(ostat::h_uniform(2, 1, 1) == Rational(1, 4));
    CHECK(ostat::h_uniform(6, 2, 2) == Rational(3, 10));
    CHECK(ostat::h_uniform(6, 3, 2) == Rational(3, 10));
    for (int n = 3; n <= 40; ++n) CHECK(ostat::h_uniform(n, 1, n - 2) == Rational(2, n * (n - 1)));
    for (int n = 2; n <= 25; ++n)
        for (int t = 1; t < n; ++t)
            for (int k = 1; k + t <= n; ++k) REQUIRE(ostat::h_uniform(n, k, t) == oracle::uniform_h(n, k, k + t));
}

TEST_CASE("h lies strictly inside (0, 1) and h_exp falls in t", "[exact][property]") {
    for (int n = 2; n <= 30; ++n)
        for (int k = 1; k < n; ++k) {
            Rational previous = 1;
            for (int t = 1; k + t <= n; ++t) {
                Rational he = ostat::h_exp(n, k, t);
                Rational hu = ostat::h_uniform(n, k, t);
                REQUIRE(he > 0);
                REQUIRE(he < 1);
                REQUIRE(hu > 0);
                REQUIRE(hu < 1);
                REQUIRE(he < previous);
                previous = he;
            }
        }
}

TEST_CASE("corr_table", "[exact]") {
    auto table = ostat::corr_table(5, 1, ostat::ExactFamily::exponential);
    REQUIRE(table.values.size() == 4);
    std::vector<std::string> shown;
    for (const auto& e : table.values) shown.push_back(ostat::to_decimal(e.h, 3));
    CHECK(shown == std::vector<std::string>{"0.390", "0.480", "0.461", "0.317"});
    CHECK(table.peak_k == 2);
    CHECK(table.distribution_tag == "exponential");

    table = ostat::corr_table(9, 4, ostat::ExactFamily::exponential);
    shown.clear();
    for (const auto& e : table.values) shown.push_back(ostat::to_decimal(e.h, 3));
    CHECK(shown == std::vector<std::string>{"0.106", "0.157", "0.167", "0.141", "0.075"});
    CHECK(table.peak_k == 3);

    table = ostat::corr_table(5, 4, ostat::ExactFamily::exponential);
    REQUIRE(table.values.size() == 1);
    CHECK(ostat::to_decimal(table.values[0].h, 3) == "0.027");

    // Uniform tie at k = 2, 3: the first maximizer is reported.
    table = ostat::corr_table(6, 2, ostat::ExactFamily::uniform);
    CHECK(table.values[1].h == table.values[2].h);
    CHECK(table.peak_k == 2);

    for (int k = 1; k <= 7; ++k)
        CHECK(ostat::corr_table(10, 3, ostat::ExactFamily::exponential).values[k - 1].h == ostat::h_exp(10, k, 3));

    CHECK_THROWS_AS(ostat::corr_table(5, 5, ostat::ExactFamily::exponential), std::out_of_range);
    CHECK_THROWS_AS(ostat::corr_table(5, 0, ostat::ExactFamily::uniform), std::out_of_range);
}

TEST_CASE("binomial identities", "[exact]") {
    auto one = ostat::identity_one(1);
    CHECK(one.passed());
    CHECK(one.details[0].second == "1");

    one = ostat::identity_one(2);
    CHECK(one.passed());
    CHECK(one.details[0].second == "7/4");

    auto two = ostat::identity_two(2);
    CHECK(two.passed());
    CHECK(two.details[0].second == "3/2");

    for (int n = 1; n <= 50; ++n) {
        REQUIRE(ostat::identity_one(n).passed());
        REQUIRE(ostat::identity_two(n).passed());
    }
    CHECK_THROWS_AS(ostat::identity_one(0), std::invalid_argument);
}

TEST_CASE("binomial coefficients", "[exact]") {
    for (int n = 0; n <= 40; ++n)
        for (int r = 0; r <= n; ++r) REQUIRE(ostat::binomial(n, r) == oracle::choose(n, r));
    CHECK(ostat::binomial(5, 7) == 0);
}
