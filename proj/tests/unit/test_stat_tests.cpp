#include "tsa/stat_tests.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tsa/error.hpp"
#include "tsa/special.hpp"

using tsa::PValue;

TEST_CASE("chi-square tail") {
    CHECK(tsa::chi_square_sf(0.0, 3) == 1.0);
    CHECK(tsa::chi_square_sf(2.0 * std::numbers::ln2, 2) == doctest::Approx(0.5).epsilon(1e-14));
    for (double x : {0.01, 0.5, 1.0, 5.99, 13.8, 40.0}) {
        CHECK(std::abs(tsa::chi_square_sf(x, 2) - std::exp(-x / 2.0)) < 1e-12);
    }
    // dof = 1: P(X >= x) = erfc(sqrt(x/2)).
    const double p = tsa::chi_square_sf(3.841, 1);
    CHECK(p == doctest::Approx(std::erfc(std::sqrt(3.841 / 2.0))).epsilon(1e-12));
    CHECK(std::abs(p - 0.05) < 1e-4);
    CHECK_THROWS_AS((void)tsa::chi_square_sf(-0.1, 2), std::invalid_argument);
}

TEST_CASE("Jarque-Bera hand-computed moments") {
    const std::vector<double> x{1, 2, 3, 4, 5};
    const auto r = tsa::jarque_bera(x);
    // m2 = 2, m4 = 6.8, g2 = 1.7, g1 = 0.
    CHECK(r.nuisance.at("skewness") == doctest::Approx(0.0));
    CHECK(r.nuisance.at("kurtosis") == doctest::Approx(1.7).epsilon(1e-14));
    CHECK(r.statistic == doctest::Approx(5.0 / 6.0 * (1.3 * 1.3 / 4.0)).epsilon(1e-14));
    CHECK(r.statistic == doctest::Approx(0.35208).epsilon(1e-4));
    CHECK(r.p_value.value == doctest::Approx(std::exp(-0.352083333333 / 2.0)).epsilon(1e-10));
    CHECK(r.p_value.value == doctest::Approx(0.8386).epsilon(1e-4));
    CHECK(r.sample_size == 5);
}

TEST_CASE("Jarque-Bera is zero for a symmetric mesokurtic sample") {
    // Symmetric, with c^2 = 3 + 2 sqrt(2) giving m4 = 3 m2^2 exactly.
    const double c = 1.0 + std::numbers::sqrt2;
    const std::vector<double> x{-c, -1, 0, 0, 0, 0, 1, c};
    const auto r = tsa::jarque_bera(x);
    CHECK(r.statistic < 1e-12);
    CHECK(r.p_value.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Jarque-Bera errors") {
    CHECK_THROWS_AS((void)tsa::jarque_bera(std::vector<double>{1, 2, 3}), tsa::InsufficientData);
    CHECK_THROWS_AS((void)tsa::jarque_bera(std::vector<double>(10, 2.0)), tsa::ZeroVariance);
}

TEST_CASE("Shapiro-Wilk reproduces the AS R94 published example") {
    const std::vector<double> x{0.139, 0.157, 0.175, 0.256, 0.344, 0.413, 0.503, 0.577, 0.614,
                                0.655, 0.954, 1.392, 1.557, 1.648, 1.690, 1.994, 2.174, 2.206,
                                3.245, 3.510, 3.571, 4.354, 4.980, 6.084, 8.351};
    const auto r = tsa::shapiro_wilk(x);
    CHECK(r.statistic == doctest::Approx(0.83467).epsilon(2e-5));
    CHECK(r.p_value.value == doctest::Approx(0.000914).epsilon(2e-3));
}

TEST_CASE("Shapiro-Wilk on normal scores and an outlier") {
    const std::size_t n = 20;
    std::vector<double> scores(n);
    for (std::size_t i = 1; i <= n; ++i) {
        scores[i - 1] = tsa::special::normal_quantile((i - 0.375) / (n + 0.25));
    }
    const auto good = tsa::shapiro_wilk(scores);
    CHECK(good.statistic >= 0.99);
    CHECK(good.statistic <= 1.0);

    std::vector<double> spike(n, 0.0);
    spike.back() = 1.0;
    CHECK(tsa::shapiro_wilk(spike).p_value.value < 0.01);
}

TEST_CASE("Shapiro-Wilk small samples and errors") {
    // N = 3 uses the exact distribution; equally spaced points give W = 1.
    const auto r3 = tsa::shapiro_wilk(std::vector<double>{1, 2, 3});
    CHECK(r3.statistic == doctest::Approx(1.0));
    CHECK(r3.p_value.value == doctest::Approx(1.0).epsilon(1e-6));
    const auto r5 = tsa::shapiro_wilk(std::vector<double>{1, 2, 3, 4, 20});
    CHECK(r5.statistic < 0.8);
    CHECK_THROWS_AS((void)tsa::shapiro_wilk(std::vector<double>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS((void)tsa::shapiro_wilk(std::vector<double>(5001, 1.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)tsa::shapiro_wilk(std::vector<double>(8, 3.0)), tsa::ZeroVariance);
}

TEST_CASE("KPSS statistic by hand") {
    // Partial sums 1, 0, 1, 0 and s^2 = 1 give eta = 2/16.
    CHECK(tsa::kpss_statistic(std::vector<double>{1, -1, 1, -1}, 0) ==
          doctest::Approx(0.125).epsilon(1e-15));
    std::vector<double> alt(10);
    for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = i % 2 ? -1.0 : 1.0;
    const auto r = tsa::kpss_level(alt, 0);
    CHECK(r.statistic == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(r.p_value.censoring == PValue::Censoring::above_threshold);
    CHECK(r.nuisance.at("truncation_lag") == 0.0);
}

TEST_CASE("KPSS p-value interpolation and lag rule") {
    CHECK(tsa::kpss_auto_lag(64) == 3);
    CHECK(tsa::kpss_auto_lag(100) == 4);
    CHECK(tsa::kpss_auto_lag(500) == 5);

    // A trending series rejects strongly.
    std::vector<double> trend(50);
    for (std::size_t i = 0; i < trend.size(); ++i) trend[i] = static_cast<double>(i);
    const auto r = tsa::kpss_level(trend);
    CHECK(r.statistic > 0.739);
    CHECK(r.p_value.censoring == PValue::Censoring::below_threshold);
    CHECK(*r.p_value.threshold == 0.01);
    CHECK_THROWS_AS((void)tsa::kpss_level(std::vector<double>(9, 1.0)), tsa::InsufficientData);
    CHECK_THROWS_AS((void)tsa::kpss_level(trend, 50), std::invalid_argument);
}

TEST_CASE("KPSS interior p-values interpolate the table") {
    // Persistent AR(1) paths land inside the table often enough.
    std::mt19937_64 gen(77);
    int interior = 0;
    for (int rep = 0; rep < 400 && interior < 20; ++rep) {
        auto e = oracle::normal_sample(gen, 60);
        for (std::size_t i = 1; i < e.size(); ++i) e[i] += 0.9 * e[i - 1];
        const auto r = tsa::kpss_level(e);
        if (r.p_value.censoring != PValue::Censoring::exact) continue;
        ++interior;
        const double eta = r.statistic;
        double expected = 0.0;
        if (eta <= 0.463) expected = 0.10 + (eta - 0.347) / (0.463 - 0.347) * (0.05 - 0.10);
        else if (eta <= 0.574) expected = 0.05 + (eta - 0.463) / (0.574 - 0.463) * (0.025 - 0.05);
        else expected = 0.025 + (eta - 0.574) / (0.739 - 0.574) * (0.01 - 0.025);
        CHECK(r.p_value.value == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(interior > 0);
}

TEST_CASE("tests are location and scale invariant") {
    std::mt19937_64 gen(99);
    for (int rep = 0; rep < 50; ++rep) {
        const auto x = oracle::normal_sample(gen, 67);
        for (double a : {-2.5, 0.01, 1000.0}) {
            std::vector<double> y(x);
            for (double& v : y) v = a * v + 12345.0;
            CHECK(tsa::jarque_bera(y).statistic ==
                  doctest::Approx(tsa::jarque_bera(x).statistic).epsilon(1e-8));
            CHECK(tsa::shapiro_wilk(y).statistic ==
                  doctest::Approx(tsa::shapiro_wilk(x).statistic).epsilon(1e-8));
            CHECK(tsa::kpss_level(y).statistic ==
                  doctest::Approx(tsa::kpss_level(x).statistic).epsilon(1e-8));
        }
    }
}

TEST_CASE("statistic ranges") {
    std::mt19937_64 gen(1);
    for (int rep = 0; rep < 100; ++rep) {
        const auto x = oracle::normal_sample(gen, 10 + rep);
        CHECK(tsa::jarque_bera(x).statistic >= 0.0);
        const double w = tsa::shapiro_wilk(x).statistic;
        CHECK(w > 0.0);
        CHECK(w <= 1.0);
        CHECK(tsa::kpss_level(x).statistic > 0.0);
    }
}

TEST_CASE("empirical size under the null") {
    std::mt19937_64 gen(20200816);
    const int reps = 2000;
    int jb_reject = 0;
    int sw_reject = 0;
    for (int rep = 0; rep < reps; ++rep) {
        const auto x = oracle::normal_sample(gen, 67);
        if (tsa::jarque_bera(x).p_value.value < 0.05) ++jb_reject;
        if (tsa::shapiro_wilk(x).p_value.value < 0.05) ++sw_reject;
    }
    MESSAGE("JB size " << jb_reject / double(reps) << ", SW size " << sw_reject / double(reps));
    CHECK(std::abs(jb_reject / double(reps) - 0.05) <= 0.015);
    CHECK(std::abs(sw_reject / double(reps) - 0.05) <= 0.015);

    int kpss_reject = 0;
    std::normal_distribution<double> z;
    for (int rep = 0; rep < reps; ++rep) {
        std::vector<double> x(200);
        double prev = z(gen) / std::sqrt(1.0 - 0.25);
        for (double& v : x) {
            prev = 0.5 * prev + z(gen);
            v = prev;
        }
        if (tsa::kpss_level(x).statistic > 0.463) ++kpss_reject;
    }
    MESSAGE("KPSS size on AR(1) 0.5: " << kpss_reject / double(reps));
    CHECK(kpss_reject / double(reps) <= 0.10);
}
