#include "tsa/correlation.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tsa/error.hpp"

TEST_CASE("rho_0 is one and the band is 1.96/sqrt(N)") {
    std::mt19937_64 gen(3);
    const auto x = oracle::normal_sample(gen, 100);
    const auto acf = tsa::sample_acf(x, 10);
    CHECK(acf.autocorrelation[0] == 1.0);
    CHECK(acf.band == doctest::Approx(0.196));
    CHECK(acf.max_lag() == 10);
    CHECK(acf.n == 100);
}

TEST_CASE("alternating series has rho_1 = -(N-1)/N") {
    for (std::size_t n : {4u, 10u, 64u}) {
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = i % 2 ? -1.0 : 1.0;
        const auto acf = tsa::sample_acf(x, 1);
        CHECK(acf.autocorrelation[1] ==
              doctest::Approx(-static_cast<double>(n - 1) / static_cast<double>(n)));
    }
}

TEST_CASE("autocovariance uses divisor N") {
    const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
    const auto g = tsa::sample_autocovariance(x, 2);
    CHECK(g[0] == doctest::Approx(1.25));
    CHECK(g[1] == doctest::Approx((-1.5 * -0.5 + -0.5 * 0.5 + 0.5 * 1.5) / 4.0));
    CHECK(g[2] == doctest::Approx((-1.5 * 0.5 + -0.5 * 1.5) / 4.0));
}

TEST_CASE("random walk sample ACF decays slowly") {
    std::mt19937_64 gen(11);
    auto x = oracle::normal_sample(gen, 1000);
    for (std::size_t i = 1; i < x.size(); ++i) x[i] += x[i - 1];
    const auto acf = tsa::sample_acf(x, 20);
    CHECK(acf.autocorrelation[1] > 0.9);
    for (std::size_t k = 1; k <= 20; ++k)
        CHECK(acf.autocorrelation[k] <= acf.autocorrelation[k - 1] + 1e-12);
    CHECK(acf.autocorrelation[20] > 0.5);
}

TEST_CASE("sample ACF errors") {
    CHECK_THROWS_AS((void)tsa::sample_acf(std::vector<double>(8, 2.0), 2), tsa::ZeroVariance);
    CHECK_THROWS_AS((void)tsa::sample_acf(std::vector<double>{1.0, 2.0, 3.0}, 3),
                    std::invalid_argument);
}

TEST_CASE("autocovariance matrix is positive semidefinite") {
    std::mt19937_64 gen(99);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 20 + 7 * rep;
        auto x = oracle::normal_sample(gen, n);
        if (rep % 2) for (std::size_t i = 1; i < n; ++i) x[i] += 0.8 * x[i - 1];
        const std::size_t m = std::min<std::size_t>(n - 1, 15);
        const auto g = tsa::sample_autocovariance(x, m);
        std::vector<std::vector<double>> toeplitz(m + 1, std::vector<double>(m + 1));
        for (std::size_t i = 0; i <= m; ++i)
            for (std::size_t j = 0; j <= m; ++j) toeplitz[i][j] = g[i > j ? i - j : j - i];
        for (double ev : oracle::symmetric_eigenvalues(toeplitz)) CHECK(ev >= -1e-10 * g[0]);
    }
}

TEST_CASE("sample ACF is affine invariant") {
    std::mt19937_64 gen(5);
    const auto x = oracle::normal_sample(gen, 80);
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = 3.5 * x[i] - 120.0;
    const auto a = tsa::sample_acf(x, 12);
    const auto b = tsa::sample_acf(y, 12);
    for (std::size_t k = 0; k <= 12; ++k)
        CHECK(std::abs(a.autocorrelation[k] - b.autocorrelation[k]) < 1e-10);
}

TEST_CASE("theoretical ACF of AR(1) is geometric") {
    const auto m = tsa::make_ar_model({0.5}, 1.0);
    const auto rho = tsa::theoretical_ar_acf(m, 6);
    for (std::size_t k = 0; k <= 6; ++k) CHECK(rho[k] == doctest::Approx(std::pow(0.5, k)));
    CHECK(tsa::theoretical_ar_variance(m) == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("theoretical ACF of white noise") {
    const auto rho = tsa::theoretical_ar_acf(tsa::make_ar_model({}, 2.0), 3);
    CHECK(rho == std::vector<double>{1.0, 0.0, 0.0, 0.0});
    CHECK(tsa::theoretical_ar_variance(tsa::make_ar_model({}, 2.0)) == 2.0);
}

TEST_CASE("theoretical ACF of AR(2) matches MA(inf) expansion") {
    const std::vector<double> phi{0.5, 0.3};
    const auto m = tsa::make_ar_model(phi, 1.0);
    const auto rho = tsa::theoretical_ar_acf(m, 10);
    CHECK(rho[1] == doctest::Approx(5.0 / 7.0));
    const auto g = oracle::ar_autocovariance_by_psi(phi, 1.0, 10);
    CHECK(tsa::theoretical_ar_variance(m) == doctest::Approx(g[0]).epsilon(1e-9));
    for (std::size_t k = 0; k <= 10; ++k) CHECK(rho[k] == doctest::Approx(g[k] / g[0]).epsilon(1e-9));
}

TEST_CASE("theoretical ACF rejects non-stationary models") {
    CHECK_THROWS_AS((void)tsa::theoretical_ar_acf(tsa::make_ar_model({1.0}, 1.0), 3),
                    tsa::DomainError);
}

TEST_CASE("sample ACF converges to the AR(1) ACF") {
    const auto truth = tsa::theoretical_ar_acf(tsa::make_ar_model({0.6}, 1.0), 5);
    std::mt19937_64 gen(123);
    double worst = 0.0;
    for (int run = 0; run < 50; ++run) {
        const auto x = oracle::ar_path(gen, {0.6}, 1.0, 10000);
        const auto acf = tsa::sample_acf(x, 5);
        for (std::size_t k = 1; k <= 5; ++k)
            worst = std::max(worst, std::abs(acf.autocorrelation[k] - truth[k]));
    }
    CHECK(worst < 0.1);
}
