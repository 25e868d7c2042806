#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "tsa/regression.hpp"

namespace tsa {

struct HypothesisTestResult {
    std::string test_name;
    double statistic = 0.0;
    PValue p_value;
    std::string null_hypothesis;
    std::size_t sample_size = 0;
    /// Auxiliary quantities (KPSS truncation lag, skewness, kurtosis, ...).
    std::map<std::string, double> nuisance;
};

/// P(X >= x) for a chi-square variable with `dof` degrees of freedom.
/// @throws std::invalid_argument for x < 0 or dof == 0
[[nodiscard]] double chi_square_sf(double x, std::size_t dof);

/**
 * @brief Jarque-Bera normality test.
 *
 * JB = N/6 * (g1^2 + (g2 - 3)^2 / 4) with moment (biased) skewness g1 and
 * kurtosis g2; p-value from chi-square(2). The sample skewness and kurtosis
 * are returned in `nuisance`.
 *
 * @throws InsufficientData if N < 4
 * @throws ZeroVariance if all values are identical
 */
[[nodiscard]] HypothesisTestResult jarque_bera(std::span<const double> x);

/**
 * @brief Shapiro-Wilk W test with Royston's (1995, AS R94) approximations.
 *
 * Coefficients come from normal scores Φ⁻¹((i - 3/8)/(N + 1/4)) with
 * polynomial corrections for the two most extreme weights; the p-value is
 * obtained from a normalizing transform of log(1 - W). Valid for 3 <= N <= 5000.
 *
 * @throws std::invalid_argument if N is outside [3, 5000]
 * @throws ZeroVariance if the sample range is effectively zero
 */
[[nodiscard]] HypothesisTestResult shapiro_wilk(std::span<const double> x);

/// KPSS η for a given Bartlett lag, without the sample-size gate of kpss_level().
/// @throws InsufficientData if N < 2; ZeroVariance for constant input
[[nodiscard]] double kpss_statistic(std::span<const double> x, std::size_t truncation_lag);

/// Short-lag rule floor(4 * (N/100)^(1/4)).
[[nodiscard]] std::size_t kpss_auto_lag(std::size_t n);

/**
 * @brief KPSS test of the level-stationarity null.
 *
 * η = N⁻² Σ S_t² / s²(l), S_t the partial sums of the demeaned series and
 * s²(l) the Bartlett-weighted long-run variance. The p-value is linearly
 * interpolated in the level-case critical value table and censored outside
 * [0.01, 0.1].
 *
 * @param truncation_lag Bartlett lag l, or nullopt for kpss_auto_lag(N)
 * @throws InsufficientData if N < 10
 * @throws std::invalid_argument if l >= N
 */
[[nodiscard]] HypothesisTestResult kpss_level(std::span<const double> x,
                                              std::optional<std::size_t> truncation_lag = {});

}  // namespace tsa
