#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "tsa/series.hpp"

namespace tsa {

/// p-values below this are reported as "< 2.2e-16".
inline constexpr double kPValueFloor = 2.2e-16;

/**
 * @brief A p-value that may be interval-censored.
 *
 * `exact` carries the computed value. `below_threshold` means p < threshold
 * (value holds the computed probability, possibly 0); `above_threshold`
 * means p >= threshold.
 */
struct PValue {
    enum class Censoring { exact, below_threshold, above_threshold };

    double value = 1.0;
    Censoring censoring = Censoring::exact;
    std::optional<double> threshold;

    [[nodiscard]] static PValue exact(double p);
    [[nodiscard]] static PValue below(double p, double threshold);
    [[nodiscard]] static PValue above(double p, double threshold);
    /// exact(p) unless p < kPValueFloor, then below(p, kPValueFloor).
    [[nodiscard]] static PValue censor_small(double p);

    /// "0.8968", "< 2.2e-16", ">= 0.1".
    [[nodiscard]] std::string to_string() const;
};

[[nodiscard]] const char* to_string(PValue::Censoring c) noexcept;

/**
 * @brief OLS fit of x_t = beta0 + beta1 * t + e_t with t = 1..N.
 *
 * Inference uses N - 2 degrees of freedom. For a simple regression the
 * overall F statistic equals t_beta1 squared.
 */
struct LinearTrendFit {
    double beta0 = 0.0;
    double beta1 = 0.0;
    double se_beta0 = 0.0;
    double se_beta1 = 0.0;
    double t_beta0 = 0.0;
    double t_beta1 = 0.0;
    PValue p_beta0;
    PValue p_beta1;
    double r_squared = 0.0;
    double f_statistic = 0.0;
    PValue model_p_value;
    double residual_std_error = 0.0;
    TimeSeries residuals{std::vector<double>{0.0}};
    TimeSeries fitted{std::vector<double>{0.0}};
    std::size_t n = 0;
    std::size_t dof = 0;
};

/// @throws InsufficientData if N < 3
[[nodiscard]] LinearTrendFit fit_linear_trend(const TimeSeries& x);

/// Two-sided P(|T| >= |t|) for Student's t with `dof` degrees of freedom.
/// @throws std::invalid_argument for non-finite t or dof == 0
[[nodiscard]] double t_distribution_sf(double t, std::size_t dof);

/// P(F >= f) for the F(dof1, dof2) distribution.
/// @throws std::invalid_argument for f < 0 or zero degrees of freedom
[[nodiscard]] double f_distribution_sf(double f, std::size_t dof1, std::size_t dof2);

}  // namespace tsa
