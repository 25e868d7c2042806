#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tsa/ar_model.hpp"

namespace tsa {

/// z-value of the 95% white-noise band drawn around a SACF.
inline constexpr double kAcfBandZ = 1.96;

struct AcfEstimate {
    std::vector<double> autocovariance;   ///< γ̂_0..γ̂_L, divisor N
    std::vector<double> autocorrelation;  ///< ρ̂_0..ρ̂_L, ρ̂_0 = 1
    std::size_t n = 0;
    double band = 0.0;                    ///< 1.96 / sqrt(N)

    [[nodiscard]] std::size_t max_lag() const noexcept { return autocorrelation.size() - 1; }
};

/// Biased autocovariances γ̂_0..γ̂_L (no zero-variance check).
[[nodiscard]] std::vector<double> sample_autocovariance(std::span<const double> x,
                                                        std::size_t max_lag);

/// @throws ZeroVariance for constant input
/// @throws std::invalid_argument if max_lag >= N
[[nodiscard]] AcfEstimate sample_acf(std::span<const double> x, std::size_t max_lag);

/// ρ_0..ρ_L of a stationary AR model from its Yule-Walker equations.
/// @throws DomainError if the model is not stationary
[[nodiscard]] std::vector<double> theoretical_ar_acf(const ArModel& model, std::size_t max_lag);

/// Stationary variance γ_0 = σ² / (1 - Σ φ_j ρ_j).
/// @throws DomainError if the model is not stationary
[[nodiscard]] double theoretical_ar_variance(const ArModel& model);

}  // namespace tsa
