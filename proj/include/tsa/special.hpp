#pragma once

/// Special functions backing the distribution tail probabilities.

namespace tsa::special {

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
/// @throws std::invalid_argument for a, b <= 0 or x outside [0, 1]
[[nodiscard]] double incomplete_beta(double a, double b, double x);

/// Regularized upper incomplete gamma Q(a, x) = Γ(a, x) / Γ(a).
[[nodiscard]] double incomplete_gamma_upper(double a, double x);

[[nodiscard]] double normal_cdf(double x);
[[nodiscard]] double normal_sf(double x);
[[nodiscard]] double normal_pdf(double x);

/// Standard normal quantile (Wichura's AS 241, ~1e-16 relative accuracy).
/// @throws std::invalid_argument unless 0 < p < 1
[[nodiscard]] double normal_quantile(double p);

}  // namespace tsa::special
