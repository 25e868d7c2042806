#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsa/series.hpp"

namespace tsa {

enum class ArEstimator { yule_walker, least_squares };

[[nodiscard]] const char* to_string(ArEstimator e) noexcept;
/// Accepts "yule_walker"/"yw" and "least_squares"/"ls".
[[nodiscard]] ArEstimator parse_estimator(std::string_view name);

/**
 * @brief AR(p) model x_t - μ = Σ φ_j (x_{t-j} - μ) + w_t, w_t ~ (0, σ²).
 *
 * `stationary` is derived from the characteristic roots whenever a model is
 * produced by this library (estimators and make_ar_model()).
 */
struct ArModel {
    std::vector<double> phi;
    double sigma2 = 1.0;
    double mean = 0.0;
    std::string estimation_method = "specified";
    std::size_t n_used = 0;
    bool stationary = true;

    [[nodiscard]] std::size_t order() const noexcept { return phi.size(); }
};

/// Builds a model and sets its stationarity flag. sigma2 must be finite and >= 0
/// (0 gives the deterministic limit).
[[nodiscard]] ArModel make_ar_model(std::vector<double> phi, double sigma2, double mean = 0.0);

/// Output of the Levinson-Durbin recursion up to some order K.
struct LevinsonDurbin {
    std::vector<double> phi;                   ///< order-K coefficients
    std::vector<double> reflection;            ///< κ_1..κ_K (partial autocorrelations)
    std::vector<double> innovation_variance;   ///< v_0..v_K, v_0 = γ_0
};

/// @throws DegenerateFit when a reflection coefficient reaches magnitude 1
[[nodiscard]] LevinsonDurbin levinson_durbin(std::span<const double> autocovariance,
                                             std::size_t order);

/// Yule-Walker fit via Levinson-Durbin on biased autocovariances.
/// @throws std::invalid_argument if p >= N/2
/// @throws ZeroVariance for constant input
/// @throws DegenerateFit on |κ| >= 1 from round-off
[[nodiscard]] ArModel fit_ar_yule_walker(std::span<const double> x, std::size_t p);

/// Conditional least squares with intercept over t = p+1..N; σ² = SSE/(N-p).
/// Stationarity is reported in the result, not enforced.
/// @throws std::invalid_argument unless 1 <= p < N-1
/// @throws DegenerateFit for a rank-deficient design
[[nodiscard]] ArModel fit_ar_least_squares(std::span<const double> x, std::size_t p);

/// Dispatches on `method`; order 0 gives the white-noise model (σ² = biased variance).
[[nodiscard]] ArModel fit_ar(std::span<const double> x, std::size_t p, ArEstimator method);

struct AicRow {
    std::size_t order = 0;
    double sigma2 = 0.0;
    double aic = 0.0;
    /// Set when the estimator failed for this order; sigma2/aic are then NaN.
    std::optional<std::string> error;
};

struct AicTable {
    std::vector<AicRow> rows;
    std::size_t selected_order = 0;
    std::size_t n = 0;
    ArEstimator method = ArEstimator::yule_walker;
};

/// Default upper order floor(10 log10 N).
[[nodiscard]] std::size_t default_max_order(std::size_t n);

/**
 * @brief AIC(k) = ln σ̂²_k + 2k/N for k = 0..K; selects the argmin (smallest k on ties).
 *
 * Per-order estimator failures are recorded on the row.
 *
 * @throws std::invalid_argument if K >= N/2
 * @throws DegenerateFit if every order fails
 */
[[nodiscard]] AicTable select_order_aic(std::span<const double> x, std::size_t max_order,
                                        ArEstimator method = ArEstimator::yule_walker);

/// Returns the argmin of a precomputed table (smallest order on ties, failed rows skipped).
[[nodiscard]] std::size_t argmin_aic(std::span<const AicRow> rows);

/// Zeros of φ(z) = 1 - φ_1 z - ... - φ_p z^p. Trailing zero coefficients
/// lower the degree. Empty for p = 0.
[[nodiscard]] std::vector<std::complex<double>> characteristic_roots(const ArModel& model);

inline constexpr double kUnitRootTolerance = 1e-8;

struct RootSummary {
    std::vector<std::complex<double>> roots;
    double min_modulus = 0.0;  ///< +inf when there are no roots
    bool stationary = true;    ///< every root modulus > 1 (beyond the unit-root band)
    bool unit_root = false;    ///< some modulus within kUnitRootTolerance of 1
};

[[nodiscard]] RootSummary analyze_roots(const ArModel& model);
[[nodiscard]] RootSummary analyze_roots(std::span<const double> phi);

/// MA(∞) weights h_0..h_{count-1}: h_0 = 1, h_k = Σ_{j=1}^{min(k,p)} φ_j h_{k-j}.
[[nodiscard]] std::vector<double> psi_weights(const ArModel& model, std::size_t count);

/// Default warm-up length 10 p + 50.
[[nodiscard]] std::size_t default_burn_in(const ArModel& model);

/**
 * @brief Gaussian AR(p) realization of length n.
 *
 * Deterministic in (model, n, seed, burn_in).
 *
 * @throws DomainError for non-stationary models
 */
[[nodiscard]] TimeSeries simulate_ar(const ArModel& model, std::size_t n, std::uint64_t seed,
                                     std::optional<std::size_t> burn_in = {});

/**
 * @brief ARIMA(p, d, 0) realization: a length-(n-d) AR(p) path integrated d times.
 *
 * initial_values as for integrate(); defaults to zeros. Output length is n.
 */
[[nodiscard]] TimeSeries simulate_arima(const ArModel& model, std::size_t d, std::size_t n,
                                        std::uint64_t seed,
                                        std::span<const double> initial_values = {});

struct RandomWalkSpec {
    double drift = 0.0;
    double innovation_sigma2 = 1.0;
    double y0 = 0.0;
};

/// y_t = y0 + θ0 t + Σ_{j<=t} x_j, x_j ~ N(0, σ²), returned for t = 1..n.
[[nodiscard]] TimeSeries simulate_random_walk(const RandomWalkSpec& spec, std::size_t n,
                                              std::uint64_t seed);

struct RandomWalkMoments {
    double mean;
    double variance;
    double autocovariance;
    double acf;
};

/// μ_t = y0 + tθ0, σ²(t) = tσ², C_k(t) = (t-k)σ², ρ_k(t) = (t-k)/t.
/// @throws std::invalid_argument if t == 0 or k > t
[[nodiscard]] RandomWalkMoments random_walk_moments(const RandomWalkSpec& spec, std::size_t t,
                                                    std::size_t k);

}  // namespace tsa
