#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsa/ar_model.hpp"

namespace tsa {

struct DftResult {
    std::vector<std::complex<double>> coefficients;  ///< X[0..N-1]
    std::size_t original_length = 0;                 ///< M
    std::size_t padded_length = 0;                   ///< N

    [[nodiscard]] std::size_t size() const noexcept { return coefficients.size(); }
};

[[nodiscard]] bool is_power_of_two(std::size_t n) noexcept;
[[nodiscard]] std::size_t next_power_of_two(std::size_t n) noexcept;

/**
 * @brief X[k] = Σ_t x_t exp(-j 2π k t / N) over x zero-padded to N.
 *
 * Radix-2 transform when N is a power of two, direct O(N²) evaluation
 * otherwise.
 *
 * @throws std::invalid_argument if pad_to < x.size() or x is empty
 */
[[nodiscard]] DftResult dft(std::span<const double> x, std::size_t pad_to);
[[nodiscard]] inline DftResult dft(std::span<const double> x) { return dft(x, x.size()); }

/// Inverse transform; returns the real part of the length-N sequence.
[[nodiscard]] std::vector<double> inverse_dft(const DftResult& spectrum);

enum class SpectrumEstimator { raw_periodogram, daniell, ar_parametric };

[[nodiscard]] const char* to_string(SpectrumEstimator e) noexcept;

struct SpectrumEstimate {
    std::vector<double> frequencies;  ///< cycles per sample, within [0, 0.5]
    std::vector<double> power;
    SpectrumEstimator estimator = SpectrumEstimator::raw_periodogram;
    std::map<std::string, std::string> parameters;
};

/**
 * @brief Raw periodogram P(f_k) = |X[k]|² / N on f_k = k/N, k = 0..⌊N/2⌋.
 *
 * @param pad_to transform length; defaults to the next power of two >= length
 * @throws InsufficientData for fewer than 2 observations
 */
[[nodiscard]] SpectrumEstimate periodogram(std::span<const double> x, bool demean = true,
                                           std::optional<std::size_t> pad_to = {});

/// Modified Daniell weights for one odd span (half weight at both ends).
[[nodiscard]] std::vector<double> modified_daniell_kernel(std::size_t span);

/**
 * @brief Smooths a raw periodogram with modified Daniell kernels applied in sequence.
 *
 * Ordinates beyond f = 0 and f = 0.5 are obtained by reflection.
 *
 * @throws std::invalid_argument for a non-raw input, an empty span list, or a
 *         span that is even or < 3
 */
[[nodiscard]] SpectrumEstimate daniell_smooth(const SpectrumEstimate& raw,
                                              std::span<const std::size_t> spans);

/**
 * @brief AR spectral density σ² / |1 - Σ φ_j e^{-j2πfj}|² on grid_size points over [0, 0.5].
 *
 * @throws DomainError for a non-stationary model
 * @throws std::invalid_argument if grid_size < 2
 */
[[nodiscard]] SpectrumEstimate ar_psd(const ArModel& model, std::size_t grid_size);

}  // namespace tsa
