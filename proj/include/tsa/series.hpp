#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tsa {

struct LinearTrendFit;

/// Calendar year-month label. Months are 1..12.
struct YearMonth {
    int year = 1970;
    int month = 1;

    /// Parses "YYYY-MM". Returns nullopt on anything else.
    [[nodiscard]] static std::optional<YearMonth> parse(std::string_view text);

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] YearMonth plus_months(long months) const;
    /// Signed number of months from `other` to *this.
    [[nodiscard]] long months_since(const YearMonth& other) const;

    friend bool operator==(const YearMonth&, const YearMonth&) = default;
    friend auto operator<=>(const YearMonth&, const YearMonth&) = default;
};

/**
 * @brief Ordered, finite, equally spaced observations.
 *
 * The time index is implicit: t = 0..size()-1. The start period and period
 * length (in months) are carried as metadata only.
 *
 * @throws std::invalid_argument on construction from an empty or non-finite sequence
 */
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values, YearMonth start = {}, int period_months = 1);

    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] const std::vector<double>& vec() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double operator[](std::size_t t) const { return values_[t]; }
    [[nodiscard]] YearMonth start() const noexcept { return start_; }
    [[nodiscard]] int period_months() const noexcept { return period_months_; }
    [[nodiscard]] YearMonth period_at(std::size_t t) const;

    /// Drops the first `count` observations; the start period advances accordingly.
    [[nodiscard]] TimeSeries drop_head(std::size_t count) const;

private:
    std::vector<double> values_;
    YearMonth start_;
    int period_months_;
};

struct DifferenceSpec {
    std::size_t order = 1;
    bool demean = false;
};

/// Applies the first difference `d` times. Output length is N - d; d = 0 is the identity.
[[nodiscard]] TimeSeries difference(const TimeSeries& x, std::size_t d);

/// difference() followed by optional demeaning.
[[nodiscard]] TimeSeries apply(const TimeSeries& x, const DifferenceSpec& spec);

/**
 * @brief Inverse of difference(): d-fold cumulative summation.
 *
 * initial_values[k] is the first value of the (d-1-k)-times differenced
 * series, i.e. initial_values[0] = x_0, initial_values[1] = (Δx)_0, ...
 * The result has length y.size() + d.
 */
[[nodiscard]] TimeSeries integrate(const TimeSeries& y, std::size_t d,
                                   std::span<const double> initial_values);

struct Demeaned {
    TimeSeries series;
    double mean;
};

[[nodiscard]] Demeaned demean(const TimeSeries& x);

/// x_t - (beta0 + beta1 * (t + 1)); identical to fit.residuals.
[[nodiscard]] TimeSeries detrend_linear(const TimeSeries& x, const LinearTrendFit& fit);

}  // namespace tsa
