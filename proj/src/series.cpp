#include "tsa/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "tsa/regression.hpp"

namespace tsa {

std::optional<YearMonth> YearMonth::parse(std::string_view text) {
    if (text.size() != 7 || text[4] != '-') {
        return std::nullopt;
    }
    int year = 0;
    int month = 0;
    auto [p1, e1] = std::from_chars(text.data(), text.data() + 4, year);
    auto [p2, e2] = std::from_chars(text.data() + 5, text.data() + 7, month);
    if (e1 != std::errc{} || p1 != text.data() + 4 || e2 != std::errc{} ||
        p2 != text.data() + 7 || month < 1 || month > 12) {
        return std::nullopt;
    }
    return YearMonth{year, month};
}

std::string YearMonth::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
    return buf;
}

YearMonth YearMonth::plus_months(long months) const {
    long idx = static_cast<long>(year) * 12 + (month - 1) + months;
    long y = idx >= 0 ? idx / 12 : -((-idx + 11) / 12);
    return YearMonth{static_cast<int>(y), static_cast<int>(idx - y * 12) + 1};
}

long YearMonth::months_since(const YearMonth& other) const {
    return (static_cast<long>(year) - other.year) * 12 + (month - other.month);
}

TimeSeries::TimeSeries(std::vector<double> values, YearMonth start, int period_months)
    : values_(std::move(values)), start_(start), period_months_(period_months) {
    if (values_.empty()) {
        throw std::invalid_argument("TimeSeries: at least one observation required");
    }
    if (period_months_ < 1) {
        throw std::invalid_argument("TimeSeries: period length must be positive");
    }
    for (std::size_t t = 0; t < values_.size(); ++t) {
        if (!std::isfinite(values_[t])) {
            throw std::invalid_argument("TimeSeries: non-finite value at t=" + std::to_string(t));
        }
    }
}

YearMonth TimeSeries::period_at(std::size_t t) const {
    return start_.plus_months(static_cast<long>(t) * period_months_);
}

TimeSeries TimeSeries::drop_head(std::size_t count) const {
    if (count >= values_.size()) {
        throw std::invalid_argument("drop_head: count " + std::to_string(count) +
                                    " leaves no observations of " +
                                    std::to_string(values_.size()));
    }
    std::vector<double> rest(values_.begin() + static_cast<std::ptrdiff_t>(count), values_.end());
    return TimeSeries(std::move(rest), period_at(count), period_months_);
}

TimeSeries difference(const TimeSeries& x, std::size_t d) {
    if (d >= x.size()) {
        throw std::invalid_argument("difference: order d=" + std::to_string(d) +
                                    " must be less than N=" + std::to_string(x.size()));
    }
    std::vector<double> v = x.vec();
    for (std::size_t pass = 0; pass < d; ++pass) {
        for (std::size_t t = 0; t + 1 < v.size(); ++t) {
            v[t] = v[t + 1] - v[t];
        }
        v.pop_back();
    }
    return TimeSeries(std::move(v), x.period_at(d), x.period_months());
}

TimeSeries apply(const TimeSeries& x, const DifferenceSpec& spec) {
    TimeSeries out = difference(x, spec.order);
    return spec.demean ? demean(out).series : out;
}

TimeSeries integrate(const TimeSeries& y, std::size_t d, std::span<const double> initial_values) {
    if (d == 0) {
        throw std::invalid_argument("integrate: d must be positive");
    }
    if (initial_values.size() != d) {
        throw std::invalid_argument("integrate: expected " + std::to_string(d) +
                                    " initial values, got " +
                                    std::to_string(initial_values.size()));
    }
    // Undo one difference at a time, innermost first.
    std::vector<double> v = y.vec();
    for (std::size_t level = d; level-- > 0;) {
        std::vector<double> up(v.size() + 1);
        up[0] = initial_values[level];
        for (std::size_t t = 0; t < v.size(); ++t) {
            up[t + 1] = up[t] + v[t];
        }
        v = std::move(up);
    }
    return TimeSeries(std::move(v), y.start().plus_months(-static_cast<long>(d) * y.period_months()),
                      y.period_months());
}

Demeaned demean(const TimeSeries& x) {
    const auto n = static_cast<double>(x.size());
    double mean = std::accumulate(x.vec().begin(), x.vec().end(), 0.0) / n;
    // Second pass removes the rounding left by the naive sum.
    double resid = 0.0;
    for (double v : x.vec()) {
        resid += v - mean;
    }
    mean += resid / n;
    std::vector<double> out(x.size());
    std::transform(x.vec().begin(), x.vec().end(), out.begin(),
                   [mean](double v) { return v - mean; });
    return {TimeSeries(std::move(out), x.start(), x.period_months()), mean};
}

TimeSeries detrend_linear(const TimeSeries& x, const LinearTrendFit& fit) {
    if (fit.n != x.size()) {
        throw std::invalid_argument("detrend_linear: fit has n=" + std::to_string(fit.n) +
                                    " but series has N=" + std::to_string(x.size()));
    }
    std::vector<double> out(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) {
        out[t] = x[t] - (fit.beta0 + fit.beta1 * static_cast<double>(t + 1));
    }
    return TimeSeries(std::move(out), x.start(), x.period_months());
}

}  // namespace tsa
