#include "tsa/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tsa/error.hpp"

namespace tsa {

namespace {

using cd = std::complex<double>;

void fft_in_place(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    // Twiddles evaluated directly per index rather than by repeated
    // multiplication, which keeps the error at a few ulps for large N.
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<cd> twiddle(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(n);
        twiddle[k] = cd(std::cos(angle), std::sin(angle));
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n / len;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const cd u = a[start + k];
                const cd v = a[start + k + half] * twiddle[k * stride];
                a[start + k] = u + v;
                a[start + k + half] = u - v;
            }
        }
    }
}

std::vector<cd> direct_transform(std::span<const cd> a, bool inverse) {
    const std::size_t n = a.size();
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<cd> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cd s = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            // (k t) mod n keeps the angle argument small.
            const std::size_t idx = (k * t) % n;
            const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(idx) /
                                 static_cast<double>(n);
            s += a[t] * cd(std::cos(angle), std::sin(angle));
        }
        out[k] = s;
    }
    return out;
}

std::vector<cd> transform(std::vector<cd> a, bool inverse) {
    if (is_power_of_two(a.size())) {
        fft_in_place(a, inverse);
        return a;
    }
    return direct_transform(a, inverse);
}

std::string join_spans(std::span<const std::size_t> spans) {
    std::string s;
    for (std::size_t i = 0; i < spans.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(spans[i]);
    }
    return s;
}

}  // namespace

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) noexcept {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

DftResult dft(std::span<const double> x, std::size_t pad_to) {
    if (x.empty()) {
        throw std::invalid_argument("dft: empty input");
    }
    if (pad_to < x.size()) {
        throw std::invalid_argument("dft: transform length " + std::to_string(pad_to) +
                                    " is shorter than the input (" + std::to_string(x.size()) +
                                    ")");
    }
    std::vector<cd> a(pad_to, 0.0);
    for (std::size_t t = 0; t < x.size(); ++t) a[t] = x[t];
    return DftResult{transform(std::move(a), false), x.size(), pad_to};
}

std::vector<double> inverse_dft(const DftResult& spectrum) {
    const auto n = spectrum.coefficients.size();
    if (n == 0) {
        throw std::invalid_argument("inverse_dft: empty spectrum");
    }
    // Conjugation trick: x = conj(DFT(conj(X))) / N.
    std::vector<cd> a(spectrum.coefficients.begin(), spectrum.coefficients.end());
    for (auto& v : a) v = std::conj(v);
    a = transform(std::move(a), false);
    std::vector<double> out(n);
    for (std::size_t t = 0; t < n; ++t) out[t] = std::conj(a[t]).real() / static_cast<double>(n);
    return out;
}

const char* to_string(SpectrumEstimator e) noexcept {
    switch (e) {
        case SpectrumEstimator::raw_periodogram: return "raw_periodogram";
        case SpectrumEstimator::daniell: return "daniell";
        case SpectrumEstimator::ar_parametric: return "ar_parametric";
    }
    return "raw_periodogram";
}

SpectrumEstimate periodogram(std::span<const double> x, bool demean,
                             std::optional<std::size_t> pad_to) {
    if (x.size() < 2) {
        throw InsufficientData("periodogram: need at least 2 observations");
    }
    std::vector<double> data(x.begin(), x.end());
    double mean = 0.0;
    if (demean) {
        for (double v : data) mean += v;
        mean /= static_cast<double>(data.size());
        for (double& v : data) v -= mean;
    }
    const std::size_t n = pad_to.value_or(next_power_of_two(data.size()));
    const auto spectrum = dft(data, n);

    SpectrumEstimate est;
    est.estimator = SpectrumEstimator::raw_periodogram;
    const std::size_t last = n / 2;
    est.frequencies.resize(last + 1);
    est.power.resize(last + 1);
    for (std::size_t k = 0; k <= last; ++k) {
        est.frequencies[k] = static_cast<double>(k) / static_cast<double>(n);
        est.power[k] = std::norm(spectrum.coefficients[k]) / static_cast<double>(n);
    }
    est.parameters = {{"padded_length", std::to_string(n)},
                      {"original_length", std::to_string(x.size())},
                      {"demean", demean ? "true" : "false"}};
    return est;
}

std::vector<double> modified_daniell_kernel(std::size_t span) {
    if (span < 3 || span % 2 == 0) {
        throw std::invalid_argument("modified_daniell_kernel: span must be odd and >= 3, got " +
                                    std::to_string(span));
    }
    const std::size_t m = span / 2;
    std::vector<double> w(span, 1.0 / static_cast<double>(2 * m));
    w.front() = w.back() = 1.0 / static_cast<double>(4 * m);
    return w;
}

SpectrumEstimate daniell_smooth(const SpectrumEstimate& raw, std::span<const std::size_t> spans) {
    if (raw.estimator != SpectrumEstimator::raw_periodogram) {
        throw std::invalid_argument("daniell_smooth: input must be a raw periodogram");
    }
    if (spans.empty()) {
        throw std::invalid_argument("daniell_smooth: at least one span is required");
    }
    if (raw.power.size() < 2) {
        throw InsufficientData("daniell_smooth: need at least 2 ordinates");
    }
    const auto last = static_cast<long>(raw.power.size() - 1);
    auto reflect = [last](long k) {
        while (k < 0 || k > last) {
            k = k < 0 ? -k : 2 * last - k;
        }
        return static_cast<std::size_t>(k);
    };

    std::vector<double> power = raw.power;
    for (std::size_t span : spans) {
        const auto kernel = modified_daniell_kernel(span);
        const auto m = static_cast<long>(span / 2);
        std::vector<double> next(power.size(), 0.0);
        for (long k = 0; k <= last; ++k) {
            double s = 0.0;
            for (long j = -m; j <= m; ++j) {
                s += kernel[static_cast<std::size_t>(j + m)] * power[reflect(k + j)];
            }
            next[static_cast<std::size_t>(k)] = s;
        }
        power = std::move(next);
    }

    SpectrumEstimate est;
    est.frequencies = raw.frequencies;
    est.power = std::move(power);
    est.estimator = SpectrumEstimator::daniell;
    est.parameters = raw.parameters;
    est.parameters["kernel"] = "modified_daniell";
    est.parameters["spans"] = join_spans(spans);
    est.parameters["boundary"] = "reflect";
    return est;
}

SpectrumEstimate ar_psd(const ArModel& model, std::size_t grid_size) {
    if (grid_size < 2) {
        throw std::invalid_argument("ar_psd: grid_size must be at least 2");
    }
    if (!analyze_roots(model).stationary) {
        throw DomainError("ar_psd: model is not stationary");
    }
    SpectrumEstimate est;
    est.estimator = SpectrumEstimator::ar_parametric;
    est.frequencies.resize(grid_size);
    est.power.resize(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double f = 0.5 * static_cast<double>(i) / static_cast<double>(grid_size - 1);
        cd transfer = 1.0;
        for (std::size_t j = 1; j <= model.order(); ++j) {
            const double angle = -2.0 * std::numbers::pi * f * static_cast<double>(j);
            transfer -= model.phi[j - 1] * cd(std::cos(angle), std::sin(angle));
        }
        est.frequencies[i] = f;
        est.power[i] = model.sigma2 / std::norm(transfer);
    }
    est.parameters = {{"ar_order", std::to_string(model.order())},
                      {"grid_size", std::to_string(grid_size)},
                      {"estimation_method", model.estimation_method}};
    return est;
}

}  // namespace tsa
