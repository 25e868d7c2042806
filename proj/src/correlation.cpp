#include "tsa/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tsa/detail/linalg.hpp"
#include "tsa/error.hpp"

namespace tsa {

std::vector<double> sample_autocovariance(std::span<const double> x, std::size_t max_lag) {
    const std::size_t n = x.size();
    if (n == 0) {
        throw InsufficientData("sample_autocovariance: empty input");
    }
    if (max_lag >= n) {
        throw std::invalid_argument("sample_autocovariance: max lag " + std::to_string(max_lag) +
                                    " must be less than N=" + std::to_string(n));
    }
    const double nd = static_cast<double>(n);
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= nd;
    std::vector<double> centered(n);
    for (std::size_t t = 0; t < n; ++t) centered[t] = x[t] - mean;

    std::vector<double> gamma(max_lag + 1, 0.0);
    for (std::size_t h = 0; h <= max_lag; ++h) {
        double s = 0.0;
        for (std::size_t t = 0; t + h < n; ++t) s += centered[t] * centered[t + h];
        gamma[h] = s / nd;
    }
    return gamma;
}

AcfEstimate sample_acf(std::span<const double> x, std::size_t max_lag) {
    AcfEstimate est;
    est.autocovariance = sample_autocovariance(x, max_lag);
    if (!(est.autocovariance[0] > 0.0)) {
        throw ZeroVariance("sample_acf: input is constant");
    }
    est.n = x.size();
    est.autocorrelation.resize(max_lag + 1);
    est.autocorrelation[0] = 1.0;
    for (std::size_t h = 1; h <= max_lag; ++h) {
        est.autocorrelation[h] = est.autocovariance[h] / est.autocovariance[0];
    }
    est.band = kAcfBandZ / std::sqrt(static_cast<double>(est.n));
    return est;
}

namespace {

// ρ_1..ρ_p from ρ_k = Σ_j φ_j ρ_|k-j|, k = 1..p, with ρ_0 = 1.
std::vector<double> initial_autocorrelations(std::span<const double> phi) {
    const std::size_t p = phi.size();
    detail::Matrix a(p, p);
    std::vector<double> b(p, 0.0);
    for (std::size_t k = 1; k <= p; ++k) {
        a(k - 1, k - 1) += 1.0;
        for (std::size_t j = 1; j <= p; ++j) {
            const std::size_t lag = k > j ? k - j : j - k;
            if (lag == 0) {
                b[k - 1] += phi[j - 1];
            } else {
                a(k - 1, lag - 1) -= phi[j - 1];
            }
        }
    }
    return detail::solve(std::move(a), std::move(b));
}

void require_stationary(const ArModel& model, const char* who) {
    if (!analyze_roots(model).stationary) {
        throw DomainError(std::string(who) + ": model is not stationary");
    }
}

}  // namespace

std::vector<double> theoretical_ar_acf(const ArModel& model, std::size_t max_lag) {
    require_stationary(model, "theoretical_ar_acf");
    const std::size_t p = model.order();
    std::vector<double> rho(std::max(max_lag, p) + 1, 0.0);
    rho[0] = 1.0;
    if (p > 0) {
        const auto head = initial_autocorrelations(model.phi);
        for (std::size_t k = 1; k <= p; ++k) rho[k] = head[k - 1];
        for (std::size_t h = p + 1; h < rho.size(); ++h) {
            double s = 0.0;
            for (std::size_t j = 1; j <= p; ++j) s += model.phi[j - 1] * rho[h - j];
            rho[h] = s;
        }
    }
    rho.resize(max_lag + 1);
    return rho;
}

double theoretical_ar_variance(const ArModel& model) {
    const auto rho = theoretical_ar_acf(model, model.order());
    double s = 0.0;
    for (std::size_t j = 1; j <= model.order(); ++j) s += model.phi[j - 1] * rho[j];
    return model.sigma2 / (1.0 - s);
}

}  // namespace tsa
