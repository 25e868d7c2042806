#include "tsa/regression.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "tsa/error.hpp"
#include "tsa/special.hpp"

namespace tsa {

PValue PValue::exact(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("PValue: probability outside [0, 1]");
    }
    return PValue{p, Censoring::exact, std::nullopt};
}

PValue PValue::below(double p, double threshold) {
    PValue out = exact(p);
    out.censoring = Censoring::below_threshold;
    out.threshold = threshold;
    return out;
}

PValue PValue::above(double p, double threshold) {
    PValue out = exact(p);
    out.censoring = Censoring::above_threshold;
    out.threshold = threshold;
    return out;
}

PValue PValue::censor_small(double p) {
    return p < kPValueFloor ? below(p, kPValueFloor) : exact(p);
}

std::string PValue::to_string() const {
    char buf[64];
    switch (censoring) {
        case Censoring::below_threshold:
            std::snprintf(buf, sizeof buf, "< %.2g", *threshold);
            break;
        case Censoring::above_threshold:
            std::snprintf(buf, sizeof buf, ">= %.2g", *threshold);
            break;
        case Censoring::exact:
            std::snprintf(buf, sizeof buf, "%.4g", value);
            break;
    }
    return buf;
}

const char* to_string(PValue::Censoring c) noexcept {
    switch (c) {
        case PValue::Censoring::exact: return "exact";
        case PValue::Censoring::below_threshold: return "below_threshold";
        case PValue::Censoring::above_threshold: return "above_threshold";
    }
    return "exact";
}

double t_distribution_sf(double t, std::size_t dof) {
    if (!std::isfinite(t)) {
        throw std::invalid_argument("t_distribution_sf: t must be finite");
    }
    if (dof == 0) {
        throw std::invalid_argument("t_distribution_sf: dof must be positive");
    }
    if (t == 0.0) {
        return 1.0;
    }
    const double nu = static_cast<double>(dof);
    return special::incomplete_beta(0.5 * nu, 0.5, nu / (nu + t * t));
}

double f_distribution_sf(double f, std::size_t dof1, std::size_t dof2) {
    if (!(f >= 0.0)) {
        throw std::invalid_argument("f_distribution_sf: f must be non-negative");
    }
    if (dof1 == 0 || dof2 == 0) {
        throw std::invalid_argument("f_distribution_sf: degrees of freedom must be positive");
    }
    if (f == 0.0) {
        return 1.0;
    }
    if (std::isinf(f)) {
        return 0.0;
    }
    const double d1 = static_cast<double>(dof1);
    const double d2 = static_cast<double>(dof2);
    return special::incomplete_beta(0.5 * d2, 0.5 * d1, d2 / (d2 + d1 * f));
}

namespace {

// t = b / se with the degenerate se = 0 case resolved: a perfect fit makes
// any non-zero coefficient infinitely significant.
struct Inference {
    double t;
    PValue p;
};

Inference coefficient_inference(double beta, double se, std::size_t dof) {
    if (se > 0.0) {
        const double t = beta / se;
        if (std::isfinite(t)) {
            return {t, PValue::censor_small(t_distribution_sf(t, dof))};
        }
    }
    if (beta == 0.0) {
        return {0.0, PValue::exact(1.0)};
    }
    return {std::copysign(std::numeric_limits<double>::infinity(), beta),
            PValue::below(0.0, kPValueFloor)};
}

}  // namespace

LinearTrendFit fit_linear_trend(const TimeSeries& x) {
    const std::size_t n = x.size();
    if (n < 3) {
        throw InsufficientData("fit_linear_trend: need N >= 3, got N=" + std::to_string(n));
    }
    const double nd = static_cast<double>(n);
    const double t_mean = (nd + 1.0) / 2.0;
    double x_mean = 0.0;
    for (double v : x.values()) x_mean += v;
    x_mean /= nd;

    double sxx = 0.0;
    double sxy = 0.0;
    double sst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = static_cast<double>(i + 1) - t_mean;
        const double dx = x[i] - x_mean;
        sxx += dt * dt;
        sxy += dt * dx;
        sst += dx * dx;
    }

    LinearTrendFit fit;
    fit.n = n;
    fit.dof = n - 2;
    fit.beta1 = sxy / sxx;
    fit.beta0 = x_mean - fit.beta1 * t_mean;

    std::vector<double> fitted(n);
    std::vector<double> resid(n);
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        fitted[i] = fit.beta0 + fit.beta1 * static_cast<double>(i + 1);
        resid[i] = x[i] - fitted[i];
        sse += resid[i] * resid[i];
    }
    fit.fitted = TimeSeries(std::move(fitted), x.start(), x.period_months());
    fit.residuals = TimeSeries(std::move(resid), x.start(), x.period_months());

    const double dof = static_cast<double>(fit.dof);
    const double s2 = sse / dof;
    fit.residual_std_error = std::sqrt(s2);
    fit.se_beta1 = std::sqrt(s2 / sxx);
    fit.se_beta0 = std::sqrt(s2 * (1.0 / nd + t_mean * t_mean / sxx));

    const auto i0 = coefficient_inference(fit.beta0, fit.se_beta0, fit.dof);
    const auto i1 = coefficient_inference(fit.beta1, fit.se_beta1, fit.dof);
    fit.t_beta0 = i0.t;
    fit.p_beta0 = i0.p;
    fit.t_beta1 = i1.t;
    fit.p_beta1 = i1.p;

    if (sst > 0.0) {
        fit.r_squared = std::clamp(1.0 - sse / sst, 0.0, 1.0);
    }
    // Regression mean square over residual mean square.
    const double ssr = std::max(sst - sse, 0.0);
    if (s2 > 0.0) {
        fit.f_statistic = ssr / s2;
    } else {
        fit.f_statistic = ssr > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    if (std::isinf(fit.f_statistic)) {
        fit.model_p_value = PValue::below(0.0, kPValueFloor);
    } else {
        fit.model_p_value =
            PValue::censor_small(f_distribution_sf(fit.f_statistic, 1, fit.dof));
    }
    return fit;
}

}  // namespace tsa
