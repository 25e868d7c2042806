#include "tsa/ar_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tsa/correlation.hpp"
#include "tsa/detail/linalg.hpp"
#include "tsa/error.hpp"
#include "tsa/random.hpp"

namespace tsa {

const char* to_string(ArEstimator e) noexcept {
    switch (e) {
        case ArEstimator::yule_walker: return "yule_walker";
        case ArEstimator::least_squares: return "least_squares";
    }
    return "yule_walker";
}

ArEstimator parse_estimator(std::string_view name) {
    if (name == "yule_walker" || name == "yw") return ArEstimator::yule_walker;
    if (name == "least_squares" || name == "ls") return ArEstimator::least_squares;
    throw std::invalid_argument("unknown AR estimator '" + std::string(name) + "'");
}

ArModel make_ar_model(std::vector<double> phi, double sigma2, double mean) {
    if (!(sigma2 >= 0.0) || !std::isfinite(sigma2)) {
        throw std::invalid_argument("make_ar_model: sigma2 must be finite and non-negative");
    }
    for (double c : phi) {
        if (!std::isfinite(c)) throw std::invalid_argument("make_ar_model: non-finite phi");
    }
    ArModel m;
    m.phi = std::move(phi);
    m.sigma2 = sigma2;
    m.mean = mean;
    m.stationary = analyze_roots(m).stationary;
    return m;
}

LevinsonDurbin levinson_durbin(std::span<const double> gamma, std::size_t order) {
    if (gamma.size() < order + 1) {
        throw std::invalid_argument("levinson_durbin: need autocovariances up to lag " +
                                    std::to_string(order));
    }
    if (!(gamma[0] > 0.0)) {
        throw ZeroVariance("levinson_durbin: zero lag-0 autocovariance");
    }
    LevinsonDurbin ld;
    ld.innovation_variance.reserve(order + 1);
    ld.innovation_variance.push_back(gamma[0]);
    std::vector<double> phi;
    std::vector<double> prev;
    for (std::size_t k = 1; k <= order; ++k) {
        double num = gamma[k];
        for (std::size_t j = 1; j < k; ++j) num -= phi[j - 1] * gamma[k - j];
        const double kappa = num / ld.innovation_variance.back();
        if (!(std::abs(kappa) < 1.0)) {
            throw DegenerateFit("levinson_durbin: reflection coefficient |" +
                                std::to_string(kappa) + "| >= 1 at order " +
                                std::to_string(k));
        }
        prev = phi;
        phi.resize(k);
        phi[k - 1] = kappa;
        for (std::size_t j = 1; j < k; ++j) phi[j - 1] = prev[j - 1] - kappa * prev[k - j - 1];
        ld.reflection.push_back(kappa);
        ld.innovation_variance.push_back(ld.innovation_variance.back() * (1.0 - kappa * kappa));
    }
    ld.phi = std::move(phi);
    return ld;
}

namespace {

double sample_mean(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

void check_yule_walker_order(std::span<const double> x, std::size_t p, const char* who) {
    if (2 * p >= x.size()) {
        throw std::invalid_argument(std::string(who) + ": order " + std::to_string(p) +
                                    " must be less than N/2 (N=" + std::to_string(x.size()) +
                                    ")");
    }
}

ArModel white_noise_model(std::span<const double> x, ArEstimator method) {
    const auto gamma = sample_autocovariance(x, 0);
    if (!(gamma[0] > 0.0)) {
        throw ZeroVariance("fit_ar: input is constant");
    }
    ArModel m;
    m.sigma2 = gamma[0];
    m.mean = sample_mean(x);
    m.estimation_method = to_string(method);
    m.n_used = x.size();
    return m;
}

}  // namespace

ArModel fit_ar_yule_walker(std::span<const double> x, std::size_t p) {
    check_yule_walker_order(x, p, "fit_ar_yule_walker");
    const auto gamma = sample_autocovariance(x, p);
    if (!(gamma[0] > 0.0)) {
        throw ZeroVariance("fit_ar_yule_walker: input is constant");
    }
    const auto ld = levinson_durbin(gamma, p);
    ArModel m;
    m.phi = ld.phi;
    m.sigma2 = ld.innovation_variance.back();
    m.mean = sample_mean(x);
    m.estimation_method = to_string(ArEstimator::yule_walker);
    m.n_used = x.size();
    m.stationary = analyze_roots(m).stationary;
    return m;
}

ArModel fit_ar_least_squares(std::span<const double> x, std::size_t p) {
    const std::size_t n = x.size();
    if (p == 0 || p + 1 >= n) {
        throw std::invalid_argument("fit_ar_least_squares: need 1 <= p < N-1, got p=" +
                                    std::to_string(p) + ", N=" + std::to_string(n));
    }
    const std::size_t rows = n - p;
    detail::Matrix design(rows, p + 1);
    std::vector<double> target(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t t = r + p;
        design(r, 0) = 1.0;
        for (std::size_t j = 1; j <= p; ++j) design(r, j) = x[t - j];
        target[r] = x[t];
    }
    const auto sol = detail::least_squares(std::move(design), target);

    ArModel m;
    m.phi.assign(sol.coefficients.begin() + 1, sol.coefficients.end());
    m.sigma2 = sol.sse / static_cast<double>(rows);
    double phi_sum = 0.0;
    for (double c : m.phi) phi_sum += c;
    const double intercept = sol.coefficients[0];
    m.mean = std::abs(1.0 - phi_sum) > 1e-12 ? intercept / (1.0 - phi_sum) : sample_mean(x);
    m.estimation_method = to_string(ArEstimator::least_squares);
    m.n_used = rows;
    m.stationary = analyze_roots(m).stationary;
    return m;
}

ArModel fit_ar(std::span<const double> x, std::size_t p, ArEstimator method) {
    if (p == 0) {
        return white_noise_model(x, method);
    }
    return method == ArEstimator::yule_walker ? fit_ar_yule_walker(x, p)
                                              : fit_ar_least_squares(x, p);
}

std::size_t default_max_order(std::size_t n) {
    if (n < 2) return 0;
    return static_cast<std::size_t>(std::floor(10.0 * std::log10(static_cast<double>(n))));
}

std::size_t argmin_aic(std::span<const AicRow> rows) {
    std::optional<std::size_t> best;
    double best_aic = std::numeric_limits<double>::infinity();
    for (const auto& row : rows) {
        if (row.error || !std::isfinite(row.aic)) continue;
        if (!best || row.aic < best_aic || (row.aic == best_aic && row.order < *best)) {
            best = row.order;
            best_aic = row.aic;
        }
    }
    if (!best) {
        throw DegenerateFit("select_order_aic: every candidate order failed");
    }
    return *best;
}

AicTable select_order_aic(std::span<const double> x, std::size_t max_order, ArEstimator method) {
    check_yule_walker_order(x, max_order, "select_order_aic");
    const double nd = static_cast<double>(x.size());
    AicTable table;
    table.n = x.size();
    table.method = method;

    auto record = [&](std::size_t k, double sigma2) {
        AicRow row{k, sigma2, std::numeric_limits<double>::quiet_NaN(), std::nullopt};
        if (sigma2 > 0.0) {
            row.aic = std::log(sigma2) + 2.0 * static_cast<double>(k) / nd;
        } else {
            row.error = "non-positive innovation variance";
        }
        table.rows.push_back(std::move(row));
    };
    auto fail = [&](std::size_t k, const std::string& why) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        table.rows.push_back(AicRow{k, nan, nan, why});
    };

    if (method == ArEstimator::yule_walker) {
        const auto gamma = sample_autocovariance(x, max_order);
        if (!(gamma[0] > 0.0)) {
            throw ZeroVariance("select_order_aic: input is constant");
        }
        // A recursion breakdown at order k invalidates every higher order too.
        record(0, gamma[0]);
        for (std::size_t k = 1; k <= max_order; ++k) {
            try {
                record(k, levinson_durbin(gamma, k).innovation_variance.back());
            } catch (const DegenerateFit& e) {
                for (std::size_t j = k; j <= max_order; ++j) fail(j, e.what());
                break;
            }
        }
    } else {
        for (std::size_t k = 0; k <= max_order; ++k) {
            try {
                record(k, fit_ar(x, k, method).sigma2);
            } catch (const std::exception& e) {
                fail(k, e.what());
            }
        }
    }
    table.selected_order = argmin_aic(table.rows);
    return table;
}

namespace {

// Zeros of the monic polynomial z^p + c[0] z^{p-1} + ... + c[p-1]
// by Aberth-Ehrlich simultaneous iteration.
std::vector<std::complex<double>> monic_roots(std::span<const double> c) {
    using cd = std::complex<double>;
    const std::size_t p = c.size();
    auto eval = [&](cd z, cd& deriv) {
        cd val = 1.0;
        deriv = 0.0;
        for (std::size_t i = 0; i < p; ++i) {
            deriv = deriv * z + val;
            val = val * z + c[i];
        }
        return val;
    };
    double bound = 0.0;
    for (double v : c) bound = std::max(bound, std::abs(v));
    const double radius = 1.0 + bound;

    std::vector<cd> z(p);
    for (std::size_t i = 0; i < p; ++i) {
        const double angle = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.25) /
                             static_cast<double>(p);
        z[i] = std::polar(0.5 * radius, angle);
    }
    for (int iter = 0; iter < 500; ++iter) {
        double max_step = 0.0;
        for (std::size_t i = 0; i < p; ++i) {
            cd deriv;
            const cd val = eval(z[i], deriv);
            if (val == 0.0) continue;
            const cd ratio = val / deriv;
            cd repulsion = 0.0;
            for (std::size_t j = 0; j < p; ++j) {
                if (j != i) repulsion += 1.0 / (z[i] - z[j]);
            }
            const cd step = ratio / (1.0 - ratio * repulsion);
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        if (max_step < 1e-15) break;
    }
    // Newton polish on the undeflated polynomial.
    for (auto& zi : z) {
        for (int k = 0; k < 3; ++k) {
            cd deriv;
            const cd val = eval(zi, deriv);
            if (std::abs(deriv) == 0.0) break;
            zi -= val / deriv;
        }
    }
    return z;
}

}  // namespace

std::vector<std::complex<double>> characteristic_roots(const ArModel& model) {
    std::size_t p = model.order();
    while (p > 0 && model.phi[p - 1] == 0.0) --p;
    if (p == 0) return {};
    // Poles (reciprocal roots) solve z^p - φ_1 z^{p-1} - ... - φ_p = 0.
    std::vector<double> c(p);
    for (std::size_t i = 0; i < p; ++i) c[i] = -model.phi[i];
    auto poles = monic_roots(c);
    std::vector<std::complex<double>> roots;
    roots.reserve(p);
    for (const auto& pole : poles) roots.push_back(1.0 / pole);
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        const double ma = std::abs(a);
        const double mb = std::abs(b);
        if (ma != mb) return ma < mb;
        return a.imag() < b.imag();
    });
    return roots;
}

RootSummary analyze_roots(std::span<const double> phi) {
    ArModel m;
    m.phi.assign(phi.begin(), phi.end());
    return analyze_roots(m);
}

RootSummary analyze_roots(const ArModel& model) {
    RootSummary s;
    s.roots = characteristic_roots(model);
    s.min_modulus = std::numeric_limits<double>::infinity();
    for (const auto& r : s.roots) {
        const double mod = std::abs(r);
        s.min_modulus = std::min(s.min_modulus, mod);
        if (std::abs(mod - 1.0) <= kUnitRootTolerance) s.unit_root = true;
    }
    s.stationary = s.min_modulus > 1.0 + kUnitRootTolerance;
    return s;
}

std::vector<double> psi_weights(const ArModel& model, std::size_t count) {
    std::vector<double> h(count, 0.0);
    if (count == 0) return h;
    h[0] = 1.0;
    const std::size_t p = model.order();
    for (std::size_t k = 1; k < count; ++k) {
        double s = 0.0;
        for (std::size_t j = 1; j <= std::min(k, p); ++j) s += model.phi[j - 1] * h[k - j];
        h[k] = s;
    }
    return h;
}

std::size_t default_burn_in(const ArModel& model) { return 10 * model.order() + 50; }

namespace {

std::vector<double> ar_recursion(const ArModel& model, std::size_t n, std::uint64_t seed,
                                 std::size_t burn_in) {
    const std::size_t p = model.order();
    const std::size_t total = n + burn_in;
    const double sd = std::sqrt(model.sigma2);
    CounterRng rng(seed);
    std::vector<double> path(total, 0.0);
    for (std::size_t t = 0; t < total; ++t) {
        double v = sd * rng.normal();
        for (std::size_t j = 1; j <= std::min(t, p); ++j) v += model.phi[j - 1] * path[t - j];
        path[t] = v;
    }
    std::vector<double> out(path.begin() + static_cast<std::ptrdiff_t>(burn_in), path.end());
    for (double& v : out) v += model.mean;
    return out;
}

}  // namespace

TimeSeries simulate_ar(const ArModel& model, std::size_t n, std::uint64_t seed,
                       std::optional<std::size_t> burn_in) {
    if (n == 0) {
        throw std::invalid_argument("simulate_ar: n must be positive");
    }
    if (!(model.sigma2 >= 0.0)) {
        throw std::invalid_argument("simulate_ar: sigma2 must be non-negative");
    }
    if (!analyze_roots(model).stationary) {
        throw DomainError("simulate_ar: model is not stationary (use simulate_arima)");
    }
    return TimeSeries(ar_recursion(model, n, seed, burn_in.value_or(default_burn_in(model))));
}

TimeSeries simulate_arima(const ArModel& model, std::size_t d, std::size_t n, std::uint64_t seed,
                          std::span<const double> initial_values) {
    if (d == 0) {
        return simulate_ar(model, n, seed);
    }
    if (n <= d) {
        throw std::invalid_argument("simulate_arima: n must exceed d");
    }
    std::vector<double> iv(initial_values.begin(), initial_values.end());
    if (iv.empty()) iv.assign(d, 0.0);
    const auto increments = simulate_ar(model, n - d, seed);
    return integrate(increments, d, iv);
}

TimeSeries simulate_random_walk(const RandomWalkSpec& spec, std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("simulate_random_walk: n must be positive");
    }
    if (!(spec.innovation_sigma2 >= 0.0)) {
        throw std::invalid_argument("simulate_random_walk: innovation variance must be >= 0");
    }
    const double sd = std::sqrt(spec.innovation_sigma2);
    CounterRng rng(seed);
    std::vector<double> y(n);
    double stochastic = 0.0;
    for (std::size_t t = 1; t <= n; ++t) {
        stochastic += sd * rng.normal();
        y[t - 1] = spec.y0 + spec.drift * static_cast<double>(t) + stochastic;
    }
    return TimeSeries(std::move(y));
}

RandomWalkMoments random_walk_moments(const RandomWalkSpec& spec, std::size_t t, std::size_t k) {
    if (t == 0) {
        throw std::invalid_argument("random_walk_moments: t must be positive");
    }
    if (k > t) {
        throw std::invalid_argument("random_walk_moments: lag k=" + std::to_string(k) +
                                    " exceeds t=" + std::to_string(t));
    }
    const double td = static_cast<double>(t);
    const double kd = static_cast<double>(k);
    return RandomWalkMoments{
        spec.y0 + td * spec.drift,
        td * spec.innovation_sigma2,
        (td - kd) * spec.innovation_sigma2,
        (td - kd) / td,
    };
}

}  // namespace tsa
