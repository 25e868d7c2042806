#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

/// Adaptive Simpson quadrature on [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13, int depth = 50) {
    auto simpson = [&](double lo, double hi, double flo, double fmid, double fhi) {
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    };
    std::function<double(double, double, double, double, double, double, double, int)> rec =
        [&](double lo, double hi, double flo, double fmid, double fhi, double whole, double eps,
            int d) {
            const double mid = 0.5 * (lo + hi);
            const double lm = 0.5 * (lo + mid);
            const double rm = 0.5 * (mid + hi);
            const double flm = f(lm);
            const double frm = f(rm);
            const double left = simpson(lo, mid, flo, flm, fmid);
            const double right = simpson(mid, hi, fmid, frm, fhi);
            if (d <= 0 || std::abs(left + right - whole) <= 15.0 * eps) {
                return left + right + (left + right - whole) / 15.0;
            }
            return rec(lo, mid, flo, flm, fmid, left, eps / 2.0, d - 1) +
                   rec(mid, hi, fmid, frm, fhi, right, eps / 2.0, d - 1);
        };
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    return rec(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, depth);
}

inline double t_density(double t, double nu) {
    const double logc = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                        0.5 * std::log(nu * std::numbers::pi);
    return std::exp(logc - 0.5 * (nu + 1.0) * std::log1p(t * t / nu));
}

/// Two-sided t tail by integrating the density over [0, |t|].
inline double t_two_sided_by_quadrature(double t, double nu) {
    return 1.0 - 2.0 * integrate([nu](double u) { return t_density(u, nu); }, 0.0, std::abs(t));
}

/// F upper tail. Integrates over u = sqrt(x), where the integrand
/// 2 u^(d1-1) (...) is bounded at 0 even for d1 = 1.
inline double f_sf_by_quadrature(double f, double d1, double d2) {
    const double logc = std::lgamma(0.5 * (d1 + d2)) - std::lgamma(0.5 * d1) -
                        std::lgamma(0.5 * d2) + 0.5 * d1 * std::log(d1 / d2);
    auto g = [=](double u) {
        const double power = d1 == 1.0 ? 0.0 : (d1 - 1.0) * std::log(u);
        return 2.0 * std::exp(logc + power - 0.5 * (d1 + d2) * std::log1p(d1 * u * u / d2));
    };
    return 1.0 - integrate(g, 0.0, std::sqrt(f));
}

/// O(N²) DFT straight from the definition, using long double accumulation.
inline std::vector<std::complex<double>> direct_dft(const std::vector<double>& x, std::size_t n) {
    std::vector<std::complex<double>> out(n);
    const long double two_pi = 2.0L * 3.141592653589793238462643383279502884L;
    for (std::size_t k = 0; k < n; ++k) {
        long double re = 0.0L;
        long double im = 0.0L;
        for (std::size_t t = 0; t < x.size(); ++t) {
            const long double angle = -two_pi * static_cast<long double>((k * t) % n) /
                                      static_cast<long double>(n);
            re += x[t] * std::cos(angle);
            im += x[t] * std::sin(angle);
        }
        out[k] = {static_cast<double>(re), static_cast<double>(im)};
    }
    return out;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    return ev;
}

inline std::vector<double> normal_sample(std::mt19937_64& gen, std::size_t n, double mean = 0.0,
                                         double sd = 1.0) {
    std::normal_distribution<double> dist(mean, sd);
    std::vector<double> x(n);
    for (auto& v : x) v = dist(gen);
    return x;
}

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

/// AR(p) path from mt19937_64 Gaussian innovations, zero mean, burn-in discarded.
inline std::vector<double> ar_path(std::mt19937_64& gen, const std::vector<double>& phi, double sd,
                                   std::size_t n, std::size_t burn = 500) {
    std::normal_distribution<double> dist(0.0, sd);
    std::vector<double> x(n + burn, 0.0);
    for (std::size_t t = 0; t < x.size(); ++t) {
        double v = dist(gen);
        for (std::size_t j = 0; j < phi.size() && j < t; ++j) v += phi[j] * x[t - 1 - j];
        x[t] = v;
    }
    return {x.begin() + static_cast<std::ptrdiff_t>(burn), x.end()};
}

/// Autocovariance γ_k = σ² Σ_j ψ_j ψ_{j+k} from a long truncated MA(∞) expansion.
inline std::vector<double> ar_autocovariance_by_psi(const std::vector<double>& phi, double sigma2,
                                                    std::size_t max_lag, std::size_t terms = 20000) {
    std::vector<double> psi(terms, 0.0);
    psi[0] = 1.0;
    for (std::size_t j = 1; j < terms; ++j)
        for (std::size_t i = 0; i < phi.size() && i < j; ++i) psi[j] += phi[i] * psi[j - 1 - i];
    std::vector<double> g(max_lag + 1, 0.0);
    for (std::size_t k = 0; k <= max_lag; ++k) {
        long double acc = 0.0L;
        for (std::size_t j = 0; j + k < terms; ++j) acc += static_cast<long double>(psi[j]) * psi[j + k];
        g[k] = sigma2 * static_cast<double>(acc);
    }
    return g;
}

/// Large-N law of the AIC-selected order for white noise with maximum order K:
/// N (AIC_k - AIC_{k-1}) behaves like 2 - Z_k² with independent standard normal
/// Z_k, so the selected order is the argmin of that random walk (first on ties).
inline std::vector<double> aic_white_noise_order_law(std::size_t max_order, std::size_t reps = 1000000,
                                                     std::uint64_t seed = 1976) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> z;
    std::vector<double> p(max_order + 1, 0.0);
    for (std::size_t r = 0; r < reps; ++r) {
        double s = 0.0, best = 0.0;
        std::size_t arg = 0;
        for (std::size_t k = 1; k <= max_order; ++k) {
            const double v = z(gen);
            s += 2.0 - v * v;
            if (s < best) {
                best = s;
                arg = k;
            }
        }
        p[arg] += 1.0;
    }
    for (auto& v : p) v /= static_cast<double>(reps);
    return p;
}

}  // namespace oracle
