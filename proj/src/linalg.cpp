#include "tsa/detail/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "tsa/error.hpp"

namespace tsa::detail {

std::vector<double> solve(Matrix a, std::vector<double> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw std::invalid_argument("solve: dimension mismatch");
    }
    double scale = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) scale = std::max(scale, std::abs(a(r, c)));

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        }
        if (!(std::abs(a(pivot, col)) > 1e-13 * scale)) {
            throw DegenerateFit("solve: matrix is numerically singular");
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a(r, col) / a(col, col);
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a(i, c) * x[c];
        x[i] = s / a(i, i);
    }
    return x;
}

LeastSquaresSolution least_squares(Matrix a, std::span<const double> b_in) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b_in.size() != m) {
        throw std::invalid_argument("least_squares: dimension mismatch");
    }
    if (m < n) {
        throw DegenerateFit("least_squares: fewer equations than unknowns");
    }
    const Matrix design = a;
    std::vector<double> b(b_in.begin(), b_in.end());
    std::vector<double> col_norm(n, 0.0);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < m; ++r) col_norm[c] += a(r, c) * a(r, c);
        col_norm[c] = std::sqrt(col_norm[c]);
    }

    std::vector<double> v(m);
    for (std::size_t k = 0; k < n; ++k) {
        double norm = 0.0;
        for (std::size_t r = k; r < m; ++r) norm += a(r, k) * a(r, k);
        norm = std::sqrt(norm);
        if (!(norm > 1e-12 * std::max(col_norm[k], 1e-300))) {
            throw DegenerateFit("least_squares: design matrix is rank deficient");
        }
        const double alpha = a(k, k) > 0.0 ? -norm : norm;
        for (std::size_t r = k; r < m; ++r) v[r] = a(r, k);
        v[k] -= alpha;
        double vnorm2 = 0.0;
        for (std::size_t r = k; r < m; ++r) vnorm2 += v[r] * v[r];
        if (vnorm2 > 0.0) {
            for (std::size_t c = k; c < n; ++c) {
                double dot = 0.0;
                for (std::size_t r = k; r < m; ++r) dot += v[r] * a(r, c);
                const double f = 2.0 * dot / vnorm2;
                for (std::size_t r = k; r < m; ++r) a(r, c) -= f * v[r];
            }
            double dot = 0.0;
            for (std::size_t r = k; r < m; ++r) dot += v[r] * b[r];
            const double f = 2.0 * dot / vnorm2;
            for (std::size_t r = k; r < m; ++r) b[r] -= f * v[r];
        }
    }

    LeastSquaresSolution out;
    out.coefficients.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a(i, c) * out.coefficients[c];
        out.coefficients[i] = s / a(i, i);
    }
    out.residuals.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
        double fitted = 0.0;
        for (std::size_t c = 0; c < n; ++c) fitted += design(r, c) * out.coefficients[c];
        out.residuals[r] = b_in[r] - fitted;
        out.sse += out.residuals[r] * out.residuals[r];
    }
    return out;
}

}  // namespace tsa::detail
