#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tsa::detail {

/// Dense row-major matrix, just enough for the small systems used here.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

/// Solves A x = b by Gaussian elimination with partial pivoting.
/// @throws DegenerateFit if A is numerically singular
[[nodiscard]] std::vector<double> solve(Matrix a, std::vector<double> b);

struct LeastSquaresSolution {
    std::vector<double> coefficients;
    std::vector<double> residuals;
    double sse = 0.0;
};

/// min ||A x - b||² via Householder QR.
/// @throws DegenerateFit if A does not have full column rank
[[nodiscard]] LeastSquaresSolution least_squares(Matrix a, std::span<const double> b);

}  // namespace tsa::detail
