#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace sincfred {

/// Row-major dense matrix.
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

    std::span<const double> entries() const { return entries_; }

    std::vector<double> multiply(std::span<const double> x) const;

    /// Maximum absolute row sum.
    double norm_inf() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pivot magnitudes below this are treated as singular.
inline constexpr double kSingularPivot = 1e-300;

/// Solves A x = b by LU factorization with row partial pivoting
/// (largest magnitude in the column, first one on ties).
/// Throws SingularMatrixError when a pivot falls below kSingularPivot.
std::vector<double> solve_dense(DenseMatrix a, std::span<const double> b);

double norm_inf(std::span<const double> v);

/// ||A x - b||_inf
double residual_inf(const DenseMatrix& a, std::span<const double> x, std::span<const double> b);

/// ||A||_inf ||x||_inf + ||b||_inf, the scale for residual checks.
double residual_scale(const DenseMatrix& a, std::span<const double> x, std::span<const double> b);

}  // namespace sincfred
