#include "sincfred/dense.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace sincfred {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("DenseMatrix::multiply: dimension mismatch");
    }
    std::vector<double> y(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        double sum = 0.0;
        const auto r = row(i);
        for (std::size_t j = 0; j < cols_; ++j) {
            sum += r[j] * x[j];
        }
        y[i] = sum;
    }
    return y;
}

double DenseMatrix::norm_inf() const {
    double best = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double sum = 0.0;
        for (double v : row(i)) {
            sum += std::abs(v);
        }
        best = std::max(best, sum);
    }
    return best;
}

std::vector<double> solve_dense(DenseMatrix a, std::span<const double> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) {
        throw std::invalid_argument("solve_dense: matrix is not square");
    }
    if (b.size() != n) {
        throw std::invalid_argument("solve_dense: right-hand side length mismatch");
    }
    std::vector<double> x(b.begin(), b.end());

    // In-place elimination; the row swaps are applied to x directly.
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double pivot_abs = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > pivot_abs) {
                pivot_abs = v;
                pivot = i;
            }
        }
        if (!(pivot_abs >= kSingularPivot)) {
            throw SingularMatrixError("solve_dense: singular matrix (pivot " +
                                      std::to_string(pivot_abs) + " at column " +
                                      std::to_string(k) + ")");
        }
        if (pivot != k) {
            std::swap_ranges(a.row(k).begin(), a.row(k).end(), a.row(pivot).begin());
            std::swap(x[k], x[pivot]);
        }
        const auto pivot_row = a.row(k);
        const double diag = pivot_row[k];
        for (std::size_t i = k + 1; i < n; ++i) {
            auto r = a.row(i);
            const double factor = r[k] / diag;
            if (factor == 0.0) {
                continue;
            }
            r[k] = factor;
            for (std::size_t j = k + 1; j < n; ++j) {
                r[j] -= factor * pivot_row[j];
            }
            x[i] -= factor * x[k];
        }
    }
    for (std::size_t k = n; k-- > 0;) {
        const auto r = a.row(k);
        double sum = x[k];
        for (std::size_t j = k + 1; j < n; ++j) {
            sum -= r[j] * x[j];
        }
        x[k] = sum / r[k];
    }
    return x;
}

double norm_inf(std::span<const double> v) {
    double best = 0.0;
    for (double e : v) {
        best = std::max(best, std::abs(e));
    }
    return best;
}

double residual_inf(const DenseMatrix& a, std::span<const double> x, std::span<const double> b) {
    const auto ax = a.multiply(x);
    double best = 0.0;
    for (std::size_t i = 0; i < ax.size(); ++i) {
        best = std::max(best, std::abs(ax[i] - b[i]));
    }
    return best;
}

double residual_scale(const DenseMatrix& a, std::span<const double> x, std::span<const double> b) {
    return a.norm_inf() * norm_inf(x) + norm_inf(b);
}

}  // namespace sincfred
