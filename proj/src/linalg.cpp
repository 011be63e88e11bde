#include "wavebvp/linalg.hpp"

#include <cmath>
#include <cstdlib>

namespace wavebvp {

std::vector<double> lu_solve(Matrix a, std::vector<double> b) {
    const int n = a.rows();
    if (n != a.cols() || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("lu_solve expects a square system");

    constexpr double kPivotFloor = 1e-14;
    for (int k = 0; k < n; ++k) {
        int pivot_row = k;
        double pivot_mag = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > pivot_mag) {
                pivot_mag = std::abs(a(i, k));
                pivot_row = i;
            }
        }
        if (pivot_mag < kPivotFloor)
            throw SingularMatrixError("singular matrix: pivot " + std::to_string(pivot_mag) + " at column " +
                                      std::to_string(k));
        if (pivot_row != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(pivot_row, j));
            std::swap(b[k], b[pivot_row]);
        }
        for (int i = k + 1; i < n; ++i) {
            const double factor = a(i, k) / a(k, k);
            a(i, k) = 0.0;
            for (int j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
            b[i] -= factor * b[k];
        }
    }
    std::vector<double> x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double acc = b[i];
        for (int j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

std::vector<double> qr_least_squares(Matrix a, std::vector<double> b) {
    const int m = a.rows();
    const int n = a.cols();
    if (m < n || static_cast<int>(b.size()) != m)
        throw std::invalid_argument("qr_least_squares expects rows >= cols");

    for (int k = 0; k < n; ++k) {
        double norm = 0.0;
        for (int i = k; i < m; ++i) norm = std::hypot(norm, a(i, k));
        if (norm == 0.0) throw SingularMatrixError("rank-deficient least-squares system at column " + std::to_string(k));
        if (a(k, k) > 0) norm = -norm;
        // Householder vector v, normalized so v[k] = 1.
        const double vk = a(k, k) - norm;
        std::vector<double> v(m - k);
        v[0] = 1.0;
        for (int i = k + 1; i < m; ++i) v[i - k] = a(i, k) / vk;
        const double tau = -vk / norm;
        a(k, k) = norm;
        for (int i = k + 1; i < m; ++i) a(i, k) = 0.0;
        for (int j = k + 1; j < n; ++j) {
            double dot = 0.0;
            for (int i = k; i < m; ++i) dot += v[i - k] * a(i, j);
            dot *= tau;
            for (int i = k; i < m; ++i) a(i, j) -= dot * v[i - k];
        }
        double dot = 0.0;
        for (int i = k; i < m; ++i) dot += v[i - k] * b[i];
        dot *= tau;
        for (int i = k; i < m; ++i) b[i] -= dot * v[i - k];
    }
    std::vector<double> x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double acc = b[i];
        for (int j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
        if (std::abs(a(i, i)) < 1e-300)
            throw SingularMatrixError("rank-deficient least-squares system at column " + std::to_string(i));
        x[i] = acc / a(i, i);
    }
    return x;
}

}  // namespace wavebvp
