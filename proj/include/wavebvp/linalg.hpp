#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wavebvp {

/// Dense row-major matrix. Systems here are tiny (M <= 64), so no attempt is
/// made at blocking or sparsity.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

struct SingularMatrixError : std::runtime_error {
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// Solves the square system A x = b by LU with partial pivoting. A pivot of
/// magnitude below 1e-14 raises SingularMatrixError.
std::vector<double> lu_solve(Matrix a, std::vector<double> b);

/// Minimum-norm least-squares solution of the tall system A x ~= b via
/// Householder QR. Requires rows >= cols.
std::vector<double> qr_least_squares(Matrix a, std::vector<double> b);

}  // namespace wavebvp
