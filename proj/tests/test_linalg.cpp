#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wavebvp/linalg.hpp"

using namespace wavebvp;

TEST_CASE("identity and diagonal systems") {
    Matrix eye(3, 3);
    for (int i = 0; i < 3; ++i) eye(i, i) = 1.0;
    const std::vector<double> b{1.0, -2.0, 3.5};
    CHECK(lu_solve(eye, b) == b);

    Matrix diag(2, 2);
    diag(0, 0) = 2.0;
    diag(1, 1) = 4.0;
    const std::vector<double> x = lu_solve(diag, {2.0, 8.0});
    CHECK(x[0] == doctest::Approx(1.0));
    CHECK(x[1] == doctest::Approx(2.0));
}

TEST_CASE("construct-then-solve recovers the solution") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 8;
        Matrix a(n, n);
        std::vector<double> x_true(n);
        for (int i = 0; i < n; ++i) {
            x_true[i] = dist(rng);
            for (int j = 0; j < n; ++j) a(i, j) = dist(rng);
            a(i, i) += 4.0;  // keep it comfortably nonsingular
        }
        std::vector<double> b(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b[i] += a(i, j) * x_true[j];
        const std::vector<double> x = lu_solve(a, b);
        double b_norm = 0.0, residual = 0.0;
        for (int i = 0; i < n; ++i) {
            CHECK(std::abs(x[i] - x_true[i]) <= 1e-9);
            double row = 0.0;
            for (int j = 0; j < n; ++j) row += a(i, j) * x[j];
            residual = std::max(residual, std::abs(row - b[i]));
            b_norm = std::max(b_norm, std::abs(b[i]));
        }
        CHECK(residual <= 1e-10 * std::max(1.0, b_norm));
    }
}

TEST_CASE("singular pivots are reported") {
    Matrix a(2, 2);
    a(0, 0) = 1.0;
    a(0, 1) = 1.0;
    a(1, 0) = 1.0;
    a(1, 1) = 1.0;
    CHECK_THROWS_AS(lu_solve(a, {1.0, 2.0}), SingularMatrixError);

    Matrix zero(3, 3);
    CHECK_THROWS_AS(lu_solve(zero, {1.0, 1.0, 1.0}), SingularMatrixError);
}

TEST_CASE("shape validation") {
    Matrix a(2, 3);
    CHECK_THROWS_AS(lu_solve(a, {1.0, 2.0}), std::invalid_argument);
    Matrix b(2, 2);
    CHECK_THROWS_AS(lu_solve(b, {1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("least squares solves consistent tall systems") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const int rows = 20, cols = 5;
    Matrix a(rows, cols);
    std::vector<double> x_true(cols);
    for (double& v : x_true) v = dist(rng);
    std::vector<double> b(rows, 0.0);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            a(i, j) = dist(rng);
            b[i] += a(i, j) * x_true[j];
        }
    }
    const std::vector<double> x = qr_least_squares(a, b);
    for (int j = 0; j < cols; ++j) CHECK(x[j] == doctest::Approx(x_true[j]).epsilon(1e-10));
}

TEST_CASE("least squares minimizes the residual") {
    // Overdetermined inconsistent fit of a line through three points.
    Matrix a(3, 2);
    for (int i = 0; i < 3; ++i) {
        a(i, 0) = 1.0;
        a(i, 1) = static_cast<double>(i);
    }
    const std::vector<double> x = qr_least_squares(a, {0.0, 1.0, 1.0});
    CHECK(x[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(x[1] == doctest::Approx(0.5).epsilon(1e-12));
}
