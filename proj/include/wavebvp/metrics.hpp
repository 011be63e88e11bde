#pragma once

#include <functional>
#include <span>
#include <vector>

#include "wavebvp/solver.hpp"

namespace wavebvp {

struct ErrorReport {
    double linf = 0.0;  // max of the abs_error column
    double l2 = 0.0;    // Euclidean norm of the abs_error column (plain sum, no quadrature weights)
    struct Row {
        double t, computed, exact, abs_error;
    };
    std::vector<Row> pointwise;
};

/// Evaluates the solution and the exact reference at the given points.
ErrorReport error_report(const Solution& solution, const std::function<double(double)>& exact,
                         std::span<const double> points);

struct ConvergenceRow {
    int level = 0;      // J
    int size = 0;       // M = 2^J
    double error_linf = 0.0;
    double error_l2 = 0.0;
    int iterations = 0;
};

/// Error-versus-resolution sweep over J in [j_min, j_max] on a fixed 33-point
/// uniform grid. Problems with an exact solution report errors against it;
/// otherwise each row reports the difference between the level-J and
/// level-(J+1) solutions (successive = true).
struct ConvergenceStudy {
    bool successive = false;
    std::vector<ConvergenceRow> rows;
};

ConvergenceStudy convergence_study(const Problem& problem, const Family& family, Approach approach,
                                   int j_min, int j_max, const SolverConfig& base_config = {});

/// The fixed evaluation grid used by convergence studies.
std::vector<double> uniform_grid(int n);

}  // namespace wavebvp
