#include "wavebvp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wavebvp {

ErrorReport error_report(const Solution& solution, const std::function<double(double)>& exact,
                         std::span<const double> points) {
    if (!exact) throw std::invalid_argument("error_report needs an exact solution");
    ErrorReport report;
    report.pointwise.reserve(points.size());
    double sq = 0.0;
    for (double t : points) {
        const double computed = solution.value(t);
        const double reference = exact(t);
        const double err = std::abs(computed - reference);
        report.pointwise.push_back({t, computed, reference, err});
        report.linf = std::max(report.linf, err);
        sq += err * err;
    }
    report.l2 = std::sqrt(sq);
    return report;
}

std::vector<double> uniform_grid(int n) {
    if (n < 2) throw std::invalid_argument("uniform grid needs at least two points");
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) grid[i] = static_cast<double>(i) / (n - 1);
    return grid;
}

ConvergenceStudy convergence_study(const Problem& problem, const Family& family, Approach approach,
                                   int j_min, int j_max, const SolverConfig& base_config) {
    if (j_min < 0 || j_max < j_min) throw std::invalid_argument("empty resolution range");

    SolverConfig config = base_config;
    config.approach = approach;

    ConvergenceStudy study;
    study.successive = !problem.has_exact();
    const std::vector<double> grid = uniform_grid(33);

    // Without an exact solution each row needs the next-level solve as its
    // reference, so sweep one level past j_max.
    const int j_top = study.successive ? j_max + 1 : j_max;
    std::vector<Solution> solutions;
    solutions.reserve(j_top - j_min + 1);
    for (int j = j_min; j <= j_top; ++j)
        solutions.push_back(solve(problem, build_basis(family, j), config));

    for (int j = j_min; j <= j_max; ++j) {
        const Solution& sol = solutions[j - j_min];
        ConvergenceRow row{j, 1 << j, 0.0, 0.0, sol.iterations};
        double sq = 0.0;
        for (double t : grid) {
            const double err = study.successive
                                   ? std::abs(sol.value(t) - solutions[j - j_min + 1].value(t))
                                   : std::abs(sol.value(t) - problem.exact_value(t));
            row.error_linf = std::max(row.error_linf, err);
            sq += err * err;
        }
        row.error_l2 = std::sqrt(sq);
        study.rows.push_back(row);
    }
    return study;
}

}  // namespace wavebvp
