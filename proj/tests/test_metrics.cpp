#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wavebvp/metrics.hpp"

using namespace wavebvp;

namespace {

Solution manufactured_solution(int level = 2) {
    return solve(builtin("manufactured"), build_basis(Family::legendre(), level), SolverConfig{});
}

}  // namespace

TEST_CASE("error report basics") {
    const Solution solution = manufactured_solution();
    const std::vector<double> points{0.0, 0.25, 0.5, 1.0};

    const ErrorReport zero =
        error_report(solution, [&](double t) { return solution.value(t); }, points);
    CHECK(zero.linf == 0.0);
    CHECK(zero.l2 == 0.0);

    // shift the reference by 1 at the first point and 2 at the second
    const std::vector<double> two_points{0.25, 0.75};
    const ErrorReport shifted = error_report(
        solution, [&](double t) { return solution.value(t) + (t < 0.5 ? 1.0 : 2.0); }, two_points);
    CHECK(shifted.linf == doctest::Approx(2.0));
    CHECK(shifted.l2 == doctest::Approx(std::sqrt(5.0)));
    REQUIRE(shifted.pointwise.size() == 2);
    CHECK(shifted.pointwise[0].abs_error == doctest::Approx(1.0));
    CHECK(shifted.pointwise[1].abs_error == doctest::Approx(2.0));

    CHECK_THROWS_AS(error_report(solution, nullptr, points), std::invalid_argument);
}

TEST_CASE("norm inequality") {
    const Solution solution = manufactured_solution();
    for (int n : {1, 7, 33}) {
        const std::vector<double> points = uniform_grid(std::max(n, 2));
        const ErrorReport report =
            error_report(solution, [](double t) { return std::sin(3.0 * t); }, points);
        CHECK(report.linf <= report.l2 + 1e-15);
        CHECK(report.l2 <= std::sqrt(static_cast<double>(points.size())) * report.linf + 1e-15);
    }
}

TEST_CASE("reports are deterministic") {
    const Solution solution = manufactured_solution();
    const std::vector<double> points = uniform_grid(17);
    const auto exact = [](double t) { return 1.0 - t * t; };
    const ErrorReport a = error_report(solution, exact, points);
    const ErrorReport b = error_report(solution, exact, points);
    CHECK(a.linf == b.linf);
    CHECK(a.l2 == b.l2);
}

TEST_CASE("manufactured solutions are exact at every level") {
    const ConvergenceStudy study =
        convergence_study(builtin("manufactured"), Family::legendre(), Approach::Newton, 2, 4);
    REQUIRE(study.rows.size() == 3);
    CHECK(!study.successive);
    for (const ConvergenceRow& row : study.rows) {
        CHECK(row.error_linf <= 1e-10);
        CHECK(row.size == 1 << row.level);
    }
}

TEST_CASE("example1 errors shrink with resolution") {
    const ConvergenceStudy study =
        convergence_study(builtin("example1"), Family::legendre(), Approach::Newton, 1, 5);
    REQUIRE(study.rows.size() == 5);
    // Levels at the double-precision floor (M = 32 solves sit around 1e-12)
    // are exempt from the monotonicity check; spectral accuracy reaches the
    // floor by J = 4.
    constexpr double kFloor = 5e-12;
    for (std::size_t i = 1; i < study.rows.size(); ++i) {
        const double prev = study.rows[i - 1].error_linf;
        const double cur = study.rows[i].error_linf;
        const bool at_floor = prev <= kFloor && cur <= kFloor;
        if (!at_floor) CHECK(cur <= 2.0 * prev);
        CHECK(cur > 0.0);
    }
    // strict decrease over the resolvable range
    CHECK(study.rows[1].error_linf < study.rows[0].error_linf);
    CHECK(study.rows[2].error_linf < study.rows[1].error_linf);
    CHECK(study.rows[3].error_linf < study.rows[2].error_linf);
}

TEST_CASE("problems without exact solutions use successive differences") {
    const ConvergenceStudy study =
        convergence_study(builtin("example3"), Family::legendre(), Approach::Newton, 1, 3);
    CHECK(study.successive);
    REQUIRE(study.rows.size() == 3);
    CHECK(study.rows[1].error_linf < study.rows[0].error_linf);
    CHECK(study.rows[2].error_linf < study.rows[1].error_linf);
}

TEST_CASE("invalid resolution ranges") {
    CHECK_THROWS_AS(convergence_study(builtin("example1"), Family::legendre(), Approach::Newton, 3, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(convergence_study(builtin("example1"), Family::legendre(), Approach::Newton, -1, 2),
                    std::invalid_argument);
}
