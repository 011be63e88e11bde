#pragma once

#include <vector>

#include "wavebvp/collocation.hpp"
#include "wavebvp/linalg.hpp"
#include "wavebvp/sbvp.hpp"
#include "wavebvp/wavelet.hpp"

namespace wavebvp {

enum class Approach { QA, Newton };

struct SolverConfig {
    Approach approach = Approach::Newton;
    int max_iter = 50;
    double tol = 1e-12;  // max-norm of the iterate update
    // Initial iterate for quasilinearization: empty = constant 0, one entry =
    // that constant, M entries = per-collocation-point values. The Newton
    // approach starts from c = 0 (the boundary interpolant).
    std::vector<double> initial_guess;
};

/// Affine maps from the coefficient vector c to y, y' and y'' that satisfy
/// the boundary condition identically:
///   y''(t,c) = sum_m c_m psi_m(t)
///   Dirichlet:  y'(t,c) = (beta-alpha) + sum c_m (J psi_m(t) - J2 psi_m(1))
///               y (t,c) = (1-t) alpha + t beta
///                         + sum c_m (J2 psi_m(t) - t J2 psi_m(1))
///   Robin:      y'(t,c) = alpha + sum c_m J psi_m(t)
///               y (t,c) = beta/a + (t-1-b/a) alpha
///                         + sum c_m (J2 psi_m(t) - J2 psi_m(1) - (b/a) J psi_m(1))
class BoundaryRepresentation {
public:
    BoundaryRepresentation(WaveletBasis basis, BoundaryCondition bc);

    const WaveletBasis& basis() const { return basis_; }
    const BoundaryCondition& bc() const { return bc_; }
    int size() const { return basis_.size; }

    double j1_at_one(int m) const { return j1_one_[m]; }
    double j2_at_one(int m) const { return j2_one_[m]; }

    // c-independent parts.
    double base_value(double t) const;
    double base_derivative(double t) const;
    // c-linear parts: y(t,c) = base_value(t) + sum_m c_m value_coeff(m,t).
    double value_coeff(int m, double t) const;
    double derivative_coeff(int m, double t) const;

    double value(const CoefficientVector& c, double t) const;
    double derivative(const CoefficientVector& c, double t) const;
    double second_derivative(const CoefficientVector& c, double t) const;

private:
    WaveletBasis basis_;
    BoundaryCondition bc_;
    std::vector<double> j1_one_, j2_one_;
};

struct Solution {
    CoefficientVector c;
    BoundaryRepresentation representation;
    int iterations = 0;
    std::vector<double> update_history;  // max-norm of the change per iteration
    double residual_norm = 0.0;          // max-norm of the final collocation residual
    bool converged = false;

    double value(double t) const { return representation.value(c, t); }
    double derivative(double t) const { return representation.derivative(c, t); }
};

BoundaryRepresentation boundary_representation(const WaveletBasis& basis, const BoundaryCondition& bc);

/// Collocation residual F_l = y''(t_l,c) + (k/t_l) y'(t_l,c) + f(t_l, y(t_l,c)).
std::vector<double> residual(const Problem& problem, const BoundaryRepresentation& rep,
                             const CoefficientVector& c, const Grid& grid);

/// Analytic Jacobian dF_l/dc_m of the collocation residual.
Matrix jacobian(const Problem& problem, const BoundaryRepresentation& rep, const CoefficientVector& c,
                const Grid& grid);

/// Newton-Raphson on the nonlinear collocation system.
Solution solve_newton(const Problem& problem, const WaveletBasis& basis, const SolverConfig& config);

/// Quasilinearization: one linear collocation solve per iteration.
Solution solve_qa(const Problem& problem, const WaveletBasis& basis, const SolverConfig& config);

/// Dispatches on config.approach.
Solution solve(const Problem& problem, const WaveletBasis& basis, const SolverConfig& config);

}  // namespace wavebvp
