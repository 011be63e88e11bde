#pragma once

#include <functional>
#include <vector>

#include "wavebvp/orthopoly.hpp"
#include "wavebvp/polynomial.hpp"

namespace wavebvp {

using CoefficientVector = std::vector<double>;

enum class BasisPart { Psi, J1, J2 };

/// Wavelet basis psi_m(t) = 2^{k/2} v(m) O_m(2^k t - n_hat) on one dyadic
/// cell, together with its exact one- and two-fold antiderivatives from 0.
///
/// Two equivalent representations are kept. The monomial polynomials are the
/// data model (exact integration, coefficient-level identities). The
/// family-basis series exist because monomial evaluation of the composed
/// polynomials loses all accuracy for orders beyond ~16; every
/// order-sensitive evaluation goes through Clenshaw on the series.
struct WaveletBasis {
    Family family;
    int k_res = 1;  // dilation level k; all solver workflows use k = 1
    int level = 0;  // resolution level J
    int size = 1;   // M = 2^J
    int cell = 1;   // translation index n; n_hat = 2n - 1
    double support_lo = 0.0;
    double support_hi = 1.0;

    std::vector<Polynomial> psi, j1_psi, j2_psi;  // monomials in t, scale folded in

    // Stable evaluation tables: coefficients in O_j(x), x = 2^k t - n_hat,
    // with the 2^{-k nu} integration factors folded in; scale[m] = 2^{k/2} v(m).
    std::vector<std::vector<double>> series_psi, series_j1, series_j2;
    std::vector<double> scale;
    bool stable_eval = true;  // series integrate from the cell edge; valid when cell == 1
};

/// nu-fold iterated integral from 0 (all integration constants zero).
Polynomial antiderivative(const Polynomial& p, int nu);

/// Builds the M = 2^level basis functions. level in [0,6] so that M <= 64.
WaveletBasis build_basis(const Family& family, int level, int k_res = 1, int cell = 1);

/// psi_m, J psi_m or J^2 psi_m at t (the polynomial form; the half-open
/// support endpoint is a measure-zero technicality).
double eval_basis(const WaveletBasis& basis, BasisPart part, int m, double t);

/// Expansion coefficients of f against the basis. With weighted = true this
/// is the orthogonal projection under the family weight composed with the
/// affine map, computed as a weighted least-squares fit on a 128-node
/// Gauss-Legendre rule (Chebyshev/Gegenbauer use the x = cos(theta)
/// substitution to remove the endpoint singularity). For orthonormal
/// families the fit reduces to the weighted inner products c_m = <f, psi_m>.
/// With weighted = false the coefficients are the plain unweighted integrals
/// int f psi_m dt.
CoefficientVector project(const std::function<double(double)>& f, const WaveletBasis& basis,
                          bool weighted = true);

/// sum_m c[m] psi_m(t).
double reconstruct(const CoefficientVector& c, const WaveletBasis& basis, double t);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1,1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace wavebvp
