#include "wavebvp/wavelet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wavebvp/linalg.hpp"

namespace wavebvp {

Polynomial antiderivative(const Polynomial& p, int nu) {
    if (nu < 1) throw std::domain_error("antiderivative order must be >= 1");
    std::vector<double> c = p.coeffs().empty() ? std::vector<double>{0.0} : p.coeffs();
    for (int pass = 0; pass < nu; ++pass) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) next[i + 1] = c[i] / static_cast<double>(i + 1);
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

WaveletBasis build_basis(const Family& family, int level, int k_res, int cell) {
    validate_family(family);
    if (level < 0) throw std::invalid_argument("resolution level must be nonnegative");
    if (level > 6) throw std::domain_error("resolution level " + std::to_string(level) +
                                           " gives more than 64 basis functions");
    if (k_res < 1) throw std::invalid_argument("dilation level must be >= 1");
    if (cell < 1 || cell > (1 << (k_res - 1)))
        throw std::invalid_argument("translation index out of range for dilation level");

    WaveletBasis basis;
    basis.family = family;
    basis.k_res = k_res;
    basis.level = level;
    basis.size = 1 << level;
    basis.cell = cell;
    const double two_k = std::exp2(k_res);
    const double n_hat = 2.0 * cell - 1.0;
    basis.support_lo = (n_hat - 1.0) / two_k;
    basis.support_hi = (n_hat + 1.0) / two_k;
    basis.stable_eval = cell == 1;

    const double dilation = std::sqrt(two_k);
    for (int m = 0; m < basis.size; ++m) {
        const double s = dilation * norm_constant(family, m);
        basis.scale.push_back(s);

        Polynomial composed = poly_coeffs(family, m).compose_affine(two_k, -n_hat) * s;
        basis.j1_psi.push_back(antiderivative(composed, 1));
        basis.j2_psi.push_back(antiderivative(composed, 2));
        basis.psi.push_back(std::move(composed));

        std::vector<double> unit(m + 1, 0.0);
        unit[m] = 1.0;
        std::vector<double> i1 = integrate_series(family, unit);
        for (double& v : i1) v /= two_k;
        std::vector<double> i2 = integrate_series(family, i1);
        for (double& v : i2) v /= two_k;
        basis.series_psi.push_back(std::move(unit));
        basis.series_j1.push_back(std::move(i1));
        basis.series_j2.push_back(std::move(i2));
    }
    return basis;
}

double eval_basis(const WaveletBasis& basis, BasisPart part, int m, double t) {
    if (m < 0 || m >= basis.size) throw std::out_of_range("basis index out of range");
    if (basis.stable_eval) {
        const double x = std::exp2(basis.k_res) * t - (2.0 * basis.cell - 1.0);
        switch (part) {
            case BasisPart::Psi: return basis.scale[m] * clenshaw(basis.family, basis.series_psi[m], x);
            case BasisPart::J1: return basis.scale[m] * clenshaw(basis.family, basis.series_j1[m], x);
            case BasisPart::J2: return basis.scale[m] * clenshaw(basis.family, basis.series_j2[m], x);
        }
    }
    switch (part) {
        case BasisPart::Psi: return basis.psi[m].value(t);
        case BasisPart::J1: return basis.j1_psi[m].value(t);
        case BasisPart::J2: return basis.j2_psi[m].value(t);
    }
    return 0.0;
}

namespace {

// Legendre value by direct recurrence, without the public order cap: the
// quadrature rule below needs orders past 64 and the recurrence is stable on
// [-1,1] at any order.
double legendre_value(int n, double x, double& prev_out) {
    double prev = 0.0, cur = 1.0;
    for (int j = 0; j < n; ++j) {
        const double next = ((2.0 * j + 1.0) * x * cur - j * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    prev_out = prev;
    return cur;
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n / 2 + 1; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double pm1;
            const double p = legendre_value(n, x, pm1);
            dp = n * (x * p - pm1) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

namespace {

constexpr int kQuadraturePoints = 128;

struct QuadNode {
    double t;       // point in the support cell
    double lambda;  // quadrature weight including the family weight density
};

std::vector<QuadNode> projection_rule(const WaveletBasis& basis, bool weighted) {
    std::vector<double> gx, gw;
    gauss_legendre(kQuadraturePoints, gx, gw);
    std::vector<QuadNode> rule(kQuadraturePoints);
    const double two_k = std::exp2(basis.k_res);
    const double n_hat = 2.0 * basis.cell - 1.0;
    const FamilyTag tag = basis.family.tag;

    const bool singular_weight = weighted && (tag == FamilyTag::Chebyshev || tag == FamilyTag::Gegenbauer);
    if (singular_weight) {
        // x = cos(theta) turns the endpoint-singular weight into a smooth
        // (or integrable) density in theta.
        const double alpha = tag == FamilyTag::Chebyshev ? 0.0 : basis.family.gegenbauer_alpha;
        for (int q = 0; q < kQuadraturePoints; ++q) {
            const double theta = 0.5 * std::numbers::pi * (gx[q] + 1.0);
            const double x = std::cos(theta);
            const double density = alpha == 0.0 ? 1.0 : std::pow(std::sin(theta), 2.0 * alpha - 1.0);
            rule[q].t = (x + n_hat) / two_k;
            rule[q].lambda = 0.5 * std::numbers::pi * gw[q] * density / two_k;
        }
        return rule;
    }
    const double half_width = 0.5 * (basis.support_hi - basis.support_lo);
    const double mid = 0.5 * (basis.support_hi + basis.support_lo);
    for (int q = 0; q < kQuadraturePoints; ++q) {
        const double t = mid + half_width * gx[q];
        const double x = two_k * t - n_hat;
        double density = 1.0;
        if (weighted && tag == FamilyTag::Hermite) density = std::exp(-x * x);
        if (weighted && tag == FamilyTag::Laguerre) density = std::exp(-x);
        rule[q].t = t;
        rule[q].lambda = half_width * gw[q] * density;
    }
    return rule;
}

}  // namespace

CoefficientVector project(const std::function<double(double)>& f, const WaveletBasis& basis, bool weighted) {
    const int m_count = basis.size;
    const std::vector<QuadNode> rule = projection_rule(basis, weighted);

    std::vector<double> fvals(rule.size());
    for (std::size_t q = 0; q < rule.size(); ++q) {
        fvals[q] = f(rule[q].t);
        if (!std::isfinite(fvals[q]))
            throw std::runtime_error("projection failed: non-finite function value at t = " +
                                     std::to_string(rule[q].t));
    }

    if (!weighted) {
        // Plain unweighted coefficients c_m = int f psi_m dt.
        CoefficientVector c(m_count, 0.0);
        for (int m = 0; m < m_count; ++m) {
            double acc = 0.0;
            for (std::size_t q = 0; q < rule.size(); ++q)
                acc += rule[q].lambda * fvals[q] * eval_basis(basis, BasisPart::Psi, m, rule[q].t);
            c[m] = acc;
        }
        return c;
    }

    // Weighted least-squares fit; identical to the weighted inner products
    // whenever the basis is orthonormal under the mapped weight, and still a
    // proper projection for the families that are not.
    Matrix design(static_cast<int>(rule.size()), m_count);
    std::vector<double> rhs(rule.size());
    for (std::size_t q = 0; q < rule.size(); ++q) {
        const double sqw = std::sqrt(rule[q].lambda);
        for (int m = 0; m < m_count; ++m)
            design(static_cast<int>(q), m) = sqw * eval_basis(basis, BasisPart::Psi, m, rule[q].t);
        rhs[q] = sqw * fvals[q];
    }
    return qr_least_squares(std::move(design), std::move(rhs));
}

double reconstruct(const CoefficientVector& c, const WaveletBasis& basis, double t) {
    if (static_cast<int>(c.size()) != basis.size)
        throw std::invalid_argument("coefficient vector length does not match basis size");
    double acc = 0.0;
    for (int m = 0; m < basis.size; ++m) acc += c[m] * eval_basis(basis, BasisPart::Psi, m, t);
    return acc;
}

}  // namespace wavebvp
