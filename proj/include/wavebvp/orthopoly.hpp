#pragma once

#include <span>
#include <string>
#include <vector>

#include "wavebvp/polynomial.hpp"

namespace wavebvp {

enum class FamilyTag { Chebyshev, Hermite, Laguerre, Legendre, Gegenbauer };

/// One of the five orthogonal polynomial families. The Gegenbauer parameter
/// must satisfy alpha > -1/2 and alpha != 0; it is ignored by the other tags.
struct Family {
    FamilyTag tag = FamilyTag::Legendre;
    double gegenbauer_alpha = 1.0;

    static Family chebyshev() { return {FamilyTag::Chebyshev, 0.0}; }
    static Family hermite() { return {FamilyTag::Hermite, 0.0}; }
    static Family laguerre() { return {FamilyTag::Laguerre, 0.0}; }
    static Family legendre() { return {FamilyTag::Legendre, 0.0}; }
    static Family gegenbauer(double alpha) { return {FamilyTag::Gegenbauer, alpha}; }

    std::string name() const;    // "chebyshev", "hermite", ...
    std::string abbrev() const;  // "Ch", "He", "La", "Le", "Ge"
};

/// Parses a family name (case-insensitive). Throws std::invalid_argument.
Family family_from_name(const std::string& name, double gegenbauer_alpha = 1.0);

/// Evaluation is capped at this order to keep the recurrences meaningful in
/// double precision.
inline constexpr int kMaxOrder = 64;

/// Throws std::domain_error for an invalid Gegenbauer parameter.
void validate_family(const Family& family);

/// Value of the order-m family polynomial at x, by three-term recurrence.
double poly_value(const Family& family, int m, double x);

/// Monomial coefficients of the order-m family polynomial.
Polynomial poly_coeffs(const Family& family, int m);

/// Integral of x^k times the family weight over [-1,1]. Only the families
/// whose orthogonality domain is [-1,1] are supported; Hermite and Laguerre
/// raise std::domain_error.
double weight_moment(const Family& family, int k);

/// Orthonormalization constant v(m): 1/sqrt of the weighted L2 norm of the
/// order-m polynomial over the family's orthogonality domain.
double norm_constant(const Family& family, int m);

// -------------------------------------------------------------------------
// Series utilities in the family basis. High-order monomial coefficients of
// these polynomials cancel catastrophically when evaluated in doubles, so
// anything order-sensitive evaluates sums sum_j b_j O_j(x) directly through
// the recurrence instead.

/// Recurrence step O_{j+1}(x) = (a x + b) O_j(x) + c O_{j-1}(x).
struct RecurrenceStep {
    double a = 0.0, b = 0.0, c = 0.0;
};
RecurrenceStep recurrence_step(const Family& family, int j);

/// Clenshaw evaluation of sum_j coeffs[j] * O_j(x).
double clenshaw(const Family& family, std::span<const double> coeffs, double x);

/// Coefficients of int_{-1}^{x} sum_j coeffs[j] O_j(u) du in the same basis.
std::vector<double> integrate_series(const Family& family, std::span<const double> coeffs);

}  // namespace wavebvp
