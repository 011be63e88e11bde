#pragma once

#include <vector>

namespace wavebvp {

/// Dense univariate polynomial in monomial form: coeffs()[i] multiplies x^i.
/// An empty (or all-zero) coefficient sequence is the zero polynomial.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    /// Horner evaluation.
    double value(double x) const;

    Polynomial derivative() const;

    /// Coefficients of p(a*x + b).
    Polynomial compose_affine(double a, double b) const;

    /// Degree after trailing-zero trim; -1 for the zero polynomial.
    int degree() const;

    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0.0; }

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(double s) const;

private:
    std::vector<double> coeffs_;
};

}  // namespace wavebvp
