#include "wavebvp/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace wavebvp {

namespace {

void trim_trailing_zeros(std::vector<double>& c) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    trim_trailing_zeros(coeffs_);
}

double Polynomial::value(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<double>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::compose_affine(double a, double b) const {
    // Horner in the polynomial ring: result = (...(c_n*(ax+b) + c_{n-1})*(ax+b) + ...).
    Polynomial result;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        std::vector<double> next(result.coeffs_.size() + 1, 0.0);
        for (std::size_t i = 0; i < result.coeffs_.size(); ++i) {
            next[i + 1] += result.coeffs_[i] * a;
            next[i] += result.coeffs_[i] * b;
        }
        if (next.empty()) next.push_back(0.0);
        next[0] += *it;
        result.coeffs_ = std::move(next);
    }
    trim_trailing_zeros(result.coeffs_);
    return result;
}

int Polynomial::degree() const {
    for (std::size_t i = coeffs_.size(); i > 0; --i)
        if (coeffs_[i - 1] != 0.0) return static_cast<int>(i) - 1;
    return -1;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<double> sum(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) sum[i] += other.coeffs_[i];
    return Polynomial(std::move(sum));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (coeffs_.empty() || other.coeffs_.empty()) return Polynomial{};
    std::vector<double> prod(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            prod[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(prod));
}

Polynomial Polynomial::operator*(double s) const {
    std::vector<double> scaled(coeffs_);
    for (double& c : scaled) c *= s;
    return Polynomial(std::move(scaled));
}

}  // namespace wavebvp
