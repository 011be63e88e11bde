#include "wavebvp/orthopoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wavebvp {

std::string Family::name() const {
    switch (tag) {
        case FamilyTag::Chebyshev: return "chebyshev";
        case FamilyTag::Hermite: return "hermite";
        case FamilyTag::Laguerre: return "laguerre";
        case FamilyTag::Legendre: return "legendre";
        case FamilyTag::Gegenbauer: return "gegenbauer";
    }
    return "?";
}

std::string Family::abbrev() const {
    switch (tag) {
        case FamilyTag::Chebyshev: return "Ch";
        case FamilyTag::Hermite: return "He";
        case FamilyTag::Laguerre: return "La";
        case FamilyTag::Legendre: return "Le";
        case FamilyTag::Gegenbauer: return "Ge";
    }
    return "?";
}

Family family_from_name(const std::string& name, double gegenbauer_alpha) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "chebyshev") return Family::chebyshev();
    if (lower == "hermite") return Family::hermite();
    if (lower == "laguerre") return Family::laguerre();
    if (lower == "legendre") return Family::legendre();
    if (lower == "gegenbauer") return Family::gegenbauer(gegenbauer_alpha);
    throw std::invalid_argument("unknown polynomial family: " + name);
}

void validate_family(const Family& family) {
    if (family.tag == FamilyTag::Gegenbauer) {
        const double a = family.gegenbauer_alpha;
        if (!(a > -0.5) || a == 0.0)
            throw std::domain_error("Gegenbauer parameter must satisfy alpha > -1/2 and alpha != 0");
    }
}

namespace {

void check_order(const Family& family, int m) {
    validate_family(family);
    if (m < 0) throw std::invalid_argument("polynomial order must be nonnegative");
    if (m > kMaxOrder)
        throw std::domain_error("polynomial order " + std::to_string(m) + " exceeds the supported cap of " +
                                std::to_string(kMaxOrder));
}

double log_beta(double p, double q) { return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q); }

}  // namespace

RecurrenceStep recurrence_step(const Family& family, int j) {
    const double n = static_cast<double>(j);
    switch (family.tag) {
        case FamilyTag::Chebyshev:
            return {j == 0 ? 1.0 : 2.0, 0.0, -1.0};
        case FamilyTag::Hermite:
            return {2.0, 0.0, -2.0 * n};
        case FamilyTag::Laguerre:
            return {-1.0 / (n + 1.0), (2.0 * n + 1.0) / (n + 1.0), -n / (n + 1.0)};
        case FamilyTag::Legendre:
            return {(2.0 * n + 1.0) / (n + 1.0), 0.0, -n / (n + 1.0)};
        case FamilyTag::Gegenbauer: {
            const double a = family.gegenbauer_alpha;
            return {2.0 * (n + a) / (n + 1.0), 0.0, -(n + 2.0 * a - 1.0) / (n + 1.0)};
        }
    }
    return {};
}

double poly_value(const Family& family, int m, double x) {
    check_order(family, m);
    double prev = 0.0;
    double cur = 1.0;
    for (int j = 0; j < m; ++j) {
        const RecurrenceStep s = recurrence_step(family, j);
        const double next = (s.a * x + s.b) * cur + s.c * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Polynomial poly_coeffs(const Family& family, int m) {
    check_order(family, m);
    std::vector<double> prev;           // zero polynomial
    std::vector<double> cur = {1.0};    // O_0
    for (int j = 0; j < m; ++j) {
        const RecurrenceStep s = recurrence_step(family, j);
        std::vector<double> next(cur.size() + 1, 0.0);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += s.a * cur[i];
            next[i] += s.b * cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] += s.c * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return Polynomial(std::move(cur));
}

double weight_moment(const Family& family, int k) {
    validate_family(family);
    if (k < 0) throw std::invalid_argument("moment exponent must be nonnegative");
    if (family.tag == FamilyTag::Hermite || family.tag == FamilyTag::Laguerre)
        throw std::domain_error("weight moments are unsupported for " + family.name() +
                                ": its orthogonality domain is unbounded");
    if (k % 2 == 1) return 0.0;
    if (family.tag == FamilyTag::Legendre) return 2.0 / (k + 1.0);
    // Chebyshev is the alpha = 0 member of the Gegenbauer scale.
    const double alpha = family.tag == FamilyTag::Chebyshev ? 0.0 : family.gegenbauer_alpha;
    return std::exp(log_beta((k + 1.0) / 2.0, alpha + 0.5));
}

double norm_constant(const Family& family, int m) {
    check_order(family, m);
    switch (family.tag) {
        case FamilyTag::Chebyshev:
            return m == 0 ? 1.0 / std::sqrt(std::numbers::pi) : std::sqrt(2.0 / std::numbers::pi);
        case FamilyTag::Hermite:
            // ||H_m||^2 = m! 2^m sqrt(pi) under exp(-x^2).
            return std::exp(-0.5 * (std::lgamma(m + 1.0) + m * std::numbers::ln2 +
                                    0.5 * std::log(std::numbers::pi)));
        case FamilyTag::Laguerre:
            return 1.0;  // already orthonormal under exp(-x)
        case FamilyTag::Legendre:
            return std::sqrt(m + 0.5);
        case FamilyTag::Gegenbauer: {
            // ||C_m^a||^2 = pi 2^{1-2a} Gamma(m+2a) / (m! (m+a) Gamma(a)^2).
            const double a = family.gegenbauer_alpha;
            double h;
            if (m == 0) {
                h = std::exp(log_beta(0.5, a + 0.5));
            } else {
                h = std::numbers::pi * std::exp2(1.0 - 2.0 * a) / (m + a) *
                    std::exp(std::lgamma(m + 2.0 * a) - std::lgamma(m + 1.0) - 2.0 * std::lgamma(a));
            }
            return 1.0 / std::sqrt(h);
        }
    }
    return 0.0;
}

double clenshaw(const Family& family, std::span<const double> coeffs, double x) {
    double u1 = 0.0, u2 = 0.0;
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j) {
        const RecurrenceStep s = recurrence_step(family, j);
        const RecurrenceStep s1 = recurrence_step(family, j + 1);
        const double u0 = coeffs[j] + (s.a * x + s.b) * u1 + s1.c * u2;
        u2 = u1;
        u1 = u0;
    }
    return u1;
}

std::vector<double> integrate_series(const Family& family, std::span<const double> coeffs) {
    validate_family(family);
    std::vector<double> out(coeffs.size() + 1, 0.0);
    const double alpha = family.gegenbauer_alpha;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const double b = coeffs[j];
        if (b == 0.0) continue;
        const double n = static_cast<double>(j);
        switch (family.tag) {
            case FamilyTag::Legendre:
                if (j == 0) {
                    out[1] += b;
                } else {
                    out[j + 1] += b / (2.0 * n + 1.0);
                    out[j - 1] -= b / (2.0 * n + 1.0);
                }
                break;
            case FamilyTag::Chebyshev:
                if (j == 0) {
                    out[1] += b;
                } else if (j == 1) {
                    out[0] += b / 4.0;
                    out[2] += b / 4.0;
                } else {
                    out[j + 1] += b / (2.0 * (n + 1.0));
                    out[j - 1] -= b / (2.0 * (n - 1.0));
                }
                break;
            case FamilyTag::Gegenbauer:
                if (j == 0) {
                    out[1] += b / (2.0 * alpha);
                } else {
                    out[j + 1] += b / (2.0 * (n + alpha));
                    out[j - 1] -= b / (2.0 * (n + alpha));
                }
                break;
            case FamilyTag::Hermite:
                out[j + 1] += b / (2.0 * (n + 1.0));
                break;
            case FamilyTag::Laguerre:
                out[j] += b;
                out[j + 1] -= b;
                break;
        }
    }
    // Fix the constant so the definite integral from -1 vanishes there.
    out[0] -= clenshaw(family, out, -1.0);
    return out;
}

}  // namespace wavebvp
