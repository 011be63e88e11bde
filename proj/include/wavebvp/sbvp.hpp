#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wavebvp/expr.hpp"

namespace wavebvp {

/// y(0) = alpha, y(1) = beta.
struct Dirichlet {
    double alpha = 0.0, beta = 0.0;
};

/// y'(0) = alpha, a y(1) + b y'(1) = beta. Requires a != 0.
struct NeumannRobin {
    double alpha = 0.0, a = 1.0, b = 0.0, beta = 0.0;
};

using BoundaryCondition = std::variant<Dirichlet, NeumannRobin>;

/// A singular two-point boundary value problem
///   y''(t) + (k/t) y'(t) + f(t, y(t)) = 0 on (0, 1],
/// with one of the two boundary treatments above and, when known, an exact
/// solution for error reporting.
struct Problem {
    std::string name;
    double k_sing = 0.0;
    Expr f;    // f(t, y)
    Expr f_y;  // partial of f with respect to y
    BoundaryCondition bc;
    std::optional<Expr> exact;  // exact solution y(t)

    double f_value(double t, double y) const { return eval(f, t, y); }
    double f_y_value(double t, double y) const { return eval(f_y, t, y); }
    bool has_exact() const { return exact.has_value(); }
    double exact_value(double t) const { return eval(*exact, t, 0.0); }
};

/// Built-in benchmark problems: example1 (stellar structure), example2
/// (thermal explosion), example3 (shallow membrane caps), example4 (heat
/// conduction in the human head), and a manufactured problem with solution
/// y = 1 - t^2. Throws std::invalid_argument for unknown names.
Problem builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

/// Reads a problem from a JSON document:
///   {"k": number >= 0, "f": "expr in t,y",
///    "bc": {"type":"dirichlet","alpha":..,"beta":..}
///        | {"type":"robin","alpha":..,"a":..,"b":..,"beta":..},
///    "exact": optional "expr in t", "name": optional string}
/// Throws std::invalid_argument on schema violations and ParseError on
/// malformed expressions.
Problem from_json(const std::string& document);

}  // namespace wavebvp
