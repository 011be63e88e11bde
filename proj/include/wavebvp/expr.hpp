#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace wavebvp {

/// Parse error with the byte offset of the offending token.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

/// Raised when evaluation leaves the reals: division by zero, ln/sqrt of an
/// out-of-domain argument, or overflow to a non-finite value.
struct EvalError : std::runtime_error {
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
struct ExprNode;
}

/// Immutable scalar expression in the variables t and y.
///
/// Grammar:  expr   := term (("+"|"-") term)*
///           term   := factor (("*"|"/") factor)*
///           factor := "-" factor | power
///           power  := atom ("^" factor)?
///           atom   := NUMBER | "t" | "y" | IDENT "(" expr ")" | "(" expr ")"
/// Functions: exp, ln (alias log), sqrt, sin, cos. "^" is right-associative.
class Expr {
public:
    Expr() = default;

    double operator()(double t, double y) const;
    bool valid() const { return root_ != nullptr; }

    /// True if the expression mentions the variable y (t respectively).
    bool uses_y() const;
    bool uses_t() const;

private:
    explicit Expr(std::shared_ptr<const detail::ExprNode> root) : root_(std::move(root)) {}
    std::shared_ptr<const detail::ExprNode> root_;

    friend Expr parse(const std::string& text);
    friend double eval(const Expr& e, double t, double y);
    friend Expr d_dy(const Expr& e);
    friend std::string to_string(const Expr& e);
};

Expr parse(const std::string& text);
double eval(const Expr& e, double t, double y);

/// Symbolic partial derivative with respect to y. Integer constant exponents
/// use the power rule; a general a^b differentiates through exp(b ln a).
Expr d_dy(const Expr& e);

std::string to_string(const Expr& e);

}  // namespace wavebvp
