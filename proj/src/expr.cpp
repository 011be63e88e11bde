#include "wavebvp/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <utility>

namespace wavebvp {

namespace detail {

enum class Kind { Number, VarT, VarY, Neg, Add, Sub, Mul, Div, Pow, Exp, Ln, Sqrt, Sin, Cos };

struct ExprNode {
    Kind kind;
    double number = 0.0;
    std::shared_ptr<const ExprNode> lhs, rhs;
};

using NodePtr = std::shared_ptr<const ExprNode>;

namespace {

NodePtr make(Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto node = std::make_shared<ExprNode>();
    node->kind = kind;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
}

NodePtr number(double v) {
    auto node = std::make_shared<ExprNode>();
    node->kind = Kind::Number;
    node->number = v;
    return node;
}

bool is_const(const NodePtr& n, double v) { return n->kind == Kind::Number && n->number == v; }

double eval_node(const ExprNode& node, double t, double y);

// Simplifying constructors keep derivatives readable and cheap to evaluate.
NodePtr add(NodePtr a, NodePtr b) {
    if (is_const(a, 0.0)) return b;
    if (is_const(b, 0.0)) return a;
    if (a->kind == Kind::Number && b->kind == Kind::Number) return number(a->number + b->number);
    return make(Kind::Add, std::move(a), std::move(b));
}

NodePtr sub(NodePtr a, NodePtr b) {
    if (is_const(b, 0.0)) return a;
    if (a->kind == Kind::Number && b->kind == Kind::Number) return number(a->number - b->number);
    if (is_const(a, 0.0)) return make(Kind::Neg, std::move(b));
    return make(Kind::Sub, std::move(a), std::move(b));
}

NodePtr mul(NodePtr a, NodePtr b) {
    if (is_const(a, 0.0) || is_const(b, 0.0)) return number(0.0);
    if (is_const(a, 1.0)) return b;
    if (is_const(b, 1.0)) return a;
    if (a->kind == Kind::Number && b->kind == Kind::Number) return number(a->number * b->number);
    return make(Kind::Mul, std::move(a), std::move(b));
}

NodePtr div(NodePtr a, NodePtr b) {
    if (is_const(a, 0.0) && !is_const(b, 0.0)) return number(0.0);
    if (is_const(b, 1.0)) return a;
    if (a->kind == Kind::Number && b->kind == Kind::Number && b->number != 0.0)
        return number(a->number / b->number);
    return make(Kind::Div, std::move(a), std::move(b));
}

NodePtr pow_node(NodePtr a, NodePtr b) {
    if (is_const(b, 1.0)) return a;
    if (is_const(b, 0.0)) return number(1.0);
    return make(Kind::Pow, std::move(a), std::move(b));
}

NodePtr neg(NodePtr a) {
    if (a->kind == Kind::Number) return number(-a->number);
    return make(Kind::Neg, std::move(a));
}

double checked(double v, const char* what) {
    if (!std::isfinite(v)) throw EvalError(std::string("non-finite result in ") + what);
    return v;
}

double eval_node(const ExprNode& node, double t, double y) {
    switch (node.kind) {
        case Kind::Number: return node.number;
        case Kind::VarT: return t;
        case Kind::VarY: return y;
        case Kind::Neg: return -eval_node(*node.lhs, t, y);
        case Kind::Add: return checked(eval_node(*node.lhs, t, y) + eval_node(*node.rhs, t, y), "addition");
        case Kind::Sub: return checked(eval_node(*node.lhs, t, y) - eval_node(*node.rhs, t, y), "subtraction");
        case Kind::Mul: return checked(eval_node(*node.lhs, t, y) * eval_node(*node.rhs, t, y), "multiplication");
        case Kind::Div: {
            const double denom = eval_node(*node.rhs, t, y);
            if (denom == 0.0) throw EvalError("division by zero");
            return checked(eval_node(*node.lhs, t, y) / denom, "division");
        }
        case Kind::Pow: {
            const double base = eval_node(*node.lhs, t, y);
            const double exponent = eval_node(*node.rhs, t, y);
            return checked(std::pow(base, exponent), "power");
        }
        case Kind::Exp: return checked(std::exp(eval_node(*node.lhs, t, y)), "exp");
        case Kind::Ln: {
            const double v = eval_node(*node.lhs, t, y);
            if (v <= 0.0) throw EvalError("ln of non-positive argument");
            return std::log(v);
        }
        case Kind::Sqrt: {
            const double v = eval_node(*node.lhs, t, y);
            if (v < 0.0) throw EvalError("sqrt of negative argument");
            return std::sqrt(v);
        }
        case Kind::Sin: return std::sin(eval_node(*node.lhs, t, y));
        case Kind::Cos: return std::cos(eval_node(*node.lhs, t, y));
    }
    throw EvalError("corrupt expression node");
}

NodePtr derivative(const NodePtr& node) {
    switch (node->kind) {
        case Kind::Number:
        case Kind::VarT: return number(0.0);
        case Kind::VarY: return number(1.0);
        case Kind::Neg: return neg(derivative(node->lhs));
        case Kind::Add: return add(derivative(node->lhs), derivative(node->rhs));
        case Kind::Sub: return sub(derivative(node->lhs), derivative(node->rhs));
        case Kind::Mul:
            return add(mul(derivative(node->lhs), node->rhs), mul(node->lhs, derivative(node->rhs)));
        case Kind::Div:
            return div(sub(mul(derivative(node->lhs), node->rhs), mul(node->lhs, derivative(node->rhs))),
                       mul(node->rhs, node->rhs));
        case Kind::Pow: {
            const NodePtr& base = node->lhs;
            const NodePtr& exponent = node->rhs;
            if (exponent->kind == Kind::Number && exponent->number == std::floor(exponent->number)) {
                // d(a^n) = n a^{n-1} a'
                return mul(number(exponent->number),
                           mul(pow_node(base, number(exponent->number - 1.0)), derivative(base)));
            }
            // d(a^b) = a^b (b' ln a + b a'/a)
            return mul(pow_node(base, exponent),
                       add(mul(derivative(exponent), make(Kind::Ln, base)),
                           mul(exponent, div(derivative(base), base))));
        }
        case Kind::Exp: return mul(make(Kind::Exp, node->lhs), derivative(node->lhs));
        case Kind::Ln: return div(derivative(node->lhs), node->lhs);
        case Kind::Sqrt:
            return div(derivative(node->lhs), mul(number(2.0), make(Kind::Sqrt, node->lhs)));
        case Kind::Sin: return mul(make(Kind::Cos, node->lhs), derivative(node->lhs));
        case Kind::Cos: return neg(mul(make(Kind::Sin, node->lhs), derivative(node->lhs)));
    }
    return nullptr;
}

bool uses_var(const ExprNode& node, Kind var) {
    if (node.kind == var) return true;
    if (node.lhs && uses_var(*node.lhs, var)) return true;
    if (node.rhs && uses_var(*node.rhs, var)) return true;
    return false;
}

// ---------------------------------------------------------------- printing

int precedence(Kind kind) {
    switch (kind) {
        case Kind::Add:
        case Kind::Sub: return 1;
        case Kind::Mul:
        case Kind::Div: return 2;
        case Kind::Neg: return 3;
        case Kind::Pow: return 4;
        default: return 5;
    }
}

void print_node(const ExprNode& node, std::string& out);

void print_child(const ExprNode& child, int min_prec, std::string& out) {
    const bool parens = precedence(child.kind) < min_prec ||
                        (child.kind == Kind::Number && child.number < 0.0 && min_prec > 1);
    if (parens) out += '(';
    print_node(child, out);
    if (parens) out += ')';
}

void print_node(const ExprNode& node, std::string& out) {
    switch (node.kind) {
        case Kind::Number: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", node.number);
            out += buf;
            return;
        }
        case Kind::VarT: out += 't'; return;
        case Kind::VarY: out += 'y'; return;
        case Kind::Neg:
            out += '-';
            print_child(*node.lhs, precedence(Kind::Neg), out);
            return;
        case Kind::Add:
            print_child(*node.lhs, 1, out);
            out += '+';
            print_child(*node.rhs, 2, out);
            return;
        case Kind::Sub:
            print_child(*node.lhs, 1, out);
            out += '-';
            print_child(*node.rhs, 2, out);
            return;
        case Kind::Mul:
            print_child(*node.lhs, 2, out);
            out += '*';
            print_child(*node.rhs, 3, out);
            return;
        case Kind::Div:
            print_child(*node.lhs, 2, out);
            out += '/';
            print_child(*node.rhs, 3, out);
            return;
        case Kind::Pow:
            print_child(*node.lhs, 5, out);
            out += '^';
            print_child(*node.rhs, 4, out);
            return;
        case Kind::Exp: out += "exp("; break;
        case Kind::Ln: out += "ln("; break;
        case Kind::Sqrt: out += "sqrt("; break;
        case Kind::Sin: out += "sin("; break;
        case Kind::Cos: out += "cos("; break;
        default: return;
    }
    print_node(*node.lhs, out);
    out += ')';
}

// ----------------------------------------------------------------- parsing

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    NodePtr run() {
        NodePtr node = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return node;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr parse_expr() {
        NodePtr node = parse_term();
        while (true) {
            if (consume('+')) {
                node = make(Kind::Add, node, parse_term());
            } else if (consume('-')) {
                node = make(Kind::Sub, node, parse_term());
            } else {
                return node;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr node = parse_factor();
        while (true) {
            if (consume('*')) {
                node = make(Kind::Mul, node, parse_factor());
            } else if (consume('/')) {
                node = make(Kind::Div, node, parse_factor());
            } else {
                return node;
            }
        }
    }

    NodePtr parse_factor() {
        if (consume('-')) return make(Kind::Neg, parse_factor());
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (consume('^')) return make(Kind::Pow, base, parse_factor());
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            if (!consume(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        if (pos_ == start || (pos_ == start + 1 && text_[start] == '.'))
            throw ParseError("malformed number", start);
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t exp_pos = pos_ + 1;
            if (exp_pos < text_.size() && (text_[exp_pos] == '+' || text_[exp_pos] == '-')) ++exp_pos;
            if (exp_pos < text_.size() && std::isdigit(static_cast<unsigned char>(text_[exp_pos]))) {
                pos_ = exp_pos;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
        }
        return number(std::stod(text_.substr(start, pos_ - start)));
    }

    NodePtr parse_ident() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name = text_.substr(start, pos_ - start);
        if (peek() == '(') {
            ++pos_;
            NodePtr arg = parse_expr();
            if (!consume(')')) throw ParseError("expected ')'", pos_);
            if (name == "exp") return make(Kind::Exp, arg);
            if (name == "ln" || name == "log") return make(Kind::Ln, arg);
            if (name == "sqrt") return make(Kind::Sqrt, arg);
            if (name == "sin") return make(Kind::Sin, arg);
            if (name == "cos") return make(Kind::Cos, arg);
            throw ParseError("unknown function '" + name + "'", start);
        }
        if (name == "t") return make(Kind::VarT);
        if (name == "y") return make(Kind::VarY);
        throw ParseError("unknown identifier '" + name + "'", start);
    }
};

}  // namespace
}  // namespace detail

double Expr::operator()(double t, double y) const { return eval(*this, t, y); }

bool Expr::uses_y() const { return root_ && detail::uses_var(*root_, detail::Kind::VarY); }
bool Expr::uses_t() const { return root_ && detail::uses_var(*root_, detail::Kind::VarT); }

Expr parse(const std::string& text) {
    detail::Parser parser(text);
    return Expr(parser.run());
}

double eval(const Expr& e, double t, double y) {
    if (!e.root_) throw EvalError("empty expression");
    return detail::eval_node(*e.root_, t, y);
}

Expr d_dy(const Expr& e) {
    if (!e.root_) throw EvalError("empty expression");
    return Expr(detail::derivative(e.root_));
}

std::string to_string(const Expr& e) {
    if (!e.root_) return "";
    std::string out;
    detail::print_node(*e.root_, out);
    return out;
}

}  // namespace wavebvp
