#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "cyclokin/jet.hpp"

namespace cyclokin {

enum class ExprKind {
    Constant,
    Variable, // the parameter t
    Add,
    Sub,
    Mul,
    Div,
    Pow, // integer exponent, stored exactly
    Neg,
    Sin,
    Cos,
    Sqrt,
};

/// Immutable expression tree over {constants, t, + - * /, integer ^,
/// unary -, sin, cos, sqrt}. Copies share nodes; all operations are pure.
class Expr {
public:
    static Expr constant(double value);
    static Expr variable();
    static Expr pow(const Expr& base, int exponent);

    ExprKind kind() const;
    double constant_value() const;
    int exponent() const;
    const Expr& left() const;
    const Expr& right() const;
    /// Single operand of Neg/Sin/Cos/Sqrt/Pow.
    const Expr& operand() const;

    /// Fully parenthesized form that re-parses to an equivalent tree.
    std::string to_string() const;

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    friend Expr sin(const Expr& a);
    friend Expr cos(const Expr& a);
    friend Expr sqrt(const Expr& a);

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    static Expr make(ExprKind kind, double value, int exponent, Expr a, Expr b);

    // Empty only inside leaf nodes' unused child slots.
    Expr() = default;
    std::shared_ptr<const Node> node_;
};

// Defined after the class so the children can be Expr by value.
struct Expr::Node {
    ExprKind kind;
    double value = 0.0; // Constant payload
    int exponent = 0;   // Pow payload
    Expr a;             // left / single operand
    Expr b;             // right operand

    Node(ExprKind kind, double value, int exponent, Expr a, Expr b)
        : kind(kind), value(value), exponent(exponent), a(std::move(a)), b(std::move(b)) {}
};

inline ExprKind Expr::kind() const { return node_->kind; }
inline double Expr::constant_value() const { return node_->value; }
inline int Expr::exponent() const { return node_->exponent; }
inline const Expr& Expr::left() const { return node_->a; }
inline const Expr& Expr::right() const { return node_->b; }
inline const Expr& Expr::operand() const { return node_->a; }

/// Parse the expression mini-language:
///   literals, `t`, binary + - * /, `^` with integer exponents, unary -,
///   parentheses, sin cos sqrt. Whitespace is insignificant.
/// Throws ParseError (with byte position) on malformed input.
Expr parse_expression(std::string_view source);

/// Taylor coefficients of `expr` about t0, truncated to `order`.
/// Coefficient 0 is the plain value at t0. Throws DomainError if any
/// sub-expression is singular at t0.
Jet jet_eval(const Expr& expr, double t0, int order);

/// Plain evaluation; identical domain checks as jet_eval at order 0.
double evaluate(const Expr& expr, double t);

} // namespace cyclokin
