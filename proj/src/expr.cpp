#include "cyclokin/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

namespace cyclokin {

Expr Expr::make(ExprKind kind, double value, int exponent, Expr a, Expr b) {
    return Expr(std::make_shared<const Node>(kind, value, exponent, std::move(a), std::move(b)));
}

Expr Expr::constant(double value) { return make(ExprKind::Constant, value, 0, Expr(), Expr()); }

Expr Expr::variable() { return make(ExprKind::Variable, 0.0, 0, Expr(), Expr()); }

Expr Expr::pow(const Expr& base, int exponent) {
    return make(ExprKind::Pow, 0.0, exponent, base, Expr());
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::make(ExprKind::Add, 0.0, 0, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::make(ExprKind::Sub, 0.0, 0, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::make(ExprKind::Mul, 0.0, 0, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::make(ExprKind::Div, 0.0, 0, a, b); }
Expr operator-(const Expr& a) { return Expr::make(ExprKind::Neg, 0.0, 0, a, Expr()); }
Expr sin(const Expr& a) { return Expr::make(ExprKind::Sin, 0.0, 0, a, Expr()); }
Expr cos(const Expr& a) { return Expr::make(ExprKind::Cos, 0.0, 0, a, Expr()); }
Expr sqrt(const Expr& a) { return Expr::make(ExprKind::Sqrt, 0.0, 0, a, Expr()); }

std::string Expr::to_string() const {
    switch (kind()) {
    case ExprKind::Constant: {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", constant_value());
        return buf;
    }
    case ExprKind::Variable: return "t";
    case ExprKind::Add: return "(" + left().to_string() + " + " + right().to_string() + ")";
    case ExprKind::Sub: return "(" + left().to_string() + " - " + right().to_string() + ")";
    case ExprKind::Mul: return "(" + left().to_string() + " * " + right().to_string() + ")";
    case ExprKind::Div: return "(" + left().to_string() + " / " + right().to_string() + ")";
    case ExprKind::Pow:
        return "(" + operand().to_string() + "^" +
               (exponent() < 0 ? "(" + std::to_string(exponent()) + ")" : std::to_string(exponent())) +
               ")";
    case ExprKind::Neg: return "(-" + operand().to_string() + ")";
    case ExprKind::Sin: return "sin(" + operand().to_string() + ")";
    case ExprKind::Cos: return "cos(" + operand().to_string() + ")";
    case ExprKind::Sqrt: return "sqrt(" + operand().to_string() + ")";
    }
    return {};
}

namespace {

// Recursive-descent parser. Precedence, loosest first: + -, * /,
// unary -, ^. `-t^2` therefore reads as -(t^2).
class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expr parse() {
        Expr e = parse_sum();
        skip_ws();
        if (pos_ != src_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_), pos_);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    Expr parse_sum() {
        Expr e = parse_term();
        for (;;) {
            if (consume('+')) e = e + parse_term();
            else if (consume('-')) e = e - parse_term();
            else return e;
        }
    }

    Expr parse_term() {
        Expr e = parse_unary();
        for (;;) {
            if (consume('*')) e = e * parse_unary();
            else if (consume('/')) e = e / parse_unary();
            else return e;
        }
    }

    Expr parse_unary() {
        if (consume('-')) return -parse_unary();
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_atom();
        if (consume('^')) return Expr::pow(base, parse_exponent());
        return base;
    }

    int parse_exponent() {
        skip_ws();
        const bool parenthesized = consume('(');
        skip_ws();
        bool negative = false;
        if (consume('-')) negative = true;
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer exponent");
        int value = 0;
        const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (ec != std::errc() || ptr != src_.data() + pos_) fail("exponent out of range");
        if (parenthesized && !consume(')')) fail("expected ')' after exponent");
        return negative ? -value : value;
    }

    Expr parse_atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = parse_sum();
            if (!consume(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
        fail(std::string("unexpected character '") + c + "'");
    }

    Expr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
            ++pos_;
        // optional exponent part of the literal
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
            if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
                pos_ = p;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            }
        }
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (ec != std::errc() || ptr != src_.data() + pos_) {
            pos_ = start;
            fail("malformed number literal");
        }
        return Expr::constant(value);
    }

    Expr parse_name() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string_view name = src_.substr(start, pos_ - start);
        if (name == "t") return Expr::variable();
        if (name == "sin" || name == "cos" || name == "sqrt") {
            if (!consume('(')) fail("expected '(' after function name");
            Expr arg = parse_sum();
            if (!consume(')')) fail("expected ')'");
            if (name == "sin") return sin(arg);
            if (name == "cos") return cos(arg);
            return sqrt(arg);
        }
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
    }
};

} // namespace

Expr parse_expression(std::string_view source) { return Parser(source).parse(); }

Jet jet_eval(const Expr& expr, double t0, int order) {
    switch (expr.kind()) {
    case ExprKind::Constant: return Jet::constant(expr.constant_value(), order);
    case ExprKind::Variable: return Jet::variable(t0, order);
    case ExprKind::Add: return jet_eval(expr.left(), t0, order) + jet_eval(expr.right(), t0, order);
    case ExprKind::Sub: return jet_eval(expr.left(), t0, order) - jet_eval(expr.right(), t0, order);
    case ExprKind::Mul: return jet_eval(expr.left(), t0, order) * jet_eval(expr.right(), t0, order);
    case ExprKind::Div: return jet_eval(expr.left(), t0, order) / jet_eval(expr.right(), t0, order);
    case ExprKind::Pow: return pow(jet_eval(expr.operand(), t0, order), expr.exponent());
    case ExprKind::Neg: return -jet_eval(expr.operand(), t0, order);
    case ExprKind::Sin: return sin(jet_eval(expr.operand(), t0, order));
    case ExprKind::Cos: return cos(jet_eval(expr.operand(), t0, order));
    case ExprKind::Sqrt: return sqrt(jet_eval(expr.operand(), t0, order));
    }
    throw Error("corrupt expression node");
}

double evaluate(const Expr& expr, double t) { return jet_eval(expr, t, 0).value(); }

} // namespace cyclokin
