#include "cyclokin/polynomial.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace cyclokin {

namespace {

void trim(std::vector<double>& c) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
}

} // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

Polynomial Polynomial::constant(double v) { return Polynomial({v}); }

Polynomial Polynomial::variable() { return Polynomial({0.0, 1.0}); }

double Polynomial::coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)]
                                                          : 0.0;
}

double Polynomial::evaluate(double t) const {
    double r = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + *it;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<double> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<double> c = coeffs_;
    for (double& v : c) v = -v;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<double> c(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(int exponent) const {
    Polynomial r = Polynomial::constant(1.0);
    for (int i = 0; i < exponent; ++i) r = r * *this;
    return r;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const double c = coeff(k);
        if (c == 0.0) continue;
        const double a = std::abs(c);
        if (s.empty()) {
            if (c < 0.0) s += "-";
        } else {
            s += c < 0.0 ? " - " : " + ";
        }
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", a);
        const bool unit = (a == 1.0);
        if (k == 0) {
            s += buf;
        } else {
            if (!unit) {
                s += buf;
                s += "*";
            }
            s += k == 1 ? "t" : "t^" + std::to_string(k);
        }
    }
    return s;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return {num * o.den + o.num * den, den * o.den};
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return {num * o.den - o.num * den, den * o.den};
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return {num * o.num, den * o.den};
}

namespace {

std::optional<RationalFunction> convert(const Expr& e, int max_degree) {
    auto guard = [max_degree](std::optional<RationalFunction> r) -> std::optional<RationalFunction> {
        if (!r) return std::nullopt;
        if (r->num.degree() > max_degree || r->den.degree() > max_degree) return std::nullopt;
        return r;
    };
    switch (e.kind()) {
    case ExprKind::Constant:
        return RationalFunction{Polynomial::constant(e.constant_value())};
    case ExprKind::Variable:
        return RationalFunction{Polynomial::variable()};
    case ExprKind::Add: {
        auto a = convert(e.left(), max_degree);
        auto b = convert(e.right(), max_degree);
        if (!a || !b) return std::nullopt;
        return guard(*a + *b);
    }
    case ExprKind::Sub: {
        auto a = convert(e.left(), max_degree);
        auto b = convert(e.right(), max_degree);
        if (!a || !b) return std::nullopt;
        return guard(*a - *b);
    }
    case ExprKind::Mul: {
        auto a = convert(e.left(), max_degree);
        auto b = convert(e.right(), max_degree);
        if (!a || !b) return std::nullopt;
        return guard(*a * *b);
    }
    case ExprKind::Div: {
        auto a = convert(e.left(), max_degree);
        auto b = convert(e.right(), max_degree);
        if (!a || !b || b->num.is_zero()) return std::nullopt;
        return guard(RationalFunction{a->num * b->den, a->den * b->num});
    }
    case ExprKind::Pow: {
        auto a = convert(e.operand(), max_degree);
        if (!a) return std::nullopt;
        int k = e.exponent();
        RationalFunction base = *a;
        if (k < 0) {
            if (base.num.is_zero()) return std::nullopt;
            std::swap(base.num, base.den);
            k = -k;
        }
        if (static_cast<long long>(k) * std::max(base.num.degree(), base.den.degree()) >
            max_degree)
            return std::nullopt;
        return guard(RationalFunction{base.num.pow(k), base.den.pow(k)});
    }
    case ExprKind::Neg: {
        auto a = convert(e.operand(), max_degree);
        if (!a) return std::nullopt;
        return RationalFunction{-a->num, a->den};
    }
    case ExprKind::Sin:
    case ExprKind::Cos:
    case ExprKind::Sqrt:
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace

std::optional<RationalFunction> to_rational(const Expr& expr, int max_degree) {
    return convert(expr, max_degree);
}

} // namespace cyclokin
