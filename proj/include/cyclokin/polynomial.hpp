#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclokin/expr.hpp"

namespace cyclokin {

/// Dense univariate polynomial, coefficients ascending by degree.
/// Normalized: trailing exact-zero coefficients are trimmed and the zero
/// polynomial has no coefficients at all, so is_zero() is an exact test.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial constant(double v);
    static Polynomial variable(); // t

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coefficients() const { return coeffs_; }
    double coeff(int k) const;

    double evaluate(double t) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial pow(int exponent) const; // exponent >= 0

    /// Human-readable form, e.g. "2*t^3 - 2*t^2".
    std::string to_string() const;

private:
    std::vector<double> coeffs_;
};

/// Ratio of polynomials. Not reduced to lowest terms; only used for
/// exact zero-testing of numerators, which reduction cannot change.
struct RationalFunction {
    Polynomial num;
    Polynomial den = Polynomial::constant(1.0);

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
};

/// Expand an expression into a rational function when it contains only
/// rational operations (no sin/cos/sqrt). Returns nullopt for
/// non-rational expressions, division by an identically-zero
/// denominator, or intermediate degrees above `max_degree` (guards
/// against pathological exponents).
std::optional<RationalFunction> to_rational(const Expr& expr, int max_degree = 64);

} // namespace cyclokin
