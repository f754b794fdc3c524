#pragma once

#include <utility>
#include <vector>

#include "cyclokin/errors.hpp"

namespace cyclokin {

/// Truncated Taylor expansion of a scalar function about a point.
///
/// A jet of order R stores R+1 coefficients c_k = f^(k)(t0) / k!, so the
/// k-th derivative is k! * c_k. Storing Taylor coefficients instead of raw
/// derivatives keeps the product and division recurrences overflow-stable.
///
/// Jets are immutable values; every operation returns a fresh jet and is
/// safe to call concurrently.
class Jet {
public:
    /// Zero jet of the given order.
    explicit Jet(int order) : coeffs_(static_cast<std::size_t>(order) + 1, 0.0) {}

    /// Adopt coefficients c_0..c_R directly; the order is coeffs.size() - 1.
    explicit Jet(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

    static Jet constant(double value, int order) {
        Jet j(order);
        j.coeffs_[0] = value;
        return j;
    }

    /// The identity function t |-> t expanded about t0.
    static Jet variable(double t0, int order) {
        Jet j(order);
        j.coeffs_[0] = t0;
        if (order >= 1) j.coeffs_[1] = 1.0;
        return j;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    double coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Plain function value, f(t0).
    double value() const { return coeffs_[0]; }

    /// k-th derivative, k! * c_k. Throws OrderError if k exceeds the order.
    double derivative(int k) const;

    Jet operator-() const;
    Jet operator+(const Jet& o) const;
    Jet operator-(const Jet& o) const;
    Jet operator*(const Jet& o) const;

    /// Power-series division. Throws DomainError when the divisor's value
    /// is exactly zero.
    Jet operator/(const Jet& o) const;

    Jet operator+(double s) const;
    Jet operator-(double s) const;
    Jet operator*(double s) const;
    Jet operator/(double s) const;

private:
    std::vector<double> coeffs_;
};

inline Jet operator+(double s, const Jet& j) { return j + s; }
inline Jet operator*(double s, const Jet& j) { return j * s; }
Jet operator-(double s, const Jet& j);
Jet operator/(double s, const Jet& j);

/// sin and cos share one recurrence; computing them together costs the
/// same as either alone.
std::pair<Jet, Jet> sin_cos(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);

/// Throws DomainError if the value is negative, or zero with order >= 1
/// (the expansion of sqrt is not smooth there).
Jet sqrt(const Jet& a);

/// Integer power, exact exponent. Negative exponents require a nonzero
/// value at the expansion point.
Jet pow(const Jet& a, int exponent);

} // namespace cyclokin
