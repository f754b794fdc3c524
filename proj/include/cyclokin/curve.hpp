#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "cyclokin/expr.hpp"
#include "cyclokin/linalg.hpp"
#include "cyclokin/polynomial.hpp"

namespace cyclokin {

/// Parametric curve alpha(t) = (a1, a2, a3) plus an optional translation
/// curve C(t), both given as expressions of t, over a closed domain.
/// Immutable after construction.
struct Curve {
    std::array<Expr, 3> components{Expr::constant(0.0), Expr::constant(0.0),
                                   Expr::constant(0.0)};
    std::array<Expr, 3> translation{Expr::constant(0.0), Expr::constant(0.0),
                                    Expr::constant(0.0)};
    double t_lo = 0.0;
    double t_hi = 0.0;

    Vec3 point(double t) const {
        return {evaluate(components[0], t), evaluate(components[1], t),
                evaluate(components[2], t)};
    }
    Vec3 translation_point(double t) const {
        return {evaluate(translation[0], t), evaluate(translation[1], t),
                evaluate(translation[2], t)};
    }
};

enum class CrossSumStatus {
    ExactlyZero,     // certified by symbolic expansion of the numerator
    NumericallyZero, // within 1e-9 * max(1, h^2) at every sample
    Violated,
};

struct AdmissibilityReport {
    CrossSumStatus cross_sum = CrossSumStatus::Violated;
    /// Max |a1 a2 + a2 a3 + a3 a1| over the samples.
    double max_abs = 0.0;
    /// Sample with the largest relative cross-sum (meaningful when
    /// Violated).
    double worst_t = 0.0;
    double worst_value = 0.0;
    /// Expanded numerator of the cross-sum when all components are
    /// rational; identically zero exactly when status is ExactlyZero.
    std::optional<Polynomial> cross_sum_numerator;
    /// Minimum of h(t) = |alpha(t)| over the samples.
    double norm_min = 0.0;
    /// h = 1 within 1e-9 at every sample.
    bool spherical = false;

    bool admissible() const { return cross_sum != CrossSumStatus::Violated; }
};

std::string to_string(CrossSumStatus s);

/// Parse a curve document (JSON): `components` is an array of exactly 3
/// expression strings, `translation` an optional array of 3 (default
/// zero), `domain` an array [t_lo, t_hi]. Throws SchemaError for shape
/// problems and ParseError for malformed expressions.
Curve parse_curve(std::string_view document);

/// Load and parse a curve file.
Curve load_curve(const std::string& path);

/// Built-in curves: "ex41", "ex51", "circle_plus", "circle_minus".
/// Throws UnknownNameError otherwise.
Curve builtin(const std::string& name);

/// The admissible spherical circles S^2 intersect {x+y+z = +-1}:
/// c + rho (u cos(t - phase) + v sin(t - phase)) with c = sign*(1,1,1)/3,
/// rho = sqrt(2/3), u = (1,-1,0)/sqrt(2), v = (1,1,-2)/sqrt(6).
/// sign must be +1 or -1. Domain [0, 2*pi].
Curve spherical_circle(int sign, double phase);

/// Check admissibility: cross-sum condition, distance from the origin,
/// and the spherical test, over `samples` >= 2 uniformly spaced points.
/// Rational components are additionally certified symbolically. Throws
/// OriginError if the curve passes through (near) the origin.
AdmissibilityReport validate(const Curve& curve, int samples);

} // namespace cyclokin
