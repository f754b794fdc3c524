#include "cyclokin/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cyclokin/errors.hpp"
#include "cyclokin/expr.hpp"

namespace cyclokin {

SphericalFrame spherical_frame(const Curve& curve, double t) {
    SphericalFrame frame;
    frame.t = t;
    double a[3];
    double ad[3];
    for (std::size_t i = 0; i < 3; ++i) {
        const Jet j = jet_eval(curve.components[i], t, 1);
        a[i] = j.value();
        ad[i] = j.derivative(1);
    }
    const double h = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    if (std::abs(h - 1.0) > 1e-9)
        throw NotSphericalError("|alpha(t)| = " + std::to_string(h) + " at t = " +
                                std::to_string(t) + "; spherical motions need h = 1");
    frame.S = {a[0], a[1], a[2]};
    frame.S_dot = {ad[0], ad[1], ad[2]};
    return frame;
}

double singularity(const Curve& curve, double t) {
    return det(spherical_frame(curve, t).S_dot);
}

DarbouxFrame darboux(const SphericalFrame& sf) {
    DarbouxFrame frame;
    frame.t = sf.t;
    // Dense product on purpose: the skew pattern and the equality of the
    // three components are verified facts here, not representation
    // artifacts.
    frame.Omega = sf.S_dot.dense() * sf.S.transposed().dense();
    frame.omega_vec = {frame.Omega(1, 2), -frame.Omega(0, 2), frame.Omega(0, 1)};
    frame.omega_scalar = (frame.omega_vec.x + frame.omega_vec.y + frame.omega_vec.z) / 3.0;
    return frame;
}

DarbouxFrame darboux(const Curve& curve, double t) {
    return darboux(spherical_frame(curve, t));
}

HelicalAxis helical_axis(const std::vector<DarbouxFrame>& frames) {
    if (frames.empty()) throw Error("helical_axis requires at least one frame");
    const double s = 1.0 / std::sqrt(3.0);
    HelicalAxis result;
    result.axis = {s, s, s};
    for (const DarbouxFrame& f : frames) {
        const Vec3& w = f.omega_vec;
        if (w.norm() == 0.0) continue;
        // atan2 of the rejection against the projection: acos of the
        // normalized dot cannot resolve angles below ~1.5e-8 (one ulp
        // of the cosine), this form is exact down to roundoff.
        const Vec3 crossed{w.y * result.axis.z - w.z * result.axis.y,
                           w.z * result.axis.x - w.x * result.axis.z,
                           w.x * result.axis.y - w.y * result.axis.x};
        const double angle = std::atan2(crossed.norm(), std::abs(w.dot(result.axis)));
        result.max_deviation = std::max(result.max_deviation, angle);
    }
    return result;
}

} // namespace cyclokin
