#include "cyclokin/motion.hpp"

#include <cmath>
#include <string>

#include "cyclokin/errors.hpp"

namespace cyclokin {

namespace {

// Shared solve path for poles and acceleration centers: X = -M^{-1} v.
// inverse() owns the singularity tolerance, so order-1 centers and poles
// agree bit for bit.
Vec3 solve_center(const Circulant3& M, const Vec3& v) {
    return -(inverse(M).apply(v));
}

} // namespace

MotionFrame::MotionFrame(const Curve& curve, double t, int order)
    : t_(t),
      order_(order),
      B_jets_{Jet(0), Jet(0), Jet(0)},
      C_jets_{Jet(0), Jet(0), Jet(0)},
      h_jet_(0),
      A_jets_{Jet(0), Jet(0), Jet(0)} {
    if (order < 1) throw OrderError("frame order must be >= 1");
    for (std::size_t i = 0; i < 3; ++i) {
        B_jets_[i] = jet_eval(curve.components[i], t, order);
        C_jets_[i] = jet_eval(curve.translation[i], t, order);
    }
    const Jet h2 = B_jets_[0] * B_jets_[0] + B_jets_[1] * B_jets_[1] + B_jets_[2] * B_jets_[2];
    if (std::sqrt(h2.value()) <= 1e-12)
        throw OriginError("curve meets the origin at t = " + std::to_string(t));
    h_jet_ = sqrt(h2);
    for (std::size_t i = 0; i < 3; ++i) A_jets_[i] = B_jets_[i] / h_jet_;
    A_ = {A_jets_[0].value(), A_jets_[1].value(), A_jets_[2].value()};
    lambda_ = h_jet_.derivative(1) / h_jet_.value();
    const Circulant3 A_dot{A_jets_[0].derivative(1), A_jets_[1].derivative(1),
                           A_jets_[2].derivative(1)};
    psi_ = mul(A_.transposed(), A_dot);
}

Circulant3 MotionFrame::B_derivative(int r) const {
    return {B_jets_[0].derivative(r), B_jets_[1].derivative(r), B_jets_[2].derivative(r)};
}

Vec3 MotionFrame::C_derivative(int r) const {
    return {C_jets_[0].derivative(r), C_jets_[1].derivative(r), C_jets_[2].derivative(r)};
}

MotionFrame evaluate_frame(const Curve& curve, double t, int order) {
    return MotionFrame(curve, t, order);
}

Vec3 transform_point(const MotionFrame& frame, const Vec3& X) {
    return frame.B().apply(X) + frame.C();
}

Vec3 inverse_transform(const MotionFrame& frame, const Vec3& Y) {
    return inverse(frame.B()).apply(Y - frame.C());
}

VelocityTriple velocities(const MotionFrame& frame, const Vec3& X, const Vec3& Xdot) {
    VelocityTriple v;
    v.sliding = frame.B_derivative(1).apply(X) + frame.C_derivative(1);
    v.relative = frame.B().apply(Xdot);
    v.absolute = v.sliding + v.relative;
    return v;
}

PolePair pole_point(const MotionFrame& frame) {
    const Circulant3 Bd = frame.B_derivative(1);
    const Vec3 Cd = frame.C_derivative(1);
    PolePair pair;
    try {
        pair.p = solve_center(Bd, Cd);
    } catch (const SingularError&) {
        throw SingularPoleError("det Bdot vanishes at t = " + std::to_string(frame.t()) +
                                ": no unique pole");
    }
    pair.q = frame.B().apply(pair.p) + frame.C();
    return pair;
}

std::vector<PoleSample> pole_curves(const Curve& curve, const std::vector<double>& t_samples) {
    std::vector<PoleSample> out;
    out.reserve(t_samples.size());
    for (double t : t_samples) {
        const MotionFrame frame(curve, t, 1);
        PoleSample s;
        s.t = t;
        s.det_Bdot = regularity(frame);
        try {
            s.pole = pole_point(frame);
        } catch (const SingularPoleError&) {
            s.singular = true;
        }
        out.push_back(s);
    }
    return out;
}

double regularity(const MotionFrame& frame) {
    return det(frame.B_derivative(1));
}

Vec3 acceleration_center(const MotionFrame& frame, int r) {
    if (r < 1) throw OrderError("acceleration center order must be >= 1");
    if (r > frame.order())
        throw OrderError("acceleration center order " + std::to_string(r) +
                         " exceeds frame order " + std::to_string(frame.order()));
    return solve_center(frame.B_derivative(r), frame.C_derivative(r));
}

} // namespace cyclokin
