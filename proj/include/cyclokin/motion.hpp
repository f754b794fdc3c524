#pragma once

#include <array>
#include <vector>

#include "cyclokin/circulant.hpp"
#include "cyclokin/curve.hpp"
#include "cyclokin/jet.hpp"
#include "cyclokin/linalg.hpp"

namespace cyclokin {

/// The homothetic motion Y = B X + C = h A X + C evaluated at one
/// instant. All derivative orders up to the requested order come from a
/// single jet evaluation of the six generating expressions; asking for
/// B, Bdot, ..., B^(R) never re-differentiates.
///
/// Frames are immutable snapshots; evaluating frames at different t is
/// safe to do concurrently.
class MotionFrame {
public:
    MotionFrame(const Curve& curve, double t, int order);

    double t() const { return t_; }
    int order() const { return order_; }

    /// Circulant of the r-th derivatives of the components; r = 0 is B
    /// itself. Throws OrderError when r exceeds the frame order.
    Circulant3 B_derivative(int r) const;
    Circulant3 B() const { return B_derivative(0); }
    Vec3 C_derivative(int r) const;
    Vec3 C() const { return C_derivative(0); }

    double h() const { return h_jet_.value(); }
    const Circulant3& A() const { return A_; }
    /// lambda = hdot / h.
    double lambda() const { return lambda_; }
    /// psi = A^T Adot; skew on the admissible locus, so psi.a1 = 0 and
    /// psi.a3 = -psi.a2 up to roundoff.
    const Circulant3& psi() const { return psi_; }

    const std::array<Jet, 3>& B_jets() const { return B_jets_; }
    const std::array<Jet, 3>& C_jets() const { return C_jets_; }
    const Jet& h_jet() const { return h_jet_; }
    const std::array<Jet, 3>& A_jets() const { return A_jets_; }

private:
    double t_;
    int order_;
    std::array<Jet, 3> B_jets_;
    std::array<Jet, 3> C_jets_;
    Jet h_jet_;
    std::array<Jet, 3> A_jets_;
    Circulant3 A_;
    Circulant3 psi_;
    double lambda_ = 0.0;
};

/// Absolute = sliding + relative, summed exactly as computed.
struct VelocityTriple {
    Vec3 absolute; // Ydot
    Vec3 sliding;  // Bdot X + Cdot
    Vec3 relative; // B Xdot
};

/// Pole in the moving frame (p) and its image in the fixed frame
/// (q = B p + C). p is the unique zero of the sliding velocity.
struct PolePair {
    Vec3 p;
    Vec3 q;
};

/// One sweep sample; `singular` marks instants where det Bdot vanishes
/// within tolerance and no pole exists (pole is zeroed there).
struct PoleSample {
    double t = 0.0;
    double det_Bdot = 0.0;
    bool singular = false;
    PolePair pole;
};

/// Evaluate the motion of an admissible curve at t with jets of the
/// given order (>= 1). Throws OriginError when |alpha(t)| <= 1e-12 and
/// OrderError for order < 1; DomainErrors from the expressions
/// propagate. Admissibility itself is the caller's precondition (see
/// validate); psi is only skew on the admissible locus.
MotionFrame evaluate_frame(const Curve& curve, double t, int order);

/// Y = B X + C.
Vec3 transform_point(const MotionFrame& frame, const Vec3& X);

/// X = B^{-1} (Y - C). det B = +-h^3 > 0 for admissible curves; the
/// SingularError path is defensive.
Vec3 inverse_transform(const MotionFrame& frame, const Vec3& Y);

/// Ydot = (Bdot X + Cdot) + B Xdot for a point X moving with velocity
/// Xdot in the moving frame.
VelocityTriple velocities(const MotionFrame& frame, const Vec3& X, const Vec3& Xdot);

/// Solve Bdot p + Cdot = 0. Throws SingularPoleError when det Bdot
/// vanishes within 1e-12 * max(1, |Bdot|_inf^3).
PolePair pole_point(const MotionFrame& frame);

/// Sample the moving and fixed pole curves. Singular instants are
/// reported per sample instead of aborting; results keep sample order.
std::vector<PoleSample> pole_curves(const Curve& curve, const std::vector<double>& t_samples);

/// det Bdot. Zero marks a singular instant (no unique pole). Equals
/// h^3 det(psi + lambda I); note the sign: for skew psi,
/// det(psi - lambda I) is the negative of that.
double regularity(const MotionFrame& frame);

/// Acceleration center of order r - 1: the solution of
/// B^(r) X + C^(r) = 0. r = 1 reproduces pole_point().p bit for bit
/// (same solve path). Throws OrderError when r < 1 or r > frame.order,
/// SingularError when det B^(r) vanishes within tolerance.
Vec3 acceleration_center(const MotionFrame& frame, int r);

} // namespace cyclokin
