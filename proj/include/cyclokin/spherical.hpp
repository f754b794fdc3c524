#pragma once

#include <vector>

#include "cyclokin/circulant.hpp"
#include "cyclokin/curve.hpp"
#include "cyclokin/linalg.hpp"

namespace cyclokin {

/// S and Sdot at one instant of a spherical cyclic motion (h = 1, so
/// B = S is orthogonal on the admissible locus).
struct SphericalFrame {
    double t = 0.0;
    Circulant3 S;
    Circulant3 S_dot;
};

/// The instantaneous rotation of a spherical cyclic motion. Layout of
/// the skew matrix follows
///
///     [    0    W_z  -W_y ]
///     [ -W_z      0   W_x ]
///     [  W_y   -W_x     0 ]
///
/// so W_z sits at entry (1,2). This is the transpose of the more common
/// convention; it is kept so the worked closed forms reproduce verbatim.
struct DarbouxFrame {
    double t = 0.0;
    Mat3 Omega;          // Sdot S^T, computed dense
    Vec3 omega_vec;      // (W_x, W_y, W_z) per the layout above
    double omega_scalar; // omega with omega_vec = omega * (1,1,1)
};

/// Axis of the fixed-axis helical characterization plus the largest
/// angle any frame's Darboux vector makes with it. The angle is taken
/// against the axis as an unsigned line, since omega may carry either
/// sign; a zero Darboux vector contributes deviation 0.
struct HelicalAxis {
    Vec3 axis;
    double max_deviation = 0.0;
};

/// Evaluate S and Sdot at t. Throws NotSphericalError when |alpha(t)|
/// deviates from 1 by more than 1e-9. Callers are expected to have
/// validated the curve (spherical and admissible); this checks only the
/// pointwise radius.
SphericalFrame spherical_frame(const Curve& curve, double t);

/// det Sdot. Vanishes identically for admissible spherical curves (the
/// derivative row sum is zero on the x+y+z = const branches), so every
/// spherical cyclic motion is singular.
double singularity(const Curve& curve, double t);

/// Omega = Sdot S^T with the vector extracted per the DarbouxFrame
/// layout; omega_scalar is the mean of the three components, which agree
/// within roundoff for admissible spherical curves.
DarbouxFrame darboux(const Curve& curve, double t);
DarbouxFrame darboux(const SphericalFrame& frame);

/// The common axis (1,1,1)/sqrt(3) and the maximum line angle between
/// the frames' Darboux vectors and that axis. Throws Error on an empty
/// input.
HelicalAxis helical_axis(const std::vector<DarbouxFrame>& frames);

} // namespace cyclokin
