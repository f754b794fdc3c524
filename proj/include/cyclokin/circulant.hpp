#pragma once

#include "cyclokin/errors.hpp"
#include "cyclokin/linalg.hpp"

namespace cyclokin {

/// 3x3 circulant matrix, identified with its first row (a1, a2, a3):
///
///     [ a1  a2  a3 ]
///     [ a3  a1  a2 ]
///     [ a2  a3  a1 ]
///
/// Storing only the first row makes closure of products structural: a
/// product of circulants cannot leave the pattern because the pattern is
/// the representation. Dense expansion is an explicit conversion used by
/// oracle tests and for mixed dense work.
struct Circulant3 {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    static Circulant3 diagonal(double d) { return {d, 0.0, 0.0}; }
    static Circulant3 identity() { return diagonal(1.0); }

    Mat3 dense() const;
    /// First row of the transpose; the transpose of a circulant is the
    /// circulant (a1, a3, a2).
    Circulant3 transposed() const { return {a1, a3, a2}; }

    Vec3 apply(const Vec3& v) const;

    Circulant3 operator+(const Circulant3& o) const { return {a1 + o.a1, a2 + o.a2, a3 + o.a3}; }
    Circulant3 operator-(const Circulant3& o) const { return {a1 - o.a1, a2 - o.a2, a3 - o.a3}; }
    Circulant3 operator*(double s) const { return {a1 * s, a2 * s, a3 * s}; }
    Circulant3 operator/(double s) const { return {a1 / s, a2 / s, a3 / s}; }

    double norm_inf() const;
};

/// Homothetic decomposition B = h A of a circulant whose rows are
/// orthogonal (cross_sum = 0): h is the common row norm, A = B / h.
struct Decomposition {
    double h;
    Circulant3 A;
};

Circulant3 from_components(double a1, double a2, double a3);

/// Closed-form circulant determinant a1^3 + a2^3 + a3^3 - 3 a1 a2 a3.
double det(const Circulant3& c);

/// Circulant product; equals the dense matrix product expanded back to
/// first-row form.
Circulant3 mul(const Circulant3& x, const Circulant3& y);

/// Closed-form inverse via the adjugate of the first-row representation.
/// Throws SingularError when |det| <= 1e-12 * max(1, norm_inf^3); the
/// cubic scaling keeps the check invariant under rescaling of c.
Circulant3 inverse(const Circulant3& c);

/// a1 a2 + a2 a3 + a3 a1; also the dot product of any two distinct rows.
double cross_sum(const Circulant3& c);

/// Throws OriginError when the first row vanishes, NotAdmissibleError
/// when |cross_sum| > 1e-9 * h^2.
Decomposition decompose(const Circulant3& c);

/// True when c is orthogonal within tol and fixes (1,1,1)^T within tol.
/// For a circulant the fixed-vector condition reduces to a1+a2+a3 = 1.
bool is_umbrella(const Circulant3& c, double tol);

} // namespace cyclokin
