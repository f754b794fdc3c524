#include "cyclokin/circulant.hpp"

#include <algorithm>
#include <cmath>

namespace cyclokin {

Mat3 Circulant3::dense() const {
    Mat3 r;
    r.m = {{{a1, a2, a3}, {a3, a1, a2}, {a2, a3, a1}}};
    return r;
}

Vec3 Circulant3::apply(const Vec3& v) const {
    return {a1 * v.x + a2 * v.y + a3 * v.z,
            a3 * v.x + a1 * v.y + a2 * v.z,
            a2 * v.x + a3 * v.y + a1 * v.z};
}

double Circulant3::norm_inf() const {
    return std::max({std::abs(a1), std::abs(a2), std::abs(a3)});
}

Circulant3 from_components(double a1, double a2, double a3) { return {a1, a2, a3}; }

double det(const Circulant3& c) {
    return c.a1 * c.a1 * c.a1 + c.a2 * c.a2 * c.a2 + c.a3 * c.a3 * c.a3 -
           3.0 * c.a1 * c.a2 * c.a3;
}

Circulant3 mul(const Circulant3& x, const Circulant3& y) {
    // First row of the dense product; the remaining rows are its cyclic
    // shifts, which is exactly the closure statement.
    return {x.a1 * y.a1 + x.a2 * y.a3 + x.a3 * y.a2,
            x.a1 * y.a2 + x.a2 * y.a1 + x.a3 * y.a3,
            x.a1 * y.a3 + x.a2 * y.a2 + x.a3 * y.a1};
}

Circulant3 inverse(const Circulant3& c) {
    const double d = det(c);
    const double scale = std::max(1.0, c.norm_inf() * c.norm_inf() * c.norm_inf());
    if (std::abs(d) <= 1e-12 * scale)
        throw SingularError("circulant is singular: det = " + std::to_string(d));
    // Adjugate of the first-row representation.
    return {(c.a1 * c.a1 - c.a2 * c.a3) / d,
            (c.a3 * c.a3 - c.a1 * c.a2) / d,
            (c.a2 * c.a2 - c.a1 * c.a3) / d};
}

double cross_sum(const Circulant3& c) { return c.a1 * c.a2 + c.a2 * c.a3 + c.a3 * c.a1; }

Decomposition decompose(const Circulant3& c) {
    const double h = std::sqrt(c.a1 * c.a1 + c.a2 * c.a2 + c.a3 * c.a3);
    if (h <= 1e-12)
        throw OriginError("curve point at the origin: h = 0, no homothetic factor");
    const double cs = cross_sum(c);
    if (std::abs(cs) > 1e-9 * h * h)
        throw NotAdmissibleError("cross-sum condition violated: a1*a2 + a2*a3 + a3*a1 = " +
                                 std::to_string(cs));
    return {h, c / h};
}

bool is_umbrella(const Circulant3& c, double tol) {
    const Mat3 dense = c.dense();
    const double orth = (dense.transposed() * dense - Mat3::identity()).norm_inf();
    if (orth > tol) return false;
    const Vec3 ones{1.0, 1.0, 1.0};
    const Vec3 r = c.apply(ones) - ones;
    return r.norm_inf() <= tol;
}

} // namespace cyclokin
