#pragma once

#include <algorithm>
#include <cmath>

namespace isokit {

// Affine point of the isotropic 3-space. The degenerate metric lives in the
// operations (only the first two coordinates ever enter a length), not in
// the storage. All coordinates are assumed finite.
struct Point3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
};

// Tangent and derivative vectors share the representation.
using Vec3 = Point3;

struct Vec2 {
    double x1 = 0.0;
    double x2 = 0.0;
};

// Projection in the x3 direction onto the plane. Carries the entire metric
// content of the geometry.
inline Vec2 top_view(const Point3& x) {
    return {x.x1, x.x2};
}

// Isotropic distance: Euclidean distance of the top views. This is a
// pseudo-metric; distinct points on a vertical line have distance zero.
inline double i_distance(const Point3& x, const Point3& y) {
    return std::hypot(y.x1 - x.x1, y.x2 - x.x2);
}

// Six-parameter isotropic congruence transformation: a Euclidean motion of
// the top view combined with an affine shear in the x3 direction.
struct Motion {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double e = 0.0;
    double phi = 0.0;  // rotation angle of the top view, radians
};

inline Point3 apply_motion(const Motion& m, const Point3& x) {
    const double cp = std::cos(m.phi);
    const double sp = std::sin(m.phi);
    return {m.a + x.x1 * cp - x.x2 * sp,
            m.b + x.x1 * sp + x.x2 * cp,
            m.c + m.d * x.x1 + m.e * x.x2 + x.x3};
}

// Applies the linear part of a motion only; this is how tangent vectors and
// chart partials transform.
inline Vec3 apply_motion_linear(const Motion& m, const Vec3& v) {
    const double cp = std::cos(m.phi);
    const double sp = std::sin(m.phi);
    return {v.x1 * cp - v.x2 * sp,
            v.x1 * sp + v.x2 * cp,
            m.d * v.x1 + m.e * v.x2 + v.x3};
}

// compose(m2, m1) applies m1 first, then m2; the group is closed under this.
inline Motion compose(const Motion& m2, const Motion& m1) {
    const double c2 = std::cos(m2.phi);
    const double s2 = std::sin(m2.phi);
    Motion out;
    out.a = m2.a + m1.a * c2 - m1.b * s2;
    out.b = m2.b + m1.a * s2 + m1.b * c2;
    out.c = m1.c + m2.c + m2.d * m1.a + m2.e * m1.b;
    const double c1 = std::cos(m1.phi);
    const double s1 = std::sin(m1.phi);
    out.d = m1.d + m2.d * c1 + m2.e * s1;
    out.e = m1.e - m2.d * s1 + m2.e * c1;
    out.phi = m1.phi + m2.phi;
    return out;
}

// True iff m preserves the isotropic distance of x and y to within a
// relative tolerance. Every Motion satisfies this; the helper makes the
// isometry property testable.
inline bool motion_preserves_distance(const Motion& m, const Point3& x, const Point3& y,
                                      double tol = 1e-12) {
    const double before = i_distance(x, y);
    const double after = i_distance(apply_motion(m, x), apply_motion(m, y));
    const double scale = std::max({1.0, before, after});
    return std::abs(after - before) <= tol * scale;
}

}  // namespace isokit
