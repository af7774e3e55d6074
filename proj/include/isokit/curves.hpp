#pragma once

#include <span>
#include <vector>

#include "isokit/families.hpp"

namespace isokit {

// State of an arc-length parametrized curve s -> (u(s), v(s)) on a helicoidal
// surface: position in the parameter plane plus first and second derivatives
// with respect to arc length. Unit speed in the induced metric means
// du^2 + u^2 dv^2 = 1.
struct CurveState {
    double u = 0.0;
    double v = 0.0;
    double du = 0.0;
    double dv = 0.0;
    double ddu = 0.0;
    double ddv = 0.0;
};

// Classification tolerance with analytic derivatives.
inline constexpr double kCurveClassTol = 1e-9;
// Classification tolerance when curve derivatives come from finite differences.
inline constexpr double kCurveClassTolFd = 1e-5;

struct CurveClassification {
    bool is_geodesic = false;
    bool is_asymptotic = false;
    bool is_line_of_curvature = false;
    double kappa_g = 0.0;
    double kappa_n = 0.0;
    double tau_g_numerator = 0.0;
};

// Geodesic curvature kappa_g = u^2 dv^3 - u du ddv - 2 du^2 dv - u dv ddu.
// Throws NotUnitSpeed if the state violates du^2 + u^2 dv^2 = 1 (1e-10).
double geodesic_curvature(const ProfileFunction& profile, double pitch_h, const CurveState& cs);

// Normal curvature kappa_n = g'' du^2 - 2 (h/u) du dv + u g' dv^2.
double normal_curvature(const ProfileFunction& profile, double pitch_h, const CurveState& cs);

// Numerator of the geodesic torsion:
//   -(h/u) du^2 + (u g' - u^2 g'') du dv + (h u) dv^2.
// A curve is a line of curvature precisely when this vanishes, independent of
// any denominator convention. Requires u > 0; no unit-speed requirement.
double geodesic_torsion_numerator(const ProfileFunction& profile, double pitch_h, double u,
                                  double du, double dv);

// Full geodesic torsion under the convention
//   tau_g = numerator / (det(g) * I(du,dv)),
// where I is the first-form value on (du,dv). The zero set is that of the
// numerator.
double geodesic_torsion(const ProfileFunction& profile, double pitch_h, const CurveState& cs);

CurveClassification classify_curve_state(const ProfileFunction& profile, double pitch_h,
                                         const CurveState& cs, double tol = kCurveClassTol);

// Unit-speed states of the two parameter curves through (u0, v0):
// the u-parameter curve u = u0 (v varies) and the v-parameter curve v = v0
// (u varies).
CurveState u_parameter_curve_state(double u0, double v0);
CurveState v_parameter_curve_state(double u0, double v0);

struct ParameterCurvePair {
    CurveClassification u_curve;  // along u = u0
    CurveClassification v_curve;  // along v = v0
};

// Classifies both parameter curves through (u0, v0). Throws NotAdmissible if
// u0 is outside the profile's range (or not positive).
ParameterCurvePair classify_parameter_curves(const ProfileFunction& profile, double pitch_h,
                                             double u0, double v0);

struct CurveSample {
    double s = 0.0;
    Point3 position;
    CurveState state;  // derivatives rescaled to arc length
    CurveClassification classification;
};

// Evaluates a curve s -> (u(s), v(s)) on the first-type helicoidal chart and
// classifies it at each grid value. Missing derivative fields of u_of_s and
// v_of_s are filled by central differences. Inputs that are not unit speed
// are handled by rescaling the derivatives to arc length pointwise (the
// classification formulas assume an arc-length parameter). Throws
// NotAdmissible if any sample leaves the admissible region.
std::vector<CurveSample> sample_curve(const ProfileFunction& profile, double pitch_h,
                                      const ScalarFunction& u_of_s, const ScalarFunction& v_of_s,
                                      std::span<const double> s_grid);

}  // namespace isokit
