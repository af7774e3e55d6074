#include "isokit/curves.hpp"

#include <cmath>
#include <string>

namespace isokit {

namespace {

constexpr double kUnitSpeedTol = 1e-10;

void require_unit_speed(const CurveState& cs) {
    const double speed2 = cs.du * cs.du + cs.u * cs.u * cs.dv * cs.dv;
    if (std::abs(speed2 - 1.0) > kUnitSpeedTol) {
        throw NotUnitSpeed("curve state is not arc-length parametrized: du^2 + u^2 dv^2 = " +
                           std::to_string(speed2));
    }
}

void require_on_surface(const ProfileFunction& profile, double u) {
    if (u <= 0.0) {
        throw DomainError("curve formulas need u > 0, got u = " + std::to_string(u));
    }
    if (!profile.valid_range.contains(u)) {
        throw DomainError("curve leaves the profile's valid range at u = " + std::to_string(u));
    }
}

}  // namespace

double geodesic_curvature(const ProfileFunction&, double, const CurveState& cs) {
    if (cs.u <= 0.0) {
        throw DomainError("curve formulas need u > 0, got u = " + std::to_string(cs.u));
    }
    require_unit_speed(cs);
    const double u = cs.u;
    return u * u * cs.dv * cs.dv * cs.dv - u * cs.du * cs.ddv - 2.0 * cs.du * cs.du * cs.dv -
           u * cs.dv * cs.ddu;
}

double normal_curvature(const ProfileFunction& profile, double pitch_h, const CurveState& cs) {
    require_on_surface(profile, cs.u);
    require_unit_speed(cs);
    const double u = cs.u;
    return profile.g2(u) * cs.du * cs.du - 2.0 * (pitch_h / u) * cs.du * cs.dv +
           u * profile.g1(u) * cs.dv * cs.dv;
}

double geodesic_torsion_numerator(const ProfileFunction& profile, double pitch_h, double u,
                                  double du, double dv) {
    require_on_surface(profile, u);
    const double g1 = profile.g1(u);
    const double g2 = profile.g2(u);
    return -(pitch_h / u) * du * du + (u * g1 - u * u * g2) * du * dv +
           pitch_h * u * dv * dv;
}

double geodesic_torsion(const ProfileFunction& profile, double pitch_h, const CurveState& cs) {
    const double numerator = geodesic_torsion_numerator(profile, pitch_h, cs.u, cs.du, cs.dv);
    const double det_g = cs.u * cs.u;
    const double first_form_value = cs.du * cs.du + cs.u * cs.u * cs.dv * cs.dv;
    return numerator / (det_g * first_form_value);
}

CurveClassification classify_curve_state(const ProfileFunction& profile, double pitch_h,
                                         const CurveState& cs, double tol) {
    CurveClassification out;
    out.kappa_g = geodesic_curvature(profile, pitch_h, cs);
    out.kappa_n = normal_curvature(profile, pitch_h, cs);
    out.tau_g_numerator = geodesic_torsion_numerator(profile, pitch_h, cs.u, cs.du, cs.dv);
    out.is_geodesic = std::abs(out.kappa_g) <= tol;
    out.is_asymptotic = std::abs(out.kappa_n) <= tol;
    out.is_line_of_curvature = std::abs(out.tau_g_numerator) <= tol;
    return out;
}

CurveState u_parameter_curve_state(double u0, double v0) {
    return {u0, v0, 0.0, 1.0 / u0, 0.0, 0.0};
}

CurveState v_parameter_curve_state(double u0, double v0) {
    return {u0, v0, 1.0, 0.0, 0.0, 0.0};
}

ParameterCurvePair classify_parameter_curves(const ProfileFunction& profile, double pitch_h,
                                             double u0, double v0) {
    if (u0 <= 0.0 || !profile.valid_range.contains(u0)) {
        throw NotAdmissible("parameter curves undefined at u0 = " + std::to_string(u0) +
                            ": outside the admissible region");
    }
    ParameterCurvePair out;
    out.u_curve = classify_curve_state(profile, pitch_h, u_parameter_curve_state(u0, v0));
    out.v_curve = classify_curve_state(profile, pitch_h, v_parameter_curve_state(u0, v0));
    return out;
}

namespace {

ScalarFunction with_fd_derivatives(const ScalarFunction& fn) {
    ScalarFunction out = fn;
    if (!out.d1) {
        out.d1 = [f = fn.f](double s) {
            const double e = 1e-6;
            return (f(s + e) - f(s - e)) / (2.0 * e);
        };
    }
    if (!out.d2) {
        out.d2 = [f = fn.f](double s) {
            const double e = 1e-4;
            return (f(s + e) - 2.0 * f(s) + f(s - e)) / (e * e);
        };
    }
    return out;
}

}  // namespace

std::vector<CurveSample> sample_curve(const ProfileFunction& profile, double pitch_h,
                                      const ScalarFunction& u_of_s, const ScalarFunction& v_of_s,
                                      std::span<const double> s_grid) {
    const bool analytic = u_of_s.d1 && u_of_s.d2 && v_of_s.d1 && v_of_s.d2;
    const double tol = analytic ? kCurveClassTol : kCurveClassTolFd;
    const ScalarFunction uf = with_fd_derivatives(u_of_s);
    const ScalarFunction vf = with_fd_derivatives(v_of_s);

    std::vector<CurveSample> samples;
    samples.reserve(s_grid.size());
    for (double s : s_grid) {
        CurveState cs;
        cs.u = uf.f(s);
        cs.v = vf.f(s);
        cs.du = uf.d1(s);
        cs.dv = vf.d1(s);
        cs.ddu = uf.d2(s);
        cs.ddv = vf.d2(s);

        if (cs.u <= 0.0 || !profile.valid_range.contains(cs.u)) {
            throw NotAdmissible("curve sample at s = " + std::to_string(s) +
                                " leaves the admissible region (u = " + std::to_string(cs.u) + ")");
        }

        // Rescale the derivatives to arc length when the parametrization is
        // not unit speed; the sampled locus is unchanged.
        const double speed2 = cs.du * cs.du + cs.u * cs.u * cs.dv * cs.dv;
        if (std::abs(speed2 - 1.0) > kUnitSpeedTol) {
            const double w = std::sqrt(speed2);
            const double dw = (cs.du * cs.ddu + cs.u * cs.du * cs.dv * cs.dv +
                               cs.u * cs.u * cs.dv * cs.ddv) /
                              w;
            const double w3 = w * w * w;
            cs.ddu = (cs.ddu * w - cs.du * dw) / w3;
            cs.ddv = (cs.ddv * w - cs.dv * dw) / w3;
            cs.du /= w;
            cs.dv /= w;
        }

        CurveSample sample;
        sample.s = s;
        sample.position = {cs.u * std::cos(cs.v), cs.u * std::sin(cs.v),
                           profile.g(cs.u) + pitch_h * cs.v};
        sample.state = cs;
        sample.classification = classify_curve_state(profile, pitch_h, cs, tol);
        samples.push_back(std::move(sample));
    }
    return samples;
}

}  // namespace isokit
