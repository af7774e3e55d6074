#include "isokit/surface.hpp"

#include <cmath>
#include <string>

namespace isokit {

namespace {

std::string point_str(double u, double v) {
    return "(u=" + std::to_string(u) + ", v=" + std::to_string(v) + ")";
}

void require_in_domain(const SurfaceChart& chart, double u, double v) {
    if (!chart.domain.contains(u, v)) {
        throw OutOfDomain("chart evaluated outside its parameter rectangle at " + point_str(u, v));
    }
}

}  // namespace

SurfaceChart make_fd_chart(std::function<Point3(double, double)> position, Rect domain,
                           double step) {
    SurfaceChart chart;
    chart.domain = domain;
    chart.derivative_source = DerivativeSource::finite_difference;
    chart.fd_step = step;
    chart.r = position;

    auto diff = [](const Point3& a, const Point3& b, double denom) -> Vec3 {
        return {(a.x1 - b.x1) / denom, (a.x2 - b.x2) / denom, (a.x3 - b.x3) / denom};
    };

    chart.r_u = [position, step, diff](double u, double v) {
        return diff(position(u + step, v), position(u - step, v), 2.0 * step);
    };
    chart.r_v = [position, step, diff](double u, double v) {
        return diff(position(u, v + step), position(u, v - step), 2.0 * step);
    };
    chart.r_uu = [position, step](double u, double v) -> Vec3 {
        const Point3 p = position(u + step, v), m = position(u - step, v), c = position(u, v);
        const double s2 = step * step;
        return {(p.x1 - 2.0 * c.x1 + m.x1) / s2, (p.x2 - 2.0 * c.x2 + m.x2) / s2,
                (p.x3 - 2.0 * c.x3 + m.x3) / s2};
    };
    chart.r_vv = [position, step](double u, double v) -> Vec3 {
        const Point3 p = position(u, v + step), m = position(u, v - step), c = position(u, v);
        const double s2 = step * step;
        return {(p.x1 - 2.0 * c.x1 + m.x1) / s2, (p.x2 - 2.0 * c.x2 + m.x2) / s2,
                (p.x3 - 2.0 * c.x3 + m.x3) / s2};
    };
    chart.r_uv = [position, step](double u, double v) -> Vec3 {
        const Point3 pp = position(u + step, v + step), pm = position(u + step, v - step);
        const Point3 mp = position(u - step, v + step), mm = position(u - step, v - step);
        const double s2 = 4.0 * step * step;
        return {(pp.x1 - pm.x1 - mp.x1 + mm.x1) / s2, (pp.x2 - pm.x2 - mp.x2 + mm.x2) / s2,
                (pp.x3 - pm.x3 - mp.x3 + mm.x3) / s2};
    };
    return chart;
}

SurfaceChart transform_chart(const Motion& m, const SurfaceChart& chart) {
    SurfaceChart out = chart;
    out.r = [m, r = chart.r](double u, double v) { return apply_motion(m, r(u, v)); };
    auto lift = [m](std::function<Vec3(double, double)> d) {
        return [m, d](double u, double v) { return apply_motion_linear(m, d(u, v)); };
    };
    out.r_u = lift(chart.r_u);
    out.r_v = lift(chart.r_v);
    out.r_uu = lift(chart.r_uu);
    out.r_uv = lift(chart.r_uv);
    out.r_vv = lift(chart.r_vv);
    return out;
}

SymForm2 first_form(const SurfaceChart& chart, double u, double v) {
    require_in_domain(chart, u, v);
    const Vec3 ru = chart.r_u(u, v);
    const Vec3 rv = chart.r_v(u, v);
    SymForm2 g{dot_tv(ru, ru), dot_tv(ru, rv), dot_tv(rv, rv)};
    if (g.det() <= kAdmissibilityTol) {
        throw NotAdmissible("isotropic tangent plane: det(g) = " + std::to_string(g.det()) +
                            " at " + point_str(u, v));
    }
    return g;
}

SymForm2 second_form(const SurfaceChart& chart, double u, double v) {
    const SymForm2 g = first_form(chart, u, v);  // also runs the admissibility check
    const double w = std::sqrt(g.det());
    const Vec3 ru = chart.r_u(u, v);
    const Vec3 rv = chart.r_v(u, v);
    return {det3(ru, rv, chart.r_uu(u, v)) / w,
            det3(ru, rv, chart.r_uv(u, v)) / w,
            det3(ru, rv, chart.r_vv(u, v)) / w};
}

CurvatureSample curvatures(const SymForm2& g, const SymForm2& h) {
    const double dg = g.det();
    if (dg <= kAdmissibilityTol) {
        throw NotAdmissible("curvatures undefined: det(g) = " + std::to_string(dg));
    }
    CurvatureSample out;
    out.det_g = dg;
    out.K = h.det() / dg;
    out.H = (g.a11 * h.a22 - 2.0 * g.a12 * h.a12 + g.a22 * h.a11) / (2.0 * dg);
    return out;
}

CurvatureSample chart_curvatures(const SurfaceChart& chart, double u, double v) {
    return curvatures(first_form(chart, u, v), second_form(chart, u, v));
}

Point3 laplace_coordinates(const SurfaceChart& chart, double u, double v) {
    const SymForm2 g = first_form(chart, u, v);

    const Vec3 ru = chart.r_u(u, v);
    const Vec3 rv = chart.r_v(u, v);
    const Vec3 ruu = chart.r_uu(u, v);
    const Vec3 ruv = chart.r_uv(u, v);
    const Vec3 rvv = chart.r_vv(u, v);

    const double E = g.a11, F = g.a12, G = g.a22;
    const double W = std::sqrt(g.det());

    // Parameter derivatives of the metric coefficients, all top-view products.
    const double Eu = 2.0 * dot_tv(ruu, ru);
    const double Ev = 2.0 * dot_tv(ruv, ru);
    const double Fu = dot_tv(ruu, rv) + dot_tv(ru, ruv);
    const double Fv = dot_tv(ruv, rv) + dot_tv(ru, rvv);
    const double Gu = 2.0 * dot_tv(ruv, rv);
    const double Gv = 2.0 * dot_tv(rvv, rv);

    const double Wu = (Eu * G + E * Gu - 2.0 * F * Fu) / (2.0 * W);
    const double Wv = (Ev * G + E * Gv - 2.0 * F * Fv) / (2.0 * W);

    auto component = [&](auto get) {
        const double fu = get(ru), fv = get(rv);
        const double fuu = get(ruu), fuv = get(ruv), fvv = get(rvv);
        // d/du of (G f_u - F f_v)/W plus d/dv of (E f_v - F f_u)/W, over W.
        const double Pu =
            ((Gu * fu + G * fuu - Fu * fv - F * fuv) * W - (G * fu - F * fv) * Wu) / (W * W);
        const double Qv =
            ((Ev * fv + E * fvv - Fv * fu - F * fuv) * W - (E * fv - F * fu) * Wv) / (W * W);
        return (Pu + Qv) / W;
    };

    return {component([](const Vec3& p) { return p.x1; }),
            component([](const Vec3& p) { return p.x2; }),
            component([](const Vec3& p) { return p.x3; })};
}

namespace {

// Determinant by Gaussian elimination with partial pivoting; n stays small.
double det_n(std::vector<double> m, int n) {
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row) {
            if (std::abs(m[row * n + col]) > std::abs(m[pivot * n + col])) pivot = row;
        }
        if (m[pivot * n + col] == 0.0) return 0.0;
        if (pivot != col) {
            for (int k = 0; k < n; ++k) std::swap(m[pivot * n + k], m[col * n + k]);
            det = -det;
        }
        det *= m[col * n + col];
        for (int row = col + 1; row < n; ++row) {
            const double factor = m[row * n + col] / m[col * n + col];
            for (int k = col; k < n; ++k) m[row * n + k] -= factor * m[col * n + k];
        }
    }
    return det;
}

}  // namespace

GraphCurvatures graph_curvatures(const GraphHypersurface& gh, std::span<const double> x) {
    if (static_cast<int>(x.size()) != gh.n) {
        throw InvalidConstant("graph_curvatures: point dimension " + std::to_string(x.size()) +
                              " does not match hypersurface dimension " + std::to_string(gh.n));
    }
    std::vector<double> hess = gh.hess_F(x);
    for (int i = 0; i < gh.n; ++i) {
        for (int j = i + 1; j < gh.n; ++j) {
            if (std::abs(hess[i * gh.n + j] - hess[j * gh.n + i]) > 1e-10) {
                throw Error("graph hypersurface Hessian is not symmetric at the evaluation point");
            }
        }
    }
    GraphCurvatures out;
    double trace = 0.0;
    for (int i = 0; i < gh.n; ++i) trace += hess[i * gh.n + i];
    out.H = trace / static_cast<double>(gh.n);
    out.K = det_n(std::move(hess), gh.n);
    return out;
}

SurfaceChart graph_chart(const GraphHypersurface& gh, Rect domain) {
    if (gh.n != 2) {
        throw InvalidConstant("graph_chart requires a 2-dimensional graph hypersurface");
    }
    SurfaceChart chart;
    chart.domain = domain;
    chart.derivative_source = DerivativeSource::analytic;
    const auto F = gh.F;
    const auto grad = gh.grad_F;
    const auto hess = gh.hess_F;
    chart.r = [F](double u, double v) -> Point3 {
        const double x[2] = {u, v};
        return {u, v, F(x)};
    };
    chart.r_u = [grad](double u, double v) -> Vec3 {
        const double x[2] = {u, v};
        return {1.0, 0.0, grad(x)[0]};
    };
    chart.r_v = [grad](double u, double v) -> Vec3 {
        const double x[2] = {u, v};
        return {0.0, 1.0, grad(x)[1]};
    };
    chart.r_uu = [hess](double u, double v) -> Vec3 {
        const double x[2] = {u, v};
        return {0.0, 0.0, hess(x)[0]};
    };
    chart.r_uv = [hess](double u, double v) -> Vec3 {
        const double x[2] = {u, v};
        return {0.0, 0.0, hess(x)[1]};
    };
    chart.r_vv = [hess](double u, double v) -> Vec3 {
        const double x[2] = {u, v};
        return {0.0, 0.0, hess(x)[3]};
    };
    return chart;
}

}  // namespace isokit
