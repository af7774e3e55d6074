#pragma once

// Test-only oracles, kept independent of the library's analytic derivative
// paths: everything here works from position/value samples alone.

#include <array>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "isokit/surface.hpp"

namespace isokit::testing {

inline std::vector<double> fd_hessian(const std::function<double(std::span<const double>)>& F,
                                      std::span<const double> x, double step = 1e-4) {
    const int n = static_cast<int>(x.size());
    std::vector<double> hess(n * n);
    std::vector<double> p(x.begin(), x.end());
    const double f0 = F(p);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double value;
            if (i == j) {
                p[i] = x[i] + step;
                const double fp = F(p);
                p[i] = x[i] - step;
                const double fm = F(p);
                p[i] = x[i];
                value = (fp - 2.0 * f0 + fm) / (step * step);
            } else {
                p[i] = x[i] + step; p[j] = x[j] + step;
                const double fpp = F(p);
                p[j] = x[j] - step;
                const double fpm = F(p);
                p[i] = x[i] - step;
                const double fmm = F(p);
                p[j] = x[j] + step;
                const double fmp = F(p);
                p[i] = x[i]; p[j] = x[j];
                value = (fpp - fpm - fmp + fmm) / (4.0 * step * step);
            }
            hess[i * n + j] = value;
            hess[j * n + i] = value;
        }
    }
    return hess;
}

// Frame decomposition of a unit-speed curve on a chart, from positions only:
// the second derivative of the curve splits as kappa_g * sigma + kappa_n * N
// with N = (0,0,1) and sigma the side tangential vector fixed by
// sigma1^2 + sigma2^2 = 1, sigma.t = 0 (top view), t1 sigma2 - t2 sigma1 = 1.
struct FrameDecomposition {
    double kappa_g = 0.0;
    double kappa_n = 0.0;
    Vec3 sigma;
    Vec3 rdd;  // finite-difference second derivative of the curve
};

inline FrameDecomposition frame_curve_oracle(const SurfaceChart& chart,
                                             const std::function<double(double)>& u_of_s,
                                             const std::function<double(double)>& v_of_s,
                                             double s, double step = 1e-4) {
    auto curve = [&](double t) { return chart.r(u_of_s(t), v_of_s(t)); };
    const Point3 cp = curve(s + step), cm = curve(s - step), c0 = curve(s);

    const Vec3 t{(cp.x1 - cm.x1) / (2 * step), (cp.x2 - cm.x2) / (2 * step),
                 (cp.x3 - cm.x3) / (2 * step)};
    const double s2 = step * step;
    const Vec3 rdd{(cp.x1 - 2 * c0.x1 + cm.x1) / s2, (cp.x2 - 2 * c0.x2 + cm.x2) / s2,
                   (cp.x3 - 2 * c0.x3 + cm.x3) / s2};

    // Unit speed makes the top view of t a unit vector; sigma's top view is
    // its quarter turn.
    const Vec2 sigma_tv{-t.x2, t.x1};

    // sigma lies in the tangent plane: solve for its r_u/r_v components using
    // finite-difference chart partials, then read off the third coordinate.
    const double u = u_of_s(s), v = v_of_s(s);
    auto fd_partial_u = [&](double uu, double vv) -> Vec3 {
        const Point3 a = chart.r(uu + step, vv), b = chart.r(uu - step, vv);
        return {(a.x1 - b.x1) / (2 * step), (a.x2 - b.x2) / (2 * step),
                (a.x3 - b.x3) / (2 * step)};
    };
    auto fd_partial_v = [&](double uu, double vv) -> Vec3 {
        const Point3 a = chart.r(uu, vv + step), b = chart.r(uu, vv - step);
        return {(a.x1 - b.x1) / (2 * step), (a.x2 - b.x2) / (2 * step),
                (a.x3 - b.x3) / (2 * step)};
    };
    const Vec3 ru = fd_partial_u(u, v);
    const Vec3 rv = fd_partial_v(u, v);
    const double det = ru.x1 * rv.x2 - ru.x2 * rv.x1;
    const double a = (sigma_tv.x1 * rv.x2 - sigma_tv.x2 * rv.x1) / det;
    const double b = (ru.x1 * sigma_tv.x2 - ru.x2 * sigma_tv.x1) / det;

    FrameDecomposition out;
    out.sigma = {sigma_tv.x1, sigma_tv.x2, a * ru.x3 + b * rv.x3};
    out.kappa_g = rdd.x1 * out.sigma.x1 + rdd.x2 * out.sigma.x2;
    out.kappa_n = rdd.x3 - out.kappa_g * out.sigma.x3;
    out.rdd = rdd;
    return out;
}

}  // namespace isokit::testing
