#pragma once

#include <functional>
#include <span>
#include <vector>

#include "isokit/core.hpp"
#include "isokit/errors.hpp"
#include "isokit/numeric.hpp"

namespace isokit {

struct Rect {
    double u_min = 0.0;
    double u_max = 0.0;
    double v_min = 0.0;
    double v_max = 0.0;

    bool contains(double u, double v) const {
        return u >= u_min && u <= u_max && v >= v_min && v <= v_max;
    }
};

enum class DerivativeSource { analytic, finite_difference };

// A twice-differentiable map (u,v) -> I^3 together with its six partial
// derivative fields and a rectangular parameter domain. Charts are immutable
// after construction and safe to share across threads.
struct SurfaceChart {
    std::function<Point3(double, double)> r;
    std::function<Vec3(double, double)> r_u, r_v;
    std::function<Vec3(double, double)> r_uu, r_uv, r_vv;
    Rect domain;
    DerivativeSource derivative_source = DerivativeSource::analytic;
    double fd_step = kDefaultFdStep;  // meaningful when derivative_source is finite_difference
};

// Builds a chart whose derivative fields are central differences of the
// position map. Useful when only positions are known.
SurfaceChart make_fd_chart(std::function<Point3(double, double)> position, Rect domain,
                           double step = kDefaultFdStep);

// Pushes a chart through an isotropic motion. Fundamental forms and both
// curvatures are invariant under this.
SurfaceChart transform_chart(const Motion& m, const SurfaceChart& chart);

// Symmetric 2x2 coefficient triple; houses either (g11,g12,g22) or
// (h11,h12,h22).
struct SymForm2 {
    double a11 = 0.0;
    double a12 = 0.0;
    double a22 = 0.0;

    double det() const { return a11 * a22 - a12 * a12; }
};

struct CurvatureSample {
    double K = 0.0;
    double H = 0.0;
    double det_g = 0.0;
};

// First fundamental form: top-view inner products of the chart partials.
// Throws OutOfDomain outside the parameter rectangle and NotAdmissible when
// det(g) <= kAdmissibilityTol (isotropic tangent plane).
SymForm2 first_form(const SurfaceChart& chart, double u, double v);

// Second fundamental form with respect to the (0,0,1) normal, realized as
// h_ij = det(r_u, r_v, r_ij) / sqrt(det g).
SymForm2 second_form(const SurfaceChart& chart, double u, double v);

// Relative curvature K = det(h)/det(g) and isotropic mean curvature
// H = (g11 h22 - 2 g12 h12 + g22 h11) / (2 det g).
CurvatureSample curvatures(const SymForm2& g, const SymForm2& h);

CurvatureSample chart_curvatures(const SurfaceChart& chart, double u, double v);

// Laplace-Beltrami operator of the induced metric applied componentwise to
// the chart's coordinate functions.
Point3 laplace_coordinates(const SurfaceChart& chart, double u, double v);

// Graph hypersurface x -> (x, F(x)) over R^n. The induced top-view metric is
// the identity, so K = det(hess F) and H = trace(hess F)/n.
struct GraphHypersurface {
    int n = 0;
    std::function<double(std::span<const double>)> F;
    std::function<std::vector<double>(std::span<const double>)> grad_F;
    // row-major n x n, symmetric at every evaluation point
    std::function<std::vector<double>(std::span<const double>)> hess_F;
};

struct GraphCurvatures {
    double K = 0.0;
    double H = 0.0;
};

GraphCurvatures graph_curvatures(const GraphHypersurface& gh, std::span<const double> x);

// The 2-dimensional graph chart (u, v, F(u,v)) of a GraphHypersurface,
// restricted to a rectangle. Lets graph results be cross-checked against the
// chart pipeline.
SurfaceChart graph_chart(const GraphHypersurface& gh, Rect domain);

}  // namespace isokit
