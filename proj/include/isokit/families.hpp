#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "isokit/surface.hpp"

namespace isokit {

// Scalar function of one variable carried together with its first two
// derivatives. Free functions of the translation families and curve
// parametrizations travel in this form.
struct ScalarFunction {
    std::function<double(double)> f;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
};

ScalarFunction identity_fn();
ScalarFunction constant_fn(double value);
ScalarFunction linear_fn(double slope, double intercept = 0.0);
ScalarFunction quadratic_fn(double a, double b = 0.0, double c = 0.0);  // a x^2 + b x + c

// Planar isotropic curvature of a graph x3 = f(x1) inside an isotropic
// plane: the second derivative. Constant exactly for parabolic circles.
double planar_i_curvature(const ScalarFunction& f, double x);

// Open interval; hi may be +infinity.
struct Interval {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double u) const { return u > lo && u < hi; }
    bool empty() const { return !(lo < hi); }
};

// Generator g(u) of a helicoidal surface, with analytic g' and g''. The
// chart's curvature values depend on g' and g'' only; g itself just places
// the surface vertically.
struct ProfileFunction {
    std::function<double(double)> g;
    std::function<double(double)> g1;
    std::function<double(double)> g2;
    Interval valid_range;
};

ProfileFunction profile_from(const ScalarFunction& g, Interval valid_range);

// g' = sqrt(alpha - h^2/u^2): the flat family (K identically zero).
// Satisfies u^3 g' g'' = h^2 pointwise. Throws EmptyRange for alpha <= 0.
ProfileFunction flat_helicoidal_profile(double alpha, double h);

// g' = sqrt(K0 u^2 - h^2/u^2 + gamma): relative curvature identically K0.
// For K0 > 0 the closed-form antiderivative is used; for K0 < 0 that form is
// not real-valued, so g is integrated numerically (the derivatives stay
// closed-form either way). Throws EmptyRange when no positive-radicand
// region exists, InvalidConstant for K0 == 0.
ProfileFunction constant_K_profile(double K0, double gamma, double h);

// g = (H0/4) u^2 + alpha ln(u) + beta on u > 0: the doubled mean curvature
// expression g'/u + g'' is identically H0 (so H itself is H0/2).
// alpha must be nonzero.
ProfileFunction constant_H_profile(double H0, double alpha, double beta);

// g = alpha ln|u| + beta: the isotropic minimal generator (H identically 0).
ProfileFunction log_profile(double alpha, double beta = 0.0);

// The expression g'/u + g''. For a helicoidal chart this equals exactly
// twice the isotropic mean curvature H returned by curvatures(); the
// constant-mean-curvature family checks quote their target in this form.
double helicoidal_H_expr(const ProfileFunction& profile, double u);

enum class HelicoidalType { first, second };

struct HelicoidalParams {
    ProfileFunction profile;
    double pitch_h = 0.0;
    HelicoidalType type = HelicoidalType::first;
};

// Helicoidal chart (u cos v, u sin v, g(u) + h v) (first type) or its
// quarter-turn image (-u sin v, u cos v, g(u) + h v) (second type) on the
// given rectangle. The u range must lie inside the profile's valid range
// with u_min > 0; otherwise InvalidRange.
SurfaceChart helicoidal_chart(const HelicoidalParams& params, Rect domain);

// Graph chart of the parabolic-type isotropic sphere
// x3 = (A/2)(x1^2 + x2^2) + B x1 + C x2 + D, with K = A^2 and H = A.
// A must be nonzero.
SurfaceChart parabolic_i_sphere(double A, double B, double C, double D,
                                Rect domain = {-1.0, 1.0, -1.0, 1.0});

// --- Translation surfaces -------------------------------------------------
//
// Charts of the form (f1(u), f2(u) + g2(v), z(u,v)) classified by constant
// curvature. Free functions default to the identity. The constructors build
// the literal classified parametrizations; where a printed family is
// curvature-constant only on a constrained coefficient set, the constraint
// is noted at the constructor.

// Constant relative curvature, quadratic branch:
//   (f1, b1 f1 + g2, a1 f1^2 + (K0/a1) g2^2 + b2 f1 + b3 g2),  a1 != 0.
// The relative curvature equals 4 K0 for every admissible choice of the b's.
SurfaceChart translation_constant_k_quadratic(double a1, double K0, double b1, double b2,
                                              double b3, Rect domain,
                                              ScalarFunction f1 = identity_fn(),
                                              ScalarFunction g2 = identity_fn());

// Constant relative curvature, 3/2-power branch:
//   (f1, a2 f1^2 + b4 f1 + g2,
//    b5 f1^2 + (1/(K0 a3)) (-2 K0 g2)^{3/2} + b6 f1 + a4 g2),
// K0, a2, a3, a4 != 0; requires -2 K0 g2(v) > 0 on the domain (DomainError
// otherwise). Curvature is constant iff b5 = a2 a4; the constant is then
// 18 a2 K0 / a3^2.
SurfaceChart translation_constant_k_power(double K0, double a2, double a3, double a4, double b4,
                                          double b5, double b6, Rect domain,
                                          ScalarFunction f1 = identity_fn(),
                                          ScalarFunction g2 = identity_fn());

// Constant isotropic mean curvature, first branch:
//   (f1, f2 + g2, H0 f1^2 + b1 f2 + b2 f1 + b3 g2).
// H equals H0 exactly whenever f2 is linear (the default) or b1 = b3;
// g2 must be increasing for the stated sign.
SurfaceChart translation_constant_h_translating(double H0, double b1, double b2, double b3,
                                                Rect domain, ScalarFunction f1 = identity_fn(),
                                                ScalarFunction f2 = identity_fn(),
                                                ScalarFunction g2 = identity_fn());

// Constant isotropic mean curvature, coupled-quadratic branch:
//   (f1, b4 f1 + g2, (H0 - a1) f1^2 + a2 g2^2 + b5 f1 + b6 g2),  a1, a2 != 0.
// H is constant, with value H0 - a1 + (1 + b4^2) a2.
SurfaceChart translation_constant_h_coupled(double H0, double a1, double a2, double b4, double b5,
                                            double b6, Rect domain,
                                            ScalarFunction f1 = identity_fn(),
                                            ScalarFunction g2 = identity_fn());

// Constant isotropic mean curvature, log-cos/exponential branch:
//   (f1, -(1/a3) ln|cos(a3 f1)| + g2,
//    H0 f1^2 + (1/a3^2) exp(a3 g2) + b8 f1 + b9 g2),  a3 != 0.
// The printed family carries an additional term in an otherwise-undefined
// second free function; it is omitted here (equivalently its coefficient is
// zero). H equals H0 exactly when b9 = 0 (the default). Requires
// cos(a3 f1(u)) > 0 on the domain (DomainError otherwise).
SurfaceChart translation_constant_h_logcos(double H0, double a3, double b8, double b9, Rect domain,
                                           ScalarFunction f1 = identity_fn(),
                                           ScalarFunction g2 = identity_fn());

// --- Graph hypersurfaces in R^{n+1} ----------------------------------------

// F(x) = sum_j f_j(x_j): hess = diag(f_j'').
GraphHypersurface sum_of_univariate(std::vector<ScalarFunction> terms);

// F(x) = prod_j f_j(x_j).
GraphHypersurface product_of_univariate(std::vector<ScalarFunction> factors);

// F = sum alpha_j x_j^2 + beta_j x_j + eps. The classified constant-curvature
// translation hypersurface: K = 2^n prod(alpha), H = (2/n) sum(alpha).
// n >= 2; alphas and betas must have length n.
GraphHypersurface translation_hypersurface(int n, std::span<const double> alphas,
                                           std::span<const double> betas, double eps);

// F = prod (gamma_j x_j + eps_j): the isotropic minimal homothetical family
// (the Hessian has zero diagonal, so H == 0).
GraphHypersurface homothetical_linear_product(std::span<const double> gammas,
                                              std::span<const double> epsilons);

// F = gamma exp(a1 x1 + a2 x2) * prod_{j>=3} tail_j(x_j): isotropic flat
// (rows 1 and 2 of the Hessian are proportional). gamma, a1, a2 != 0.
GraphHypersurface homothetical_flat_exp(double gamma, double a1, double a2,
                                        std::vector<ScalarFunction> tail = {});

// F = gamma prod (x_j + beta_j)^{alpha_j} with sum(alpha) = 1 (required),
// alpha_j, gamma != 0: isotropic flat on the positive branch of each factor.
GraphHypersurface homothetical_flat_power(double gamma, std::span<const double> alphas,
                                          std::span<const double> betas);

// F = c1 exp(c2 x + c3 y), all nonzero: flat homothetical surface (n = 2).
GraphHypersurface homothetical_exp_surface(double c1, double c2, double c3);

// F = (c1 x + d1)^{1/c2} (c3 y + d2)^{1/c4}, c_i != 0, c2 != 1 != c4,
// positive branches. Flat precisely when 1/c2 + 1/c4 = 1 (the exponent-sum
// constraint of the flat power family).
GraphHypersurface homothetical_power_surface(double c1, double c2, double c3, double c4, double d1,
                                             double d2);

// F = (a x + b)(c y + d) with a, c != 0: the nonzero-constant-curvature
// homothetical surface; K = -(a c)^2 < 0.
GraphHypersurface homothetical_bilinear_surface(double a, double b, double c, double d);

}  // namespace isokit
