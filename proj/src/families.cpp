#include "isokit/families.hpp"

#include <cmath>
#include <memory>
#include <string>
#include <utility>

namespace isokit {

ScalarFunction identity_fn() {
    return {[](double x) { return x; }, [](double) { return 1.0; }, [](double) { return 0.0; }};
}

ScalarFunction constant_fn(double value) {
    return {[value](double) { return value; }, [](double) { return 0.0; },
            [](double) { return 0.0; }};
}

ScalarFunction linear_fn(double slope, double intercept) {
    return {[=](double x) { return slope * x + intercept; }, [slope](double) { return slope; },
            [](double) { return 0.0; }};
}

ScalarFunction quadratic_fn(double a, double b, double c) {
    return {[=](double x) { return (a * x + b) * x + c; },
            [=](double x) { return 2.0 * a * x + b; }, [a](double) { return 2.0 * a; }};
}

namespace {

ScalarFunction exp_factor(double scale, double rate) {
    return {[=](double x) { return scale * std::exp(rate * x); },
            [=](double x) { return scale * rate * std::exp(rate * x); },
            [=](double x) { return scale * rate * rate * std::exp(rate * x); }};
}

// (slope x + shift)^exponent on the positive branch of the base.
ScalarFunction power_factor(double scale, double exponent, double slope, double shift) {
    auto base = [=](double x) {
        const double b = slope * x + shift;
        if (b <= 0.0) {
            throw DomainError("power factor evaluated at non-positive base " + std::to_string(b));
        }
        return b;
    };
    return {[=](double x) { return scale * std::pow(base(x), exponent); },
            [=](double x) { return scale * exponent * slope * std::pow(base(x), exponent - 1.0); },
            [=](double x) {
                return scale * exponent * (exponent - 1.0) * slope * slope *
                       std::pow(base(x), exponent - 2.0);
            }};
}

double eval_d2(const ScalarFunction& fn, double x) {
    if (fn.d2) return fn.d2(x);
    const double s = 1e-5;
    return (fn.f(x + s) - 2.0 * fn.f(x) + fn.f(x - s)) / (s * s);
}

void require_nonzero(double value, const char* name) {
    if (value == 0.0) {
        throw InvalidConstant(std::string(name) + " must be nonzero");
    }
}

}  // namespace

double planar_i_curvature(const ScalarFunction& f, double x) {
    return eval_d2(f, x);
}

ProfileFunction profile_from(const ScalarFunction& g, Interval valid_range) {
    return {g.f, g.d1, g.d2, valid_range};
}

ProfileFunction flat_helicoidal_profile(double alpha, double h) {
    if (alpha <= 0.0) {
        throw EmptyRange("flat helicoidal profile requires alpha > 0, got " +
                         std::to_string(alpha));
    }
    ProfileFunction p;
    p.valid_range = {std::abs(h) / std::sqrt(alpha), std::numeric_limits<double>::infinity()};
    p.g = [=](double u) {
        const double s = std::sqrt(alpha * u * u - h * h);
        return s + h * std::atan(h / s);
    };
    p.g1 = [=](double u) { return std::sqrt(alpha - h * h / (u * u)); };
    p.g2 = [=](double u) {
        return (h * h / (u * u * u)) / std::sqrt(alpha - h * h / (u * u));
    };
    return p;
}

ProfileFunction constant_K_profile(double K0, double gamma, double h) {
    require_nonzero(K0, "K0");

    // Positivity region of K0 t^2 + gamma t - h^2 in t = u^2.
    Interval range;
    const double disc = gamma * gamma + 4.0 * K0 * h * h;
    if (K0 > 0.0) {
        const double t_hi = (-gamma + std::sqrt(std::max(disc, 0.0))) / (2.0 * K0);
        range = {std::sqrt(std::max(t_hi, 0.0)), std::numeric_limits<double>::infinity()};
    } else {
        if (disc <= 0.0) {
            throw EmptyRange("constant-K profile: the radicand has no positive region");
        }
        const double t_lo = (-gamma + std::sqrt(disc)) / (2.0 * K0);
        const double t_hi = (-gamma - std::sqrt(disc)) / (2.0 * K0);
        if (t_hi <= 0.0) {
            throw EmptyRange("constant-K profile: the radicand is positive only for u^2 <= 0");
        }
        range = {std::sqrt(std::max(t_lo, 0.0)), std::sqrt(t_hi)};
    }

    auto radicand = [=](double u) { return K0 * u * u - h * h / (u * u) + gamma; };

    ProfileFunction p;
    p.valid_range = range;
    p.g1 = [=](double u) {
        const double rho = radicand(u);
        if (rho < 0.0) {
            throw DomainError("constant-K profile derivative evaluated outside its range at u = " +
                              std::to_string(u));
        }
        return std::sqrt(rho);
    };
    p.g2 = [=, g1 = p.g1](double u) { return (K0 * u + h * h / (u * u * u)) / g1(u); };

    if (K0 > 0.0) {
        p.g = [=](double u) {
            const double a = std::sqrt(K0 * u * u * u * u - h * h + gamma * u * u);
            double value = 2.0 * a;
            if (h != 0.0) {
                value -= 2.0 * h * std::atan((gamma * u * u - 2.0 * h * h) / (2.0 * h * a));
            }
            value += gamma / std::sqrt(K0) *
                     std::log(std::abs(gamma + 2.0 * (K0 * u * u + std::sqrt(K0) * a)));
            return 0.25 * value;
        };
    } else {
        // The closed form above is complex-valued for K0 < 0; integrate the
        // (still closed-form) derivative instead.
        const double u_ref = 0.5 * (range.lo + range.hi);
        p.g = [g1 = p.g1, u_ref](double u) { return integrate(g1, u_ref, u, 1e-10); };
    }
    return p;
}

ProfileFunction constant_H_profile(double H0, double alpha, double beta) {
    require_nonzero(alpha, "alpha");
    ProfileFunction p;
    p.valid_range = {0.0, std::numeric_limits<double>::infinity()};
    p.g = [=](double u) { return 0.25 * H0 * u * u + alpha * std::log(u) + beta; };
    p.g1 = [=](double u) { return 0.5 * H0 * u + alpha / u; };
    p.g2 = [=](double u) { return 0.5 * H0 - alpha / (u * u); };
    return p;
}

ProfileFunction log_profile(double alpha, double beta) {
    ProfileFunction p;
    p.valid_range = {0.0, std::numeric_limits<double>::infinity()};
    p.g = [=](double u) { return alpha * std::log(std::abs(u)) + beta; };
    p.g1 = [=](double u) { return alpha / u; };
    p.g2 = [=](double u) { return -alpha / (u * u); };
    return p;
}

double helicoidal_H_expr(const ProfileFunction& profile, double u) {
    if (!profile.valid_range.contains(u)) {
        throw DomainError("profile evaluated outside its valid range at u = " + std::to_string(u));
    }
    return profile.g1(u) / u + profile.g2(u);
}

SurfaceChart helicoidal_chart(const HelicoidalParams& params, Rect domain) {
    const Interval& range = params.profile.valid_range;
    if (range.empty()) {
        throw InvalidRange("helicoidal chart: the profile's valid range is empty");
    }
    if (domain.u_min <= 0.0) {
        throw InvalidRange("helicoidal chart: the u range must stay strictly positive");
    }
    if (domain.u_min > domain.u_max || domain.v_min > domain.v_max) {
        throw InvalidRange("helicoidal chart: malformed parameter rectangle");
    }
    // The validity interval is open; the generator's derivatives typically
    // degenerate at its endpoints.
    if (!(domain.u_min > range.lo && domain.u_max < range.hi)) {
        throw InvalidRange("helicoidal chart: u range [" + std::to_string(domain.u_min) + ", " +
                           std::to_string(domain.u_max) + "] is not inside the profile range");
    }

    SurfaceChart chart;
    chart.domain = domain;
    chart.derivative_source = DerivativeSource::analytic;

    const auto g = params.profile.g;
    const auto g1 = params.profile.g1;
    const auto g2 = params.profile.g2;
    const double h = params.pitch_h;

    if (params.type == HelicoidalType::first) {
        chart.r = [=](double u, double v) -> Point3 {
            return {u * std::cos(v), u * std::sin(v), g(u) + h * v};
        };
        chart.r_u = [=](double u, double v) -> Vec3 {
            return {std::cos(v), std::sin(v), g1(u)};
        };
        chart.r_v = [=](double u, double v) -> Vec3 {
            return {-u * std::sin(v), u * std::cos(v), h};
        };
        chart.r_uu = [=](double u, double) -> Vec3 { return {0.0, 0.0, g2(u)}; };
        chart.r_uv = [](double, double v) -> Vec3 { return {-std::sin(v), std::cos(v), 0.0}; };
        chart.r_vv = [](double u, double v) -> Vec3 {
            return {-u * std::cos(v), -u * std::sin(v), 0.0};
        };
    } else {
        chart.r = [=](double u, double v) -> Point3 {
            return {-u * std::sin(v), u * std::cos(v), g(u) + h * v};
        };
        chart.r_u = [=](double u, double v) -> Vec3 {
            return {-std::sin(v), std::cos(v), g1(u)};
        };
        chart.r_v = [=](double u, double v) -> Vec3 {
            return {-u * std::cos(v), -u * std::sin(v), h};
        };
        chart.r_uu = [=](double u, double) -> Vec3 { return {0.0, 0.0, g2(u)}; };
        chart.r_uv = [](double, double v) -> Vec3 { return {-std::cos(v), -std::sin(v), 0.0}; };
        chart.r_vv = [](double u, double v) -> Vec3 {
            return {u * std::sin(v), -u * std::cos(v), 0.0};
        };
    }
    return chart;
}

SurfaceChart parabolic_i_sphere(double A, double B, double C, double D, Rect domain) {
    require_nonzero(A, "A");
    SurfaceChart chart;
    chart.domain = domain;
    chart.derivative_source = DerivativeSource::analytic;
    chart.r = [=](double u, double v) -> Point3 {
        return {u, v, 0.5 * A * (u * u + v * v) + B * u + C * v + D};
    };
    chart.r_u = [=](double u, double) -> Vec3 { return {1.0, 0.0, A * u + B}; };
    chart.r_v = [=](double, double v) -> Vec3 { return {0.0, 1.0, A * v + C}; };
    chart.r_uu = [=](double, double) -> Vec3 { return {0.0, 0.0, A}; };
    chart.r_uv = [](double, double) -> Vec3 { return {0.0, 0.0, 0.0}; };
    chart.r_vv = [=](double, double) -> Vec3 { return {0.0, 0.0, A}; };
    return chart;
}

// --- Translation surfaces -------------------------------------------------

namespace {

// All translation charts are (X(u), Y(u) + G(v), Z(u,v)) with Z split into a
// u part, a v part and no mixed term, so their partials share this shape.
struct SplitChartParts {
    ScalarFunction x;        // first coordinate, function of u
    ScalarFunction y_u;      // u part of the second coordinate
    ScalarFunction y_v;      // v part of the second coordinate
    ScalarFunction z_u;      // u part of the third coordinate
    ScalarFunction z_v;      // v part of the third coordinate
};

SurfaceChart split_chart(SplitChartParts parts, Rect domain) {
    SurfaceChart chart;
    chart.domain = domain;
    chart.derivative_source = DerivativeSource::analytic;
    const auto p = std::make_shared<SplitChartParts>(std::move(parts));
    chart.r = [p](double u, double v) -> Point3 {
        return {p->x.f(u), p->y_u.f(u) + p->y_v.f(v), p->z_u.f(u) + p->z_v.f(v)};
    };
    chart.r_u = [p](double u, double) -> Vec3 {
        return {p->x.d1(u), p->y_u.d1(u), p->z_u.d1(u)};
    };
    chart.r_v = [p](double, double v) -> Vec3 {
        return {0.0, p->y_v.d1(v), p->z_v.d1(v)};
    };
    chart.r_uu = [p](double u, double) -> Vec3 {
        return {p->x.d2(u), p->y_u.d2(u), p->z_u.d2(u)};
    };
    chart.r_uv = [](double, double) -> Vec3 { return {0.0, 0.0, 0.0}; };
    chart.r_vv = [p](double, double v) -> Vec3 {
        return {0.0, p->y_v.d2(v), p->z_v.d2(v)};
    };
    return chart;
}

// Composition q(t) = outer(inner(t)) for scalar functions with derivatives.
ScalarFunction compose_fn(ScalarFunction outer, ScalarFunction inner) {
    return {[=](double t) { return outer.f(inner.f(t)); },
            [=](double t) { return outer.d1(inner.f(t)) * inner.d1(t); },
            [=](double t) {
                const double w = inner.f(t);
                const double w1 = inner.d1(t);
                return outer.d2(w) * w1 * w1 + outer.d1(w) * inner.d2(t);
            }};
}

ScalarFunction scaled_fn(double factor, ScalarFunction fn) {
    return {[=](double t) { return factor * fn.f(t); },
            [=](double t) { return factor * fn.d1(t); },
            [=](double t) { return factor * fn.d2(t); }};
}

ScalarFunction sum_fn(ScalarFunction a, ScalarFunction b) {
    return {[=](double t) { return a.f(t) + b.f(t); },
            [=](double t) { return a.d1(t) + b.d1(t); },
            [=](double t) { return a.d2(t) + b.d2(t); }};
}

// a * w(t)^2 + b * w(t) for a supplied inner function w.
ScalarFunction quadratic_in(double a, double b, ScalarFunction w) {
    return compose_fn(quadratic_fn(a, b, 0.0), std::move(w));
}

}  // namespace

SurfaceChart translation_constant_k_quadratic(double a1, double K0, double b1, double b2,
                                              double b3, Rect domain, ScalarFunction f1,
                                              ScalarFunction g2) {
    require_nonzero(a1, "a1");
    SplitChartParts parts;
    parts.x = f1;
    parts.y_u = scaled_fn(b1, f1);
    parts.y_v = g2;
    parts.z_u = quadratic_in(a1, b2, f1);
    parts.z_v = quadratic_in(K0 / a1, b3, g2);
    return split_chart(std::move(parts), domain);
}

SurfaceChart translation_constant_k_power(double K0, double a2, double a3, double a4, double b4,
                                          double b5, double b6, Rect domain, ScalarFunction f1,
                                          ScalarFunction g2) {
    require_nonzero(K0, "K0");
    require_nonzero(a2, "a2");
    require_nonzero(a3, "a3");
    require_nonzero(a4, "a4");

    // (1/(K0 a3)) * (-2 K0 w)^{3/2} + a4 w, real only where -2 K0 w > 0.
    ScalarFunction power_part{
        [=](double w) {
            const double s = -2.0 * K0 * w;
            if (s <= 0.0) {
                throw DomainError("constant-K power family needs -2 K0 g2(v) > 0, got " +
                                  std::to_string(s));
            }
            return s * std::sqrt(s) / (K0 * a3) + a4 * w;
        },
        [=](double w) {
            const double s = -2.0 * K0 * w;
            if (s <= 0.0) throw DomainError("constant-K power family: derivative off-branch");
            return -3.0 / a3 * std::sqrt(s) + a4;
        },
        [=](double w) {
            const double s = -2.0 * K0 * w;
            if (s <= 0.0) throw DomainError("constant-K power family: derivative off-branch");
            return 3.0 * K0 / (a3 * std::sqrt(s));
        }};

    SplitChartParts parts;
    parts.x = f1;
    parts.y_u = quadratic_in(a2, b4, f1);
    parts.y_v = g2;
    parts.z_u = quadratic_in(b5, b6, f1);
    parts.z_v = compose_fn(std::move(power_part), g2);
    return split_chart(std::move(parts), domain);
}

SurfaceChart translation_constant_h_translating(double H0, double b1, double b2, double b3,
                                                Rect domain, ScalarFunction f1, ScalarFunction f2,
                                                ScalarFunction g2) {
    SplitChartParts parts;
    parts.x = f1;
    parts.y_u = f2;
    parts.y_v = g2;
    parts.z_u = sum_fn(quadratic_in(H0, b2, f1), scaled_fn(b1, f2));
    parts.z_v = scaled_fn(b3, g2);
    return split_chart(std::move(parts), domain);
}

SurfaceChart translation_constant_h_coupled(double H0, double a1, double a2, double b4, double b5,
                                            double b6, Rect domain, ScalarFunction f1,
                                            ScalarFunction g2) {
    require_nonzero(a1, "a1");
    require_nonzero(a2, "a2");
    SplitChartParts parts;
    parts.x = f1;
    parts.y_u = scaled_fn(b4, f1);
    parts.y_v = g2;
    parts.z_u = quadratic_in(H0 - a1, b5, f1);
    parts.z_v = quadratic_in(a2, b6, g2);
    return split_chart(std::move(parts), domain);
}

SurfaceChart translation_constant_h_logcos(double H0, double a3, double b8, double b9, Rect domain,
                                           ScalarFunction f1, ScalarFunction g2) {
    require_nonzero(a3, "a3");

    ScalarFunction logcos{
        [=](double w) {
            const double c = std::cos(a3 * w);
            if (c <= 0.0) {
                throw DomainError("log-cos family needs cos(a3 f1) > 0, got " + std::to_string(c));
            }
            return -std::log(c) / a3;
        },
        [=](double w) { return std::tan(a3 * w); },
        [=](double w) {
            const double t = std::tan(a3 * w);
            return a3 * (1.0 + t * t);
        }};

    ScalarFunction expo{[=](double w) { return std::exp(a3 * w) / (a3 * a3); },
                        [=](double w) { return std::exp(a3 * w) / a3; },
                        [=](double w) { return std::exp(a3 * w); }};

    SplitChartParts parts;
    parts.x = f1;
    parts.y_u = compose_fn(std::move(logcos), f1);
    parts.y_v = g2;
    parts.z_u = quadratic_in(H0, b8, f1);
    parts.z_v = sum_fn(compose_fn(std::move(expo), g2), scaled_fn(b9, g2));
    return split_chart(std::move(parts), domain);
}

// --- Graph hypersurfaces ---------------------------------------------------

GraphHypersurface sum_of_univariate(std::vector<ScalarFunction> terms) {
    const int n = static_cast<int>(terms.size());
    if (n < 2) throw InvalidConstant("graph hypersurfaces require dimension n >= 2");
    auto fns = std::make_shared<std::vector<ScalarFunction>>(std::move(terms));
    GraphHypersurface gh;
    gh.n = n;
    gh.F = [fns, n](std::span<const double> x) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) sum += (*fns)[j].f(x[j]);
        return sum;
    };
    gh.grad_F = [fns, n](std::span<const double> x) {
        std::vector<double> grad(n);
        for (int j = 0; j < n; ++j) grad[j] = (*fns)[j].d1(x[j]);
        return grad;
    };
    gh.hess_F = [fns, n](std::span<const double> x) {
        std::vector<double> hess(n * n, 0.0);
        for (int j = 0; j < n; ++j) hess[j * n + j] = (*fns)[j].d2(x[j]);
        return hess;
    };
    return gh;
}

GraphHypersurface product_of_univariate(std::vector<ScalarFunction> factors) {
    const int n = static_cast<int>(factors.size());
    if (n < 2) throw InvalidConstant("graph hypersurfaces require dimension n >= 2");
    auto fns = std::make_shared<std::vector<ScalarFunction>>(std::move(factors));

    auto values = [fns, n](std::span<const double> x) {
        std::vector<double> v(n);
        for (int j = 0; j < n; ++j) v[j] = (*fns)[j].f(x[j]);
        return v;
    };
    auto prod_except = [n](const std::vector<double>& v, int skip1, int skip2) {
        double p = 1.0;
        for (int m = 0; m < n; ++m) {
            if (m != skip1 && m != skip2) p *= v[m];
        }
        return p;
    };

    GraphHypersurface gh;
    gh.n = n;
    gh.F = [values, prod_except](std::span<const double> x) {
        return prod_except(values(x), -1, -1);
    };
    gh.grad_F = [fns, n, values, prod_except](std::span<const double> x) {
        const auto v = values(x);
        std::vector<double> grad(n);
        for (int j = 0; j < n; ++j) grad[j] = (*fns)[j].d1(x[j]) * prod_except(v, j, -1);
        return grad;
    };
    gh.hess_F = [fns, n, values, prod_except](std::span<const double> x) {
        const auto v = values(x);
        std::vector<double> d1(n);
        for (int j = 0; j < n; ++j) d1[j] = (*fns)[j].d1(x[j]);
        std::vector<double> hess(n * n);
        for (int j = 0; j < n; ++j) {
            hess[j * n + j] = (*fns)[j].d2(x[j]) * prod_except(v, j, -1);
            for (int k = j + 1; k < n; ++k) {
                const double mixed = d1[j] * d1[k] * prod_except(v, j, k);
                hess[j * n + k] = mixed;
                hess[k * n + j] = mixed;
            }
        }
        return hess;
    };
    return gh;
}

GraphHypersurface translation_hypersurface(int n, std::span<const double> alphas,
                                           std::span<const double> betas, double eps) {
    if (n < 2) throw InvalidConstant("translation hypersurface requires n >= 2");
    if (static_cast<int>(alphas.size()) != n || static_cast<int>(betas.size()) != n) {
        throw InvalidConstant("translation hypersurface: coefficient lists must have length n");
    }
    std::vector<ScalarFunction> terms;
    terms.reserve(n);
    for (int j = 0; j < n; ++j) {
        terms.push_back(quadratic_fn(alphas[j], betas[j], j == 0 ? eps : 0.0));
    }
    return sum_of_univariate(std::move(terms));
}

GraphHypersurface homothetical_linear_product(std::span<const double> gammas,
                                              std::span<const double> epsilons) {
    if (gammas.size() != epsilons.size()) {
        throw InvalidConstant("homothetical linear product: coefficient lists differ in length");
    }
    std::vector<ScalarFunction> factors;
    factors.reserve(gammas.size());
    for (std::size_t j = 0; j < gammas.size(); ++j) {
        factors.push_back(linear_fn(gammas[j], epsilons[j]));
    }
    return product_of_univariate(std::move(factors));
}

GraphHypersurface homothetical_flat_exp(double gamma, double a1, double a2,
                                        std::vector<ScalarFunction> tail) {
    require_nonzero(gamma, "gamma");
    require_nonzero(a1, "a1");
    require_nonzero(a2, "a2");
    std::vector<ScalarFunction> factors;
    factors.reserve(2 + tail.size());
    factors.push_back(exp_factor(gamma, a1));
    factors.push_back(exp_factor(1.0, a2));
    for (auto& t : tail) factors.push_back(std::move(t));
    return product_of_univariate(std::move(factors));
}

GraphHypersurface homothetical_flat_power(double gamma, std::span<const double> alphas,
                                          std::span<const double> betas) {
    require_nonzero(gamma, "gamma");
    if (alphas.size() != betas.size()) {
        throw InvalidConstant("homothetical flat power: coefficient lists differ in length");
    }
    double sum = 0.0;
    for (double a : alphas) {
        require_nonzero(a, "alpha_j");
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw InvalidConstant("homothetical flat power: exponents must sum to 1, got " +
                              std::to_string(sum));
    }
    std::vector<ScalarFunction> factors;
    factors.reserve(alphas.size());
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        factors.push_back(power_factor(j == 0 ? gamma : 1.0, alphas[j], 1.0, betas[j]));
    }
    return product_of_univariate(std::move(factors));
}

GraphHypersurface homothetical_exp_surface(double c1, double c2, double c3) {
    require_nonzero(c1, "c1");
    require_nonzero(c2, "c2");
    require_nonzero(c3, "c3");
    return product_of_univariate({exp_factor(c1, c2), exp_factor(1.0, c3)});
}

GraphHypersurface homothetical_power_surface(double c1, double c2, double c3, double c4, double d1,
                                             double d2) {
    require_nonzero(c1, "c1");
    require_nonzero(c2, "c2");
    require_nonzero(c3, "c3");
    require_nonzero(c4, "c4");
    if (c2 == 1.0 || c4 == 1.0) {
        throw InvalidConstant("homothetical power surface requires c2 != 1 and c4 != 1");
    }
    return product_of_univariate(
        {power_factor(1.0, 1.0 / c2, c1, d1), power_factor(1.0, 1.0 / c4, c3, d2)});
}

GraphHypersurface homothetical_bilinear_surface(double a, double b, double c, double d) {
    require_nonzero(a, "a");
    require_nonzero(c, "c");
    return product_of_univariate({linear_fn(a, b), linear_fn(c, d)});
}

}  // namespace isokit
