#include "isokit/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace isokit {

std::pair<SymForm2, SymForm2> fd_forms_oracle(const SurfaceChart& chart, double u, double v,
                                              double step, bool richardson) {
    const Rect& d = chart.domain;
    if (u - 2.0 * step < d.u_min || u + 2.0 * step > d.u_max || v - 2.0 * step < d.v_min ||
        v + 2.0 * step > d.v_max) {
        throw OutOfDomain("fd_forms_oracle needs a margin of 2*step inside the domain");
    }

    auto forms_at = [&chart, u, v](double s) -> std::pair<SymForm2, SymForm2> {
        const Point3 c = chart.r(u, v);
        const Point3 pu = chart.r(u + s, v), mu = chart.r(u - s, v);
        const Point3 pv = chart.r(u, v + s), mv = chart.r(u, v - s);
        const Point3 pp = chart.r(u + s, v + s), pm = chart.r(u + s, v - s);
        const Point3 mp = chart.r(u - s, v + s), mm = chart.r(u - s, v - s);

        const double s2 = s * s;
        const Vec3 ru{(pu.x1 - mu.x1) / (2 * s), (pu.x2 - mu.x2) / (2 * s),
                      (pu.x3 - mu.x3) / (2 * s)};
        const Vec3 rv{(pv.x1 - mv.x1) / (2 * s), (pv.x2 - mv.x2) / (2 * s),
                      (pv.x3 - mv.x3) / (2 * s)};
        const Vec3 ruu{(pu.x1 - 2 * c.x1 + mu.x1) / s2, (pu.x2 - 2 * c.x2 + mu.x2) / s2,
                       (pu.x3 - 2 * c.x3 + mu.x3) / s2};
        const Vec3 rvv{(pv.x1 - 2 * c.x1 + mv.x1) / s2, (pv.x2 - 2 * c.x2 + mv.x2) / s2,
                       (pv.x3 - 2 * c.x3 + mv.x3) / s2};
        const Vec3 ruv{(pp.x1 - pm.x1 - mp.x1 + mm.x1) / (4 * s2),
                       (pp.x2 - pm.x2 - mp.x2 + mm.x2) / (4 * s2),
                       (pp.x3 - pm.x3 - mp.x3 + mm.x3) / (4 * s2)};

        SymForm2 g{dot_tv(ru, ru), dot_tv(ru, rv), dot_tv(rv, rv)};
        if (g.det() <= kAdmissibilityTol) {
            throw NotAdmissible("fd_forms_oracle: isotropic tangent plane at sample point");
        }
        const double w = std::sqrt(g.det());
        SymForm2 h{det3(ru, rv, ruu) / w, det3(ru, rv, ruv) / w, det3(ru, rv, rvv) / w};
        return {g, h};
    };

    auto [g, h] = forms_at(step);
    if (richardson) {
        auto [g2, h2] = forms_at(0.5 * step);
        auto extrapolate = [](const SymForm2& coarse, const SymForm2& fine) -> SymForm2 {
            return {(4.0 * fine.a11 - coarse.a11) / 3.0, (4.0 * fine.a12 - coarse.a12) / 3.0,
                    (4.0 * fine.a22 - coarse.a22) / 3.0};
        };
        return {extrapolate(g, g2), extrapolate(h, h2)};
    }
    return {g, h};
}

SweepResult constancy_sweep(const SurfaceChart& chart, SweepQuantity quantity,
                            const GridSpec& grid) {
    if (grid.nu < 2 || grid.nv < 2) {
        throw InvalidRange("constancy_sweep requires nu, nv >= 2");
    }
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(grid.nu) * grid.nv);
    for (int i = 0; i < grid.nu; ++i) {
        for (int j = 0; j < grid.nv; ++j) {
            const CurvatureSample sample = chart_curvatures(chart, grid.u_at(i), grid.v_at(j));
            switch (quantity) {
                case SweepQuantity::relative_curvature: values.push_back(sample.K); break;
                case SweepQuantity::mean_curvature: values.push_back(sample.H); break;
                case SweepQuantity::doubled_mean_curvature:
                    values.push_back(2.0 * sample.H);
                    break;
            }
        }
    }
    SweepResult out;
    for (double v : values) out.mean += v;
    out.mean /= static_cast<double>(values.size());
    for (double v : values) out.max_deviation = std::max(out.max_deviation, std::abs(v - out.mean));
    return out;
}

const char* to_string(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::discrepancy_documented: return "discrepancy-documented";
    }
    return "unknown";
}

int VerificationReport::count(ClaimStatus status) const {
    return static_cast<int>(
        std::count_if(claims.begin(), claims.end(),
                      [status](const ClaimResult& c) { return c.status == status; }));
}

bool VerificationReport::all_passed() const {
    return count(ClaimStatus::fail) == 0;
}

namespace {

constexpr double kPi = std::numbers::pi;

// Finite sub-interval of a profile's valid range, padded away from the
// endpoints where the defining square roots degenerate.
std::pair<double, double> padded_range(const Interval& range, double cap = 5.0) {
    const double lo = std::max(range.lo, 0.0);
    const double hi = std::isfinite(range.hi) ? range.hi : lo + cap;
    const double width = hi - lo;
    return {lo + 0.02 * width, hi - 0.02 * width};
}

struct ToleranceTable {
    std::map<std::string, double> values{
        {"constancy", 1e-8},        // grid deviation of a supposedly constant quantity
        {"family_value", 1e-9},     // distance of a sampled constant from its target value
        {"laplacian", 1e-8},        // harmonic-coordinate residuals
        {"curve", 1e-9},            // curve curvature/torsion checks (analytic derivatives)
        {"curve_exact", 1e-12},     // checks whose target is exactly zero by algebra
        {"graph", 1e-9},            // hypersurface curvature identities
        {"flat_power", 1e-7},       // the fractional-power flat family sweep
        {"fd_forms", 1e-5},         // finite-difference oracle agreement on grids
        {"constant_h_grid", 1e-10}, // constant-mean family grid deviations
    };

    double at(const std::string& key) const { return values.at(key); }
};

struct CheckContext {
    const SuiteParams& params;
    const ToleranceTable& tol;
    RandomStream rng;
};

using CheckFn = std::function<ClaimResult(CheckContext&)>;

struct ClaimSpec {
    std::string id;
    std::string anchor;
    CheckFn run;
};

ClaimResult make_result(ClaimStatus status, double max_abs_error, std::string notes = {}) {
    ClaimResult r;
    r.status = status;
    r.max_abs_error = max_abs_error;
    r.notes = std::move(notes);
    return r;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Draws a profile from the implemented families together with its pitch.
struct ProfileDraw {
    ProfileFunction profile;
    double pitch_h = 0.0;
    bool constant_g = false;
    bool linear_g = false;
};

ProfileDraw draw_profile(RandomStream& rng) {
    ProfileDraw out;
    switch (rng.pick(5)) {
        case 0: {
            const double alpha = rng.uniform(0.5, 2.0);
            const double h = rng.uniform(-3.0, 3.0);
            out.profile = flat_helicoidal_profile(alpha, h);
            out.pitch_h = h;
            break;
        }
        case 1: {
            const double K0 = rng.uniform(0.25, 2.0);
            const double gamma = rng.uniform(0.0, 2.0);
            const double h = rng.uniform(-1.5, 1.5);
            out.profile = constant_K_profile(K0, gamma, h);
            out.pitch_h = h;
            break;
        }
        case 2: {
            const double H0 = rng.uniform(-2.0, 2.0);
            const double alpha = rng.uniform(0.5, 2.0);
            out.profile = constant_H_profile(H0, alpha, rng.uniform(-1.0, 1.0));
            out.pitch_h = rng.uniform(-3.0, 3.0);
            break;
        }
        case 3: {
            out.profile = log_profile(rng.uniform(-2.0, 2.0) < 0 ? -1.5 : 1.0, 0.0);
            out.pitch_h = rng.uniform(-3.0, 3.0);
            break;
        }
        default: {
            const double c = rng.uniform(-2.0, 2.0);
            out.profile = profile_from(constant_fn(c), Interval{0.0});
            out.pitch_h = rng.uniform(-3.0, 3.0);
            out.constant_g = true;
            out.linear_g = true;
            break;
        }
    }
    return out;
}

double draw_u0(RandomStream& rng, const ProfileFunction& profile) {
    auto [lo, hi] = padded_range(profile.valid_range);
    lo = std::max(lo, 0.5);
    hi = std::min(hi, 5.0);
    if (!(lo < hi)) {
        lo = std::max(profile.valid_range.lo * 1.05, 0.05);
        hi = lo + 1.0;
    }
    return rng.uniform(lo, hi);
}

// --- claim checks ----------------------------------------------------------

ClaimResult check_minimal_log_generator(CheckContext& ctx) {
    double worst = 0.0;
    for (double alpha : {1.0, -2.0}) {
        for (double h : {0.0, 1.5}) {
            const auto chart = helicoidal_chart({log_profile(alpha), h}, {0.5, 4.0, 0.0, 2.0 * kPi});
            const GridSpec grid{{0.5, 4.0, 0.0, 2.0 * kPi}, 51, 51};
            for (int i = 0; i < grid.nu; ++i) {
                for (int j = 0; j < grid.nv; ++j) {
                    const Point3 lap = laplace_coordinates(chart, grid.u_at(i), grid.v_at(j));
                    worst = std::max({worst, std::abs(lap.x1), std::abs(lap.x2), std::abs(lap.x3)});
                }
            }
            const SweepResult sweep =
                constancy_sweep(chart, SweepQuantity::mean_curvature, grid);
            worst = std::max({worst, std::abs(sweep.mean), sweep.max_deviation});
        }
    }
    const bool ok = worst <= ctx.tol.at("laplacian");
    return make_result(ok ? ClaimStatus::pass : ClaimStatus::fail, worst,
                       "harmonic coordinates and H = 0 for the log-generator family");
}

ClaimResult check_flat_helicoidal(CheckContext& ctx) {
    const double alpha = ctx.params.alpha.value_or(1.0);
    const double h = ctx.params.pitch_h.value_or(1.0);
    const ProfileFunction profile = flat_helicoidal_profile(alpha, h);
    auto [lo, hi] = padded_range(profile.valid_range);
    const Rect rect{lo, hi, 0.0, 4.0 * kPi};
    const auto chart = helicoidal_chart({profile, h}, rect);
    const GridSpec grid{rect, 51, 51};

    const SweepResult sweep = constancy_sweep(chart, SweepQuantity::relative_curvature, grid);
    double worst = std::max(std::abs(sweep.mean), sweep.max_deviation);

    // Independent cross-check on a coarse interior subgrid, positions only.
    double fd_worst = 0.0;
    for (int i = 1; i <= 5; ++i) {
        for (int j = 1; j <= 5; ++j) {
            const double u = rect.u_min + (rect.u_max - rect.u_min) * i / 6.0;
            const double v = rect.v_min + (rect.v_max - rect.v_min) * j / 6.0;
            const auto [g, hh] = fd_forms_oracle(chart, u, v);
            fd_worst = std::max(fd_worst, std::abs(curvatures(g, hh).K));
        }
    }

    const bool ok = worst <= ctx.tol.at("constancy") && fd_worst <= ctx.tol.at("fd_forms");
    return make_result(ok ? ClaimStatus::pass : ClaimStatus::fail, std::max(worst, fd_worst),
                       "analytic max |K| = " + fmt(worst) + ", position-only oracle max |K| = " +
                           fmt(fd_worst));
}

ClaimResult check_constant_k_family(CheckContext& ctx) {
    std::vector<std::array<double, 3>> cases;
    if (ctx.params.K0 || ctx.params.gamma || ctx.params.pitch_h) {
        cases.push_back({ctx.params.K0.value_or(0.5), ctx.params.gamma.value_or(1.0),
                         ctx.params.pitch_h.value_or(1.0)});
    } else {
        cases = {{0.5, 1.0, 1.0}, {2.0, 0.0, 0.5}, {-1.0, 10.0, 0.0}};
    }

    double worst = 0.0;
    std::string notes;
    for (const auto& [K0, gamma, h] : cases) {
        const ProfileFunction profile = constant_K_profile(K0, gamma, h);
        auto [lo, hi] = padded_range(profile.valid_range);
        const Rect rect{lo, hi, 0.0, 2.0 * kPi};
        const auto chart = helicoidal_chart({profile, h}, rect);
        const SweepResult sweep =
            constancy_sweep(chart, SweepQuantity::relative_curvature, {rect, 51, 51});
        worst = std::max({worst, std::abs(sweep.mean - K0), sweep.max_deviation});
        if (!notes.empty()) notes += "; ";
        notes += "K0 = " + fmt(K0) + ": mean K = " + fmt(sweep.mean);
    }
    const bool ok = worst <= ctx.tol.at("constancy");
    return make_result(ok ? ClaimStatus::pass : ClaimStatus::fail, worst, notes);
}

ClaimResult check_constant_h_family(CheckContext& ctx) {
    const double H0 = ctx.params.H0.value_or(-1.0);
    const double alpha = ctx.params.alpha.value_or(1.0);
    const double h = ctx.params.pitch_h.value_or(1.5);
    const ProfileFunction profile = constant_H_profile(H0, alpha, 0.0);
    const Rect rect{1.0, 5.0, -kPi, kPi};
    const auto chart = helicoidal_chart({profile, h}, rect);
    const GridSpec grid{rect, 51, 51};

    const SweepResult doubled =
        constancy_sweep(chart, SweepQuantity::doubled_mean_curvature, grid);
    const SweepResult plain = constancy_sweep(chart, SweepQuantity::mean_curvature, grid);

    const double tol = ctx.tol.at("constant_h_grid");
    double worst = std::max(std::abs(doubled.mean - H0), doubled.max_deviation);
    worst = std::max({worst, std::abs(plain.mean - 0.5 * H0), plain.max_deviation});

    const bool ok = worst <= tol;
    return make_result(
        ok ? ClaimStatus::discrepancy_documented : ClaimStatus::fail, worst,
        "the quoted constant matches the expression g'/u + g'' (mean " + fmt(doubled.mean) +
            "); the determinant-normalized mean curvature of the forms pipeline is exactly half "
            "of it (mean " +
            fmt(plain.mean) + " = H0/2). Both are grid-constant; factor-2 convention recorded.");
}

ClaimResult check_geodesic_parameter_curves(CheckContext& ctx) {
    double worst = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
        const ProfileDraw d = draw_profile(ctx.rng);
        const double u0 = draw_u0(ctx.rng, d.profile);
        const double v0 = ctx.rng.uniform(-kPi, kPi);
        const ParameterCurvePair pair = classify_parameter_curves(d.profile, d.pitch_h, u0, v0);
        worst = std::max(worst, std::abs(pair.v_curve.kappa_g));
        worst = std::max(worst, std::abs(pair.u_curve.kappa_g - 1.0 / u0));
        if (pair.v_curve.is_geodesic != true || pair.u_curve.is_geodesic != false) {
            return make_result(ClaimStatus::fail, worst,
                               "geodesic flags disagree at u0 = " + fmt(u0));
        }
    }
    const bool ok = worst <= ctx.tol.at("curve");
    return make_result(ok ? ClaimStatus::pass : ClaimStatus::fail, worst,
                       "v = const curves are geodesics; u = const curves have kappa_g = 1/u0");
}

ClaimResult check_asymptotic_parameter_curves(CheckContext& ctx) {
    const double tol = ctx.tol.at("curve");
    double worst = 0.0;

    // Constant generator: every u = const curve is asymptotic.
    {
        const ProfileFunction helicoid = profile_from(constant_fn(0.7), Interval{0.0});
        for (int i = 0; i < 20; ++i) {
            const double u0 = ctx.rng.uniform(0.5, 5.0);
            const auto pair = classify_parameter_curves(helicoid, 1.0, u0, 0.0);
            worst = std::max(worst, std::abs(pair.u_curve.kappa_n));
            if (!pair.u_curve.is_asymptotic) {
                return make_result(ClaimStatus::fail, worst, "helicoid u-curve not asymptotic");
            }
        }
    }

    // Non-constant generator: kappa_n of u = const is g'(u0)/u0, nonzero.
    const ProfileFunction linear = profile_from(linear_fn(0.8, 0.3), Interval{0.0});
    double divergence = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double u0 = ctx.rng.uniform(0.5, 5.0);
        const auto pair = classify_parameter_curves(linear, 1.0, u0, 0.0);
        divergence = std::max(divergence, std::abs(pair.u_curve.kappa_n));
        // v = const reading: kappa_n = g'' = 0 for a linear generator.
        worst = std::max(worst, std::abs(pair.v_curve.kappa_n));
        if (!pair.v_curve.is_asymptotic || pair.u_curve.is_asymptotic) {
            return make_result(ClaimStatus::fail, worst,
                               "linear-generator asymptotic flags disagree");
        }
    }

    const bool ok = worst <= tol;
    return make_result(
        ok ? ClaimStatus::discrepancy_documented : ClaimStatus::fail, std::max(worst, divergence),
        "branch (ii) for a linear generator: along v = const the normal curvature is g'' = 0 "
        "(claim holds under the v = const reading), but along u = const it is g'/u != 0 unless g "
        "is constant (claim fails under that reading; largest residual " +
            fmt(divergence) + "). Both verdicts reported, neither reconciled.");
}

ClaimResult check_lines_of_curvature(CheckContext& ctx) {
    double worst_zero = 0.0;
    double worst_value = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
        ProfileDraw d = draw_profile(ctx.rng);
        const double u0 = draw_u0(ctx.rng, d.profile);
        const double v0 = ctx.rng.uniform(-kPi, kPi);

        // Pitch 0: surfaces of revolution; both parameter curves are lines of
        // curvature.
        {
            const auto pair = classify_parameter_curves(d.profile, 0.0, u0, v0);
            worst_zero = std::max({worst_zero, std::abs(pair.u_curve.tau_g_numerator),
                                   std::abs(pair.v_curve.tau_g_numerator)});
            if (!pair.u_curve.is_line_of_curvature || !pair.v_curve.is_line_of_curvature) {
                return make_result(ClaimStatus::fail, worst_zero, "pitch-0 flags disagree");
            }
        }

        // Nonzero pitch: the torsion numerators are -h/u0 along v = const and
        // +h/u0 along u = const.
        const double h = (draw % 2 == 0) ? ctx.rng.uniform(0.2, 3.0) : ctx.rng.uniform(-3.0, -0.2);
        const auto pair = classify_parameter_curves(d.profile, h, u0, v0);
        worst_value = std::max(worst_value, std::abs(pair.v_curve.tau_g_numerator + h / u0));
        worst_value = std::max(worst_value, std::abs(pair.u_curve.tau_g_numerator - h / u0));
        if (pair.u_curve.is_line_of_curvature || pair.v_curve.is_line_of_curvature) {
            return make_result(ClaimStatus::fail, worst_value, "nonzero-pitch flags disagree");
        }
    }
    const bool ok = worst_zero <= ctx.tol.at("curve_exact") && worst_value <= ctx.tol.at("curve");
    return make_result(ok ? ClaimStatus::pass : ClaimStatus::fail,
                       std::max(worst_zero, worst_value),
                       "pitch 0 gives vanishing torsion numerators; nonzero pitch gives -h/u0 "
                       "along v = const and +h/u0 along u = const");
}

ClaimResult check_translation_surfaces_k(CheckContext& ctx) {
    double worst_dev = 0.0;
    std::string notes;

    // Quadratic branch: constant for every coefficient choice, value 4 K0.
    {
        const double a1 = 1.3, K0 = 0.75, b1 = 0.4, b2 = -0.7, b3 = 0.2;
        const Rect rect{-2.0, 2.0, -2.0, 2.0};
        const auto chart = translation_constant_k_quadratic(a1, K0, b1, b2, b3, rect);
        const auto sweep =
            constancy_sweep(chart, SweepQuantity::relative_curvature, {rect, 31, 31});
        worst_dev = std::max({worst_dev, sweep.max_deviation, std::abs(sweep.mean - 4.0 * K0)});
        notes += "quadratic branch: constant K = " + fmt(sweep.mean) + " = 4 K0, not K0";
    }

    // 3/2-power branch: constant only on the subfamily b5 = a2 a4; the value
    // is 18 a2 K0 / a3^2.
    {
        const double K0 = 0.6, a2 = 0.9, a3 = 1.4, a4 = -0.8, b4 = 0.3, b6 = 0.1;
        const double b5 = a2 * a4;
        const Rect rect{-1.5, 1.5, -3.0, -0.4};  // -2 K0 v > 0 there
        const auto chart = translation_constant_k_power(K0, a2, a3, a4, b4, b5, b6, rect);
        const auto sweep =
            constancy_sweep(chart, SweepQuantity::relative_curvature, {rect, 31, 31});
        const double expected = 18.0 * a2 * K0 / (a3 * a3);
        worst_dev = std::max({worst_dev, sweep.max_deviation, std::abs(sweep.mean - expected)});
        notes += "; power branch (with b5 = a2 a4): constant K = " + fmt(sweep.mean) +
                 " = 18 a2 K0 / a3^2";
    }

    const bool ok = worst_dev <= ctx.tol.at("constancy");
    return make_result(ok ? ClaimStatus::discrepancy_documented : ClaimStatus::fail, worst_dev,
                       notes + ". Curvature is grid-constant but scaled against the quoted K0; "
                               "convention factors recorded.");
}

ClaimResult check_translation_surfaces_h(CheckContext& ctx) {
    double worst = 0.0;
    std::string notes;

    // First branch (linear second free function): H = H0 exactly.
    {
        const double H0 = 0.5, b1 = 0.6, b2 = -0.4, b3 = 0.9;
        const Rect rect{-2.0, 2.0, -2.0, 2.0};
        const auto chart = translation_constant_h_translating(H0, b1, b2, b3, rect);
        const auto sweep = constancy_sweep(chart, SweepQuantity::mean_curvature, {rect, 31, 31});
        worst = std::max({worst, sweep.max_deviation, std::abs(sweep.mean - H0)});
        notes += "first branch: H = " + fmt(sweep.mean) + " = H0";
    }

    // Coupled-quadratic branch: H is constant, value H0 - a1 + (1 + b4^2) a2.
    {
        const double H0 = -0.3, a1 = 0.7, a2 = 0.5, b4 = 0.6, b5 = 0.0, b6 = -0.2;
        const Rect rect{-2.0, 2.0, -2.0, 2.0};
        const auto chart = translation_constant_h_coupled(H0, a1, a2, b4, b5, b6, rect);
        const auto sweep = constancy_sweep(chart, SweepQuantity::mean_curvature, {rect, 31, 31});
        const double expected = H0 - a1 + (1.0 + b4 * b4) * a2;
        worst = std::max({worst, sweep.max_deviation, std::abs(sweep.mean - expected)});
        notes += "; coupled branch: constant H = " + fmt(sweep.mean) +
                 " = H0 - a1 + (1 + b4^2) a2";
    }

    // Log-cos/exponential branch with the undefined term omitted and b9 = 0.
    {
        const double H0 = 0.0, a3 = 1.0, b8 = 0.3, b9 = 0.0;
        const Rect rect{-1.2, 1.2, -1.0, 1.0};
        const auto chart = translation_constant_h_logcos(H0, a3, b8, b9, rect);
        const auto sweep = constancy_sweep(chart, SweepQuantity::mean_curvature, {rect, 31, 31});
        worst = std::max({worst, sweep.max_deviation, std::abs(sweep.mean - H0)});
        notes += "; log-cos branch (undefined term omitted, b9 = 0): H = " + fmt(sweep.mean) +
                 " = H0";
    }

    const bool ok = worst <= ctx.tol.at("constancy");
    return make_result(ok ? ClaimStatus::discrepancy_documented : ClaimStatus::fail, worst,
                       notes + ". The printed third branch carries a coefficient on an undefined "
                               "second free function; it is omitted here, and H equals H0 only "
                               "with the trailing linear coefficient set to zero.");
}

ClaimResult check_translation_hypersurfaces_k(CheckContext& ctx) {
    double worst = 0.0;
    const double tol = ctx.tol.at("graph");

    struct Case {
        std::vector<double> alphas;
        std::vector<double> betas;
    };
    const std::vector<Case> cases = {{{1.0, 2.0}, {0.0, 0.0}},
                                     {{0.5, -1.0, 2.0}, {0.3, -0.2, 0.1}}};
    for (const auto& c : cases) {
        const int n = static_cast<int>(c.alphas.size());
        const auto gh = translation_hypersurface(n, c.alphas, c.betas, 0.4);
        double expected = 1.0;
        for (double a : c.alphas) expected *= 2.0 * a;
        for (int i = 0; i < 20; ++i) {
            std::vector<double> x(n);
            for (auto& xi : x) xi = ctx.rng.uniform(-3.0, 3.0);
            worst = std::max(worst, std::abs(graph_curvatures(gh, x).K - expected));
        }
    }

    // A vanishing coefficient degenerates to the flat cylinder case.
    {
        const std::vector<double> alphas{1.5, 0.0}, betas{0.0, 1.0};
        const auto gh = translation_hypersurface(2, alphas, betas, 0.0);
        const double x[2] = {0.7, -1.1};
        worst = std::max(worst, std::abs(graph_curvatures(gh, x).K));
    }

    const bool ok = worst <= tol;
    return make_result(ok ? ClaimStatus::pass : ClaimStatus::fail, worst,
                       "K = 2^n prod(alpha_j) for the quadratic translation hypersurface; a zero "
                       "coefficient gives the flat cylinder case");
}

ClaimResult check_translation_hypersurfaces_h(CheckContext& ctx) {
    double worst = 0.0;
    struct Case {
        double H0;
        std::vector<double> alphas;
    };
    // sum(alpha) = (n/2) H0, read as the full sum over j = 1..n.
    const std::vector<Case> cases = {{1.0, {0.25, 0.5, 0.75}}, {-0.8, {0.5, -1.3}}};
    for (const auto& c : cases) {
        const int n = static_cast<int>(c.alphas.size());
        const std::vector<double> betas(n, 0.25);
        const auto gh = translation_hypersurface(n, c.alphas, betas, -0.3);
        for (int i = 0; i < 20; ++i) {
            std::vector<double> x(n);
            for (auto& xi : x) xi = ctx.rng.uniform(-3.0, 3.0);
            worst = std::max(worst, std::abs(graph_curvatures(gh, x).H - c.H0));
        }
    }
    const bool ok = worst <= ctx.tol.at("graph");
    return make_result(ok ? ClaimStatus::pass : ClaimStatus::fail, worst,
                       "H = H0 whenever the coefficient sum over all n indices equals (n/2) H0 "
                       "(the printed one-term index range is read as the full sum)");
}

ClaimResult check_homothetical_minimal(CheckContext& ctx) {
    double worst = 0.0;
    const std::vector<double> g2{1.0, -2.0}, e2{0.5, 1.0};
    const std::vector<double> g3{1.0, 2.0, -1.0}, e3{0.0, 0.5, 0.3};
    for (const auto& [gammas, eps] : {std::pair(g2, e2), std::pair(g3, e3)}) {
        const auto gh = homothetical_linear_product(gammas, eps);
        const int n = static_cast<int>(gammas.size());
        for (int i = 0; i < 20; ++i) {
            std::vector<double> x(n);
            for (auto& xi : x) xi = ctx.rng.uniform(-2.0, 2.0);
            worst = std::max(worst, std::abs(graph_curvatures(gh, x).H));
        }
    }
    const bool ok = worst <= ctx.tol.at("graph");
    return make_result(ok ? ClaimStatus::pass : ClaimStatus::fail, worst,
                       "products of linear factors have zero-diagonal Hessians, hence H = 0");
}

ClaimResult check_homothetical_flat(CheckContext& ctx) {
    double worst_exp = 0.0;
    {
        const auto gh = homothetical_exp_surface(1.5, 0.7, -1.2);
        for (int i = 0; i < 20; ++i) {
            const double x[2] = {ctx.rng.uniform(-1.0, 1.0), ctx.rng.uniform(-1.0, 1.0)};
            worst_exp = std::max(worst_exp, std::abs(graph_curvatures(gh, x).K));
        }
        const std::vector<ScalarFunction> tail{linear_fn(0.8, 1.4)};
        const auto gh3 = homothetical_flat_exp(1.1, 0.6, -0.9, tail);
        for (int i = 0; i < 20; ++i) {
            const std::vector<double> x{ctx.rng.uniform(-1.0, 1.0), ctx.rng.uniform(-1.0, 1.0),
                                        ctx.rng.uniform(-1.0, 1.0)};
            worst_exp = std::max(worst_exp, std::abs(graph_curvatures(gh3, x).K));
        }
    }

    double worst_power = 0.0;
    {
        const std::vector<double> alphas{0.5, 0.5}, betas{0.0, 0.0};
        const auto gh = homothetical_flat_power(1.0, alphas, betas);
        for (double x = 0.5; x <= 3.0; x += 0.25) {
            for (double y = 0.5; y <= 3.0; y += 0.25) {
                const double p[2] = {x, y};
                worst_power = std::max(worst_power, std::abs(graph_curvatures(gh, p).K));
            }
        }
        const std::vector<double> a3{0.5, 0.25, 0.25}, b3{0.2, 0.1, 0.0};
        const auto gh3 = homothetical_flat_power(2.0, a3, b3);
        for (int i = 0; i < 20; ++i) {
            const std::vector<double> x{ctx.rng.uniform(0.5, 3.0), ctx.rng.uniform(0.5, 3.0),
                                        ctx.rng.uniform(0.5, 3.0)};
            worst_power = std::max(worst_power, std::abs(graph_curvatures(gh3, x).K));
        }
    }

    const bool ok = worst_exp <= ctx.tol.at("graph") && worst_power <= ctx.tol.at("flat_power");
    return make_result(ok ? ClaimStatus::pass : ClaimStatus::fail,
                       std::max(worst_exp, worst_power),
                       "exponential branch and unit-exponent-sum power branch are both flat");
}

ClaimResult check_homothetical_constant_k(CheckContext& ctx) {
    double worst = 0.0;

    // Flat branches.
    {
        const auto gh = homothetical_exp_surface(1.2, 0.8, -0.5);
        const double x[2] = {0.3, -0.6};
        worst = std::max(worst, std::abs(graph_curvatures(gh, x).K));

        // Fractional-power branch; flat exactly on the exponent-sum-1 set
        // (c2 = c4 = 2 here), matching the flat power family.
        const auto ghp = homothetical_power_surface(1.1, 2.0, 0.9, 2.0, 0.4, 0.6);
        for (int i = 0; i < 10; ++i) {
            const double p[2] = {ctx.rng.uniform(0.5, 3.0), ctx.rng.uniform(0.5, 3.0)};
            worst = std::max(worst, std::abs(graph_curvatures(ghp, p).K));
        }
    }

    // Nonzero constant curvature forces bilinear factors and K < 0.
    double bilinear_err = 0.0;
    {
        const auto gh = homothetical_bilinear_surface(2.0, 0.5, 3.0, -0.2);
        for (int i = 0; i < 20; ++i) {
            const double p[2] = {ctx.rng.uniform(-2.0, 2.0), ctx.rng.uniform(-2.0, 2.0)};
            const double K = graph_curvatures(gh, p).K;
            bilinear_err = std::max(bilinear_err, std::abs(K - (-36.0)));
            if (K >= 0.0) {
                return make_result(ClaimStatus::fail, bilinear_err, "bilinear K not negative");
            }
        }
        for (int i = 0; i < 10; ++i) {
            const double a = ctx.rng.uniform(0.3, 2.5), c = ctx.rng.uniform(0.3, 2.5);
            const auto ghr = homothetical_bilinear_surface(a, 0.0, c, 0.0);
            const double p[2] = {0.4, -0.7};
            bilinear_err =
                std::max(bilinear_err, std::abs(graph_curvatures(ghr, p).K + a * a * c * c));
        }
    }

    const bool ok = worst <= ctx.tol.at("flat_power") && bilinear_err <= ctx.tol.at("graph");
    return make_result(ok ? ClaimStatus::pass : ClaimStatus::fail, std::max(worst, bilinear_err),
                       "flat branches vanish (power branch on the exponent-sum-1 set); the "
                       "bilinear branch has constant negative K = -(a c)^2");
}

const std::vector<ClaimSpec>& claim_registry() {
    static const std::vector<ClaimSpec> registry = {
        {"Prop2.2",
         "helicoidal surfaces whose coordinates are Laplace-Beltrami eigenfunctions are isotropic "
         "minimal with logarithmic generator",
         check_minimal_log_generator},
        {"Thm2.1",
         "translation surfaces of constant relative curvature are cylinders or one of two "
         "quadratic/power parametrizations",
         check_translation_surfaces_k},
        {"Thm2.2",
         "translation surfaces of constant isotropic mean curvature follow one of three "
         "parametrizations",
         check_translation_surfaces_h},
        {"Thm2.4",
         "translation hypersurfaces of nonzero constant relative curvature are sums of "
         "quadratics; K = 2^n prod(alpha_j)",
         check_translation_hypersurfaces_k},
        {"Thm2.5",
         "translation hypersurfaces of constant isotropic mean curvature are sums of quadratics "
         "with coefficient sum (n/2) H0",
         check_translation_hypersurfaces_h},
        {"Thm2.7",
         "homothetical hypersurfaces of constant isotropic mean curvature are minimal products "
         "of linear factors",
         check_homothetical_minimal},
        {"Thm2.8",
         "isotropic flat homothetical hypersurfaces are exponential products or unit-exponent-sum "
         "power products",
         check_homothetical_flat},
        {"Thm2.9",
         "homothetical surfaces of constant relative curvature: flat branches, or bilinear "
         "factors with K < 0",
         check_homothetical_constant_k},
        {"Thm3.1.i",
         "flat helicoidal surfaces have generator derivative sqrt(alpha - h^2/u^2)",
         check_flat_helicoidal},
        {"Thm3.1.ii",
         "helicoidal surfaces of constant nonzero K have generator derivative sqrt(K0 u^2 - "
         "h^2/u^2 + gamma)",
         check_constant_k_family},
        {"Thm3.3",
         "helicoidal surfaces of constant mean curvature have generator (H0/4) u^2 + alpha ln u "
         "+ beta",
         check_constant_h_family},
        {"Thm4.1",
         "v-parameter curves on helicoidal surfaces are geodesics; u = const curves are not",
         check_geodesic_parameter_curves},
        {"Thm4.2",
         "u = const curves are asymptotic iff the generator is constant; the second branch "
         "depends on the parameter-curve naming",
         check_asymptotic_parameter_curves},
        {"Thm4.3",
         "parameter curves are lines of curvature exactly on surfaces of revolution (pitch 0)",
         check_lines_of_curvature},
    };
    return registry;
}

}  // namespace

std::vector<std::string> known_claim_ids() {
    std::vector<std::string> ids;
    ids.reserve(claim_registry().size());
    for (const auto& claim : claim_registry()) ids.push_back(claim.id);
    return ids;
}

VerificationReport run_theorem_suite(const std::set<std::string>& selection,
                                     const SuiteParams& params) {
    const auto& registry = claim_registry();
    for (const auto& id : selection) {
        if (std::none_of(registry.begin(), registry.end(),
                         [&id](const ClaimSpec& c) { return c.id == id; })) {
            throw InvalidConstant("unknown claim id: " + id);
        }
    }

    ToleranceTable tol;
    for (const auto& [key, value] : params.tolerances) tol.values[key] = value;

    VerificationReport report;
    report.seed = params.seed;
    report.tolerances = tol.values;

    std::uint64_t claim_index = 0;
    for (const auto& claim : registry) {
        ++claim_index;
        if (!selection.empty() && selection.find(claim.id) == selection.end()) continue;
        // Per-claim stream so a selection never changes another claim's draws.
        CheckContext ctx{params, tol, RandomStream(params.seed * 1000003ULL + claim_index)};
        ClaimResult result;
        try {
            result = claim.run(ctx);
        } catch (const Error& err) {
            result = make_result(ClaimStatus::fail, std::numeric_limits<double>::infinity(),
                                 std::string("check aborted: ") + err.what());
        }
        result.id = claim.id;
        result.anchor = claim.anchor;
        report.claims.push_back(std::move(result));
    }
    return report;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& claim : report.claims) {
        nlohmann::ordered_json c;
        c["id"] = claim.id;
        c["anchor"] = claim.anchor;
        c["status"] = to_string(claim.status);
        c["max_abs_error"] = claim.max_abs_error;
        c["notes"] = claim.notes;
        j["claims"].push_back(std::move(c));
    }
    j["seed"] = report.seed;
    j["tolerances"] = report.tolerances;
    return j.dump(2) + "\n";
}

}  // namespace isokit
