#include <doctest.h>

#include <cmath>
#include <numbers>

#include "isokit/curves.hpp"
#include "oracles.hpp"

using namespace isokit;

namespace {

constexpr double kPi = std::numbers::pi;

ProfileFunction quadratic_profile() {
    return profile_from(quadratic_fn(1.0), Interval{0.0});  // g = u^2
}

}  // namespace

TEST_CASE("geodesic curvature of parameter curves") {
    const ProfileFunction p = quadratic_profile();
    // v = const: du = 1, all else zero -> geodesic.
    CHECK(geodesic_curvature(p, 1.0, {2.0, 0.3, 1, 0, 0, 0}) == doctest::Approx(0.0));
    // u = const = u0 at unit speed: kappa_g = 1/u0.
    CHECK(geodesic_curvature(p, 1.0, {1.0, 0.0, 0, 1.0, 0, 0}) == doctest::Approx(1.0));
    CHECK(geodesic_curvature(p, 0.0, {2.0, 0.0, 0, 0.5, 0, 0}) == doctest::Approx(0.5));
}

TEST_CASE("non-unit-speed states are rejected") {
    const ProfileFunction p = quadratic_profile();
    CHECK_THROWS_AS(geodesic_curvature(p, 1.0, {2.0, 0.0, 1.0, 1.0, 0, 0}), NotUnitSpeed);
    CHECK_THROWS_AS(normal_curvature(p, 1.0, {2.0, 0.0, 0.9, 0.0, 0, 0}), NotUnitSpeed);
}

TEST_CASE("normal curvature closed forms") {
    // Radial curve, constant generator: asymptotic.
    const ProfileFunction helicoid = profile_from(constant_fn(1.0), Interval{0.0});
    CHECK(normal_curvature(helicoid, 1.0, {2.0, 0.0, 1, 0, 0, 0}) == doctest::Approx(0.0));

    // Radial curve, g = u^2: kappa_n = g'' = 2.
    CHECK(normal_curvature(quadratic_profile(), 1.0, {2.0, 0.0, 1, 0, 0, 0}) ==
          doctest::Approx(2.0));

    // Circular curve, linear generator slope c: kappa_n = u g' dv^2 = c/u0.
    const ProfileFunction linear = profile_from(linear_fn(0.8), Interval{0.0});
    CHECK(normal_curvature(linear, 1.0, {2.0, 0.0, 0, 0.5, 0, 0}) ==
          doctest::Approx(0.8 / 2.0));
}

TEST_CASE("geodesic torsion numerator closed forms") {
    const ProfileFunction helicoid = profile_from(constant_fn(0.0), Interval{0.0});
    // Pitch 0: parameter directions have vanishing numerator.
    const ProfileFunction p = quadratic_profile();
    CHECK(geodesic_torsion_numerator(p, 0.0, 2.0, 1.0, 0.0) == doctest::Approx(0.0));
    CHECK(geodesic_torsion_numerator(p, 0.0, 2.0, 0.0, 0.5) == doctest::Approx(0.0));
    // Pitch 1 at u = 1 along the radial direction: -h/u = -1.
    CHECK(geodesic_torsion_numerator(p, 1.0, 1.0, 1.0, 0.0) == doctest::Approx(-1.0));
    // Mixed direction with constant generator: -1/2 + 0 + 2 = 1.5.
    CHECK(geodesic_torsion_numerator(helicoid, 1.0, 2.0, 1.0, 1.0) == doctest::Approx(1.5));
}

TEST_CASE("full geodesic torsion shares the numerator's zero set") {
    const ProfileFunction p = quadratic_profile();
    const CurveState radial{2.0, 0.0, 1, 0, 0, 0};
    CHECK(geodesic_torsion(p, 0.0, radial) == doctest::Approx(0.0));
    const double tau = geodesic_torsion(p, 1.0, radial);
    // det g = 4, unit first form: numerator -1/2 scaled by 1/4.
    CHECK(tau == doctest::Approx(-0.125));
}

TEST_CASE("classify_parameter_curves matches the classification statements") {
    const ProfileFunction p = quadratic_profile();
    const ParameterCurvePair pair = classify_parameter_curves(p, 1.0, 2.0, 0.4);
    CHECK(pair.v_curve.is_geodesic);
    CHECK(!pair.u_curve.is_geodesic);
    CHECK(pair.u_curve.kappa_g == doctest::Approx(0.5));
    CHECK(pair.v_curve.kappa_n == doctest::Approx(2.0));          // g''
    CHECK(pair.u_curve.kappa_n == doctest::Approx(4.0 / 2.0));    // g'/u
    CHECK(pair.v_curve.tau_g_numerator == doctest::Approx(-0.5)); // -h/u
    CHECK(pair.u_curve.tau_g_numerator == doctest::Approx(0.5));  // +h/u

    // Constant generator: u = const curves are asymptotic.
    const ProfileFunction helicoid = profile_from(constant_fn(3.0), Interval{0.0});
    const ParameterCurvePair hp = classify_parameter_curves(helicoid, 1.0, 2.0, 0.0);
    CHECK(hp.u_curve.is_asymptotic);
    CHECK(hp.v_curve.is_asymptotic);  // g'' = 0 as well

    // Pitch 0: both parameter curves are lines of curvature.
    const ParameterCurvePair rev = classify_parameter_curves(p, 0.0, 1.5, 0.0);
    CHECK(rev.u_curve.is_line_of_curvature);
    CHECK(rev.v_curve.is_line_of_curvature);

    CHECK_THROWS_AS(classify_parameter_curves(p, 1.0, -1.0, 0.0), NotAdmissible);
    const ProfileFunction flat = flat_helicoidal_profile(1.0, 1.0);  // needs u > 1
    CHECK_THROWS_AS(classify_parameter_curves(flat, 1.0, 0.5, 0.0), NotAdmissible);
}

TEST_CASE("frame decomposition holds on parameter curves and geodesics") {
    RandomStream rng(51);
    for (int draw = 0; draw < 30; ++draw) {
        const double H0 = rng.uniform(-1.5, 1.5);
        const ProfileFunction profile = constant_H_profile(H0, rng.uniform(0.5, 2.0), 0.0);
        const double h = rng.uniform(-2.0, 2.0);
        const SurfaceChart chart = helicoidal_chart({profile, h}, {0.3, 8.0, -10.0, 10.0});
        const double u0 = rng.uniform(1.0, 4.0);
        const double v0 = rng.uniform(-1.0, 1.0);

        struct Curve {
            std::function<double(double)> u, v;
            CurveState state;
        };
        std::vector<Curve> curves;
        // v = const curve through (u0, v0) at s = 0.
        curves.push_back({[u0](double s) { return u0 + s; }, [v0](double) { return v0; },
                          {u0, v0, 1, 0, 0, 0}});
        // u = const curve.
        curves.push_back({[u0](double) { return u0; },
                          [u0, v0](double s) { return v0 + s / u0; },
                          {u0, v0, 0, 1.0 / u0, 0, 0}});
        // Straight line in the top view: a geodesic through (u0, v0).
        {
            const double theta = rng.uniform(0, 2 * kPi);
            const double x0 = u0 * std::cos(v0), y0 = u0 * std::sin(v0);
            const double dx = std::cos(theta), dy = std::sin(theta);
            auto px = [=](double s) { return x0 + s * dx; };
            auto py = [=](double s) { return y0 + s * dy; };
            const double cross = x0 * dy - y0 * dx;
            auto r2 = [=](double s) { return px(s) * px(s) + py(s) * py(s); };
            CurveState cs;
            cs.u = u0;
            cs.v = v0;
            cs.du = (x0 * dx + y0 * dy) / u0;
            cs.dv = cross / (u0 * u0);
            cs.ddu = cross * cross / (u0 * u0 * u0);
            cs.ddv = -2.0 * cross * (x0 * dx + y0 * dy) / (u0 * u0 * u0 * u0);
            curves.push_back({[=](double s) { return std::sqrt(r2(s)); },
                              [=](double s) { return std::atan2(py(s), px(s)); }, cs});
        }

        for (const Curve& curve : curves) {
            const auto frame = testing::frame_curve_oracle(chart, curve.u, curve.v, 0.0);
            const double kg = geodesic_curvature(profile, h, curve.state);
            const double kn = normal_curvature(profile, h, curve.state);
            CHECK(std::abs(kg - frame.kappa_g) <= 1e-5);
            CHECK(std::abs(kn - frame.kappa_n) <= 1e-5);

            // Componentwise: rdd = kappa_g sigma + kappa_n N, with sigma's top
            // view a unit vector orthogonal to the tangent.
            CHECK(std::abs(frame.rdd.x1 - kg * frame.sigma.x1) <= 1e-5);
            CHECK(std::abs(frame.rdd.x2 - kg * frame.sigma.x2) <= 1e-5);
            CHECK(std::abs(frame.rdd.x3 - (kg * frame.sigma.x3 + kn)) <= 1e-4);
            CHECK(frame.sigma.x1 * frame.sigma.x1 + frame.sigma.x2 * frame.sigma.x2 ==
                  doctest::Approx(1.0).epsilon(1e-6));
        }
    }
}

TEST_CASE("normal curvature matches the frame oracle on arbitrary unit-speed curves") {
    // An off-center top-view circle: generic curvature, still unit speed.
    const ProfileFunction profile = quadratic_profile();
    const double h = 1.0;
    const SurfaceChart chart = helicoidal_chart({profile, h}, {0.3, 8.0, -10.0, 10.0});

    auto px = [](double s) { return 2.0 + std::cos(s); };
    auto py = [](double s) { return std::sin(s); };
    auto u_of = [&](double s) { return std::hypot(px(s), py(s)); };
    auto v_of = [&](double s) { return std::atan2(py(s), px(s)); };

    for (double s : {0.3, kPi / 2, 2.0}) {
        const double u = u_of(s), v = v_of(s);
        // Arc-length derivatives of (u, v) for the unit circle around (2, 0):
        // with p.d = p . p' and cross = p x p', one has (p.d)' = 1 - cross and
        // cross' = p.d, so everything below is closed form.
        const double pdotd = px(s) * -std::sin(s) + py(s) * std::cos(s);
        const double cross = px(s) * std::cos(s) + py(s) * std::sin(s);
        const double du = pdotd / u;
        const double dv = cross / (u * u);
        const double ddu = cross * cross / (u * u * u) - cross / u;
        const double ddv = pdotd / (u * u) - 2.0 * pdotd * cross / (u * u * u * u);

        CurveState cs{u, v, du, dv, ddu, ddv};
        const double speed = cs.du * cs.du + u * u * cs.dv * cs.dv;
        REQUIRE(speed == doctest::Approx(1.0).epsilon(1e-9));

        const auto frame = testing::frame_curve_oracle(chart, u_of, v_of, s);
        const double kn = normal_curvature(profile, h, cs);
        CHECK(std::abs(kn - frame.kappa_n) <= 1e-5);
    }
}

TEST_CASE("sample_curve classifications") {
    const ProfileFunction p = quadratic_profile();
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(i * 0.1);

    // v = const line: geodesic at every sample.
    {
        const auto samples = sample_curve(p, 1.0, linear_fn(1.0, 1.0), constant_fn(0.7), grid);
        REQUIRE(samples.size() == grid.size());
        for (const auto& s : samples) {
            CHECK(s.classification.is_geodesic);
            CHECK(s.classification.kappa_n == doctest::Approx(2.0));  // g''
        }
    }

    // u = const circle with pitch 0: a line of curvature everywhere.
    {
        const auto samples =
            sample_curve(p, 0.0, constant_fn(2.0), linear_fn(0.5, 0.0), grid);
        for (const auto& s : samples) {
            CHECK(s.classification.is_line_of_curvature);
            CHECK(s.classification.kappa_g == doctest::Approx(0.5));
        }
    }

    // Non-unit-speed input is renormalized, not rejected: u(s) = 1 + 2s along
    // v = const classifies identically to its unit-speed version.
    {
        const auto fast = sample_curve(p, 1.0, linear_fn(2.0, 1.0), constant_fn(0.0), grid);
        for (const auto& s : fast) {
            CHECK(s.classification.is_geodesic);
            CHECK(s.classification.kappa_n == doctest::Approx(2.0));
            CHECK(s.state.du == doctest::Approx(1.0));  // rescaled to arc length
        }
    }

    // Derivative-free input takes the finite-difference path.
    {
        const ScalarFunction u_values{[](double s) { return 1.0 + s; }, nullptr, nullptr};
        const ScalarFunction v_values{[](double) { return 0.25; }, nullptr, nullptr};
        const auto samples = sample_curve(p, 1.0, u_values, v_values, grid);
        for (const auto& s : samples) {
            CHECK(s.classification.is_geodesic);
            CHECK(std::abs(s.classification.kappa_n - 2.0) <= 1e-4);
        }
    }

    // Leaving the admissible region raises.
    const ProfileFunction flat = flat_helicoidal_profile(1.0, 1.0);  // u > 1 only
    CHECK_THROWS_AS(sample_curve(flat, 1.0, linear_fn(-1.0, 2.0), constant_fn(0.0), grid),
                    NotAdmissible);
}

TEST_CASE("positions reported by sample_curve sit on the chart") {
    const ProfileFunction p = quadratic_profile();
    std::vector<double> grid{0.0, 0.5, 1.0};
    const auto samples = sample_curve(p, 1.5, linear_fn(1.0, 1.0), constant_fn(0.7), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double u = 1.0 + grid[i];
        CHECK(samples[i].position.x1 == doctest::Approx(u * std::cos(0.7)));
        CHECK(samples[i].position.x2 == doctest::Approx(u * std::sin(0.7)));
        CHECK(samples[i].position.x3 == doctest::Approx(u * u + 1.5 * 0.7));
    }
}
