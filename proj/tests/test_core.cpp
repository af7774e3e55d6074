#include <doctest.h>

#include <cmath>
#include <numbers>

#include "isokit/core.hpp"
#include "isokit/numeric.hpp"

using namespace isokit;

namespace {
Motion random_motion(RandomStream& rng) {
    return {rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5),
            rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-6.4, 6.4)};
}
Point3 random_point(RandomStream& rng) {
    return {rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};
}
}  // namespace

TEST_CASE("i_distance measures top views only") {
    CHECK(i_distance({0, 0, 0}, {3, 4, 7}) == doctest::Approx(5.0));
    CHECK(i_distance({-1, 0, 5}, {2, 4, 1}) == doctest::Approx(5.0));
    // Distinct points on a vertical line: distance 0, the defining
    // degeneracy of the metric.
    CHECK(i_distance({1, 2, 3}, {1, 2, 10}) == 0.0);
}

TEST_CASE("top_view drops the third coordinate") {
    const Vec2 a = top_view({1, 2, 3});
    CHECK(a.x1 == 1.0);
    CHECK(a.x2 == 2.0);
    const Vec2 b = top_view({0, 0, 9});
    CHECK(b.x1 == 0.0);
    CHECK(b.x2 == 0.0);
    const Vec2 c = top_view({-4, 5, 0});
    CHECK(c.x1 == -4.0);
    CHECK(c.x2 == 5.0);
}

TEST_CASE("apply_motion basics") {
    const Point3 x{1.0, -2.0, 0.5};
    const Point3 same = apply_motion({}, x);
    CHECK(same.x1 == x.x1);
    CHECK(same.x2 == x.x2);
    CHECK(same.x3 == x.x3);

    const Point3 translated = apply_motion({1, 2, 3, 0, 0, 0}, {0, 0, 0});
    CHECK(translated.x1 == 1.0);
    CHECK(translated.x2 == 2.0);
    CHECK(translated.x3 == 3.0);

    // Pure shear moves x3 by d*x1 and leaves the top view alone.
    const Point3 sheared = apply_motion({0, 0, 0, 1, 0, 0}, {1, 0, 5});
    CHECK(sheared.x1 == 1.0);
    CHECK(sheared.x2 == 0.0);
    CHECK(sheared.x3 == 6.0);

    const Motion quarter{0, 0, 0, 0, 0, std::numbers::pi / 2};
    const Point3 r = apply_motion(quarter, {1, 0, 0});
    CHECK(r.x1 == doctest::Approx(0.0));
    CHECK(r.x2 == doctest::Approx(1.0));
    CHECK(motion_preserves_distance(quarter, {1, 0, 0}, {0, 0, 0}));
}

TEST_CASE("every motion is an isometry of the i-distance") {
    RandomStream rng(11);
    for (int i = 0; i < 200; ++i) {
        const Motion m = random_motion(rng);
        CHECK(motion_preserves_distance(m, random_point(rng), random_point(rng)));
    }
}

TEST_CASE("motion composition is closed") {
    RandomStream rng(12);
    for (int i = 0; i < 200; ++i) {
        const Motion m1 = random_motion(rng);
        const Motion m2 = random_motion(rng);
        const Point3 x = random_point(rng);
        const Point3 chained = apply_motion(m2, apply_motion(m1, x));
        const Point3 composed = apply_motion(compose(m2, m1), x);
        CHECK(chained.x1 == doctest::Approx(composed.x1).epsilon(1e-12));
        CHECK(chained.x2 == doctest::Approx(composed.x2).epsilon(1e-12));
        CHECK(chained.x3 == doctest::Approx(composed.x3).epsilon(1e-12));
    }
}

TEST_CASE("i_distance is a pseudo-metric") {
    RandomStream rng(13);
    for (int i = 0; i < 100; ++i) {
        const Point3 x = random_point(rng), y = random_point(rng), z = random_point(rng);
        CHECK(i_distance(x, x) == 0.0);
        CHECK(i_distance(x, y) == i_distance(y, x));
        CHECK(i_distance(x, z) <= i_distance(x, y) + i_distance(y, z) + 1e-12);
    }
}
