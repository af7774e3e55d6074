#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

#include "isokit/core.hpp"

namespace isokit {

// det(g) values at or below this are treated as an isotropic tangent plane.
inline constexpr double kAdmissibilityTol = 1e-12;

// Default step for finite-difference cross checks. Chosen as the rough
// optimum for second-derivative stencils in double precision.
inline constexpr double kDefaultFdStep = 1e-4;

// Top-view inner product: the only scalar product the geometry has.
inline double dot_tv(const Vec3& a, const Vec3& b) {
    return a.x1 * b.x1 + a.x2 * b.x2;
}

inline double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
    return a.x1 * (b.x2 * c.x3 - b.x3 * c.x2)
         - a.x2 * (b.x1 * c.x3 - b.x3 * c.x1)
         + a.x3 * (b.x1 * c.x2 - b.x2 * c.x1);
}

// Recursive adaptive Simpson quadrature.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

// Deterministic random draws for property tests and the theorem suite.
// Doubles are produced from raw engine output so reports are byte-identical
// across standard library implementations.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    int pick(int n) {  // uniform in [0, n)
        return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace isokit
