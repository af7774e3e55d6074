#include "isokit/numeric.hpp"

namespace isokit {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return (fa + 4.0 * fm + fb) * h / 6.0;
}

double adaptive(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return adaptive(f, a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol, 48);
}

}  // namespace isokit
