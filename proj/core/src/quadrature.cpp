#include "dsbvp/quadrature.hpp"

#include <cmath>
#include <string>

#include "dsbvp/errors.hpp"

namespace dsbvp {

namespace {

double checked(const std::function<double(double)>& fn, double t) {
    const double v = fn(t);
    if (!std::isfinite(v)) {
        throw QuadratureNonFinite("integrand is not finite at t = " + std::to_string(t));
    }
    return v;
}

}  // namespace

double midpoint(const std::function<double(double)>& fn, double a, double b, int n) {
    if (n < 1) {
        throw OutOfRange("midpoint: panel count must be positive");
    }
    const double h = (b - a) / n;
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
        s += checked(fn, a + (k + 0.5) * h);
    }
    return s * h;
}

double graded_midpoint(const std::function<double(double)>& fn, double upper, int n) {
    if (n < 1) {
        throw OutOfRange("graded_midpoint: panel count must be positive");
    }
    if (!(upper > 0.0)) {
        throw OutOfRange("graded_midpoint: upper limit must be positive");
    }
    // Midpoint rule after the substitution t = upper * v^2: nodes at the
    // image of the v-midpoints, weights equal to the graded panel widths.
    // Inverse-square-root singularities at 0 integrate exactly.
    double s = 0.0;
    double lo = 0.0;
    for (int k = 1; k <= n; ++k) {
        const double frac = static_cast<double>(k) / n;
        const double hi = upper * frac * frac;
        const double mid = (k - 0.5) / n;
        s += checked(fn, upper * mid * mid) * (hi - lo);
        lo = hi;
    }
    return s;
}

AdaptiveQuad graded_midpoint_adaptive(const std::function<double(double)>& fn,
                                      double upper, double tol, int n0,
                                      int max_panels) {
    AdaptiveQuad out;
    double prev = graded_midpoint(fn, upper, n0);
    for (int n = 2 * n0; n <= max_panels; n *= 2) {
        const double cur = graded_midpoint(fn, upper, n);
        out.value = cur;
        out.panels = n;
        if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) {
            out.converged = true;
            return out;
        }
        prev = cur;
    }
    return out;
}

}  // namespace dsbvp
