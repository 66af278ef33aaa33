#pragma once

#include <functional>

namespace dsbvp {

// Composite midpoint rule over [a, b] with n uniform panels. Throws
// QuadratureNonFinite when the integrand returns NaN/Inf at a node,
// OutOfRange for n < 1.
double midpoint(const std::function<double(double)>& fn, double a, double b, int n);

// Composite midpoint over (0, upper] with panel edges at
// upper * (k/n)^2, crowding panels toward the singular end while never
// touching it. Nodes sit at the graded image of the panel midpoints, so
// the rule is the plain midpoint rule in the substituted variable
// t = upper * v^2 and handles 1/sqrt(t)-type endpoint singularities
// exactly; 1/t and worse still diverge under panel doubling.
double graded_midpoint(const std::function<double(double)>& fn, double upper, int n);

struct AdaptiveQuad {
    double value = 0.0;
    bool converged = false;
    int panels = 0;
};

// Doubles the graded panel count from n0 until two successive estimates
// agree to tol (absolute + relative). A divergent integral shows up as
// estimates that keep growing; the result comes back with
// converged = false instead of throwing, so callers can decide whether
// that is fatal.
AdaptiveQuad graded_midpoint_adaptive(const std::function<double(double)>& fn,
                                      double upper, double tol, int n0 = 64,
                                      int max_panels = 1 << 18);

}  // namespace dsbvp
