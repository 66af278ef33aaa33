#pragma once

#include <functional>
#include <vector>

#include "dsbvp/problem.hpp"
#include "dsbvp/qlin.hpp"

namespace dsbvp {

/*
 * Integral form used as an independent check on the collocation solver.
 * With b(x) = int_0^x dt/p(t) and v carrying the boundary data, a true
 * solution satisfies
 *
 *   y(x) = v(x) - int_0^1 G(x,t) q(t) f(t, y(t)) dt,
 *
 * where the kernel is nonnegative:
 *
 *   value conditions:  G(x,t) = b(min) (b(1) - b(max)) / b(1),
 *                      v(x)   = alpha + (beta - alpha) b(x) / b(1);
 *   flux/mixed:        G(x,t) = b(1) - b(max) + beta2 b'(1) / alpha2,
 *                      v(x)   = gamma2 / alpha2.
 *
 * The mixed-family kernel only ever needs b(1) - b(t), which stays
 * finite on (0,1] even when b itself diverges at 0 (p = x^a, a >= 1).
 * For value conditions at both ends a divergent b means no kernel
 * exists at all.
 */

// Closed forms for the 1/p antiderivative, when known.
struct AnalyticKernelData {
    ScalarFn b;            // int_0^x dt/p(t)
    ScalarFn b1_minus_b;   // b(1) - b(t); derived from b when empty
};

struct KernelSpec {
    BoundaryCondition bc;
    ScalarFn b;            // empty when b diverges at 0
    ScalarFn b1_minus_b;
    double b1 = 0.0;       // b(1); NaN when b is unavailable
    double b1_prime = 0.0; // 1/p(1)
    bool analytic = false;
};

// b(x) for x in (0,1]: closed form when supplied, otherwise graded
// adaptive quadrature of 1/p over (0,x]. Throws QuadratureNotConverged
// when panel doubling stalls.
double b_eval(const ProblemSpec& spec, double x,
              const AnalyticKernelData& analytic = {});

// Resolves kernel availability up front. Throws UnavailableKernel for
// value conditions at both ends when b(x) does not exist.
KernelSpec make_kernel(const ProblemSpec& spec,
                       const AnalyticKernelData& analytic = {});

// G(x,t) for x, t in (0,1].
double greens_kernel(const KernelSpec& kernel, double x, double t);

// Boundary term v(x), x in [0,1].
double v_eval(const KernelSpec& kernel, double x);

// Default probe set: 33 equispaced interior points l/34.
std::vector<double> oracle_probes();

// sup over the probes of |y(x) - v(x) + quad(G(x,.) q f(., y))| with the
// integral taken on a graded midpoint mesh of n_quad panels. Small for a
// true solution; stalls at the discretisation error for an approximate
// one.
double integral_residual(const std::function<double(double)>& y,
                         const ProblemSpec& spec, const KernelSpec& kernel,
                         int n_quad);
double integral_residual(const std::function<double(double)>& y,
                         const ProblemSpec& spec, const KernelSpec& kernel,
                         int n_quad, const std::vector<double>& probes);

double integral_residual(const Solution& sol, const ProblemSpec& spec,
                         const KernelSpec& kernel, int n_quad);

}  // namespace dsbvp
