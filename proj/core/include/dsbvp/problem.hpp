#pragma once

#include <functional>
#include <variant>

namespace dsbvp {

using ScalarFn = std::function<double(double)>;
using BivariateFn = std::function<double(double, double)>;

// y(0) = alpha, y(1) = beta.
struct DirichletBC {
    double alpha = 0.0;
    double beta = 0.0;
};

// y'(0) = 0 together with alpha * y(1) + beta * y'(1) = gamma.
// alpha must be nonzero; with alpha = 0 the value at x = 1 is
// undetermined by the condition.
struct NeumannRobinBC {
    double alpha = 1.0;
    double beta = 0.0;
    double gamma = 0.0;
};

using BoundaryCondition = std::variant<DirichletBC, NeumannRobinBC>;

bool is_dirichlet(const BoundaryCondition& bc);

// Throws InvalidBoundaryCondition when the data is unusable.
void validate(const BoundaryCondition& bc);

// Coefficients and nonlinearity of  (p(x) y')' = q(x) f(x, y)  on (0,1).
// p and q may vanish at x = 0; they are only ever evaluated at interior
// points. All five callables are required.
struct ProblemSpec {
    ScalarFn p;
    ScalarFn p_prime;
    ScalarFn q;
    BivariateFn f;
    BivariateFn f_y;
    BoundaryCondition bc;

    // Optional projection applied to the iterate before f and f_y see
    // it. Returning NaN rejects the value outright (DomainViolation).
    // Leave empty when f is defined everywhere.
    ScalarFn domain_guard;
};

// Central-difference fallback for p' when no analytic derivative is at
// hand. Step h = |x| * 1e-7 + 1e-12; expect accuracy loss near x = 0 for
// fractional powers.
ScalarFn finite_difference_derivative(ScalarFn fn);

}  // namespace dsbvp
