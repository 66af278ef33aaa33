#include "dsbvp/problem.hpp"

#include <cmath>
#include <utility>

#include "dsbvp/errors.hpp"

namespace dsbvp {

bool is_dirichlet(const BoundaryCondition& bc) {
    return std::holds_alternative<DirichletBC>(bc);
}

void validate(const BoundaryCondition& bc) {
    if (const auto* robin = std::get_if<NeumannRobinBC>(&bc)) {
        if (robin->alpha == 0.0) {
            throw InvalidBoundaryCondition(
                "mixed condition needs a nonzero coefficient on y(1)");
        }
    }
}

ScalarFn finite_difference_derivative(ScalarFn fn) {
    return [fn = std::move(fn)](double x) {
        const double h = std::abs(x) * 1e-7 + 1e-12;
        return (fn(x + h) - fn(x - h)) / (2.0 * h);
    };
}

}  // namespace dsbvp
