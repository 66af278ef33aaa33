#include "dsbvp/qlin.hpp"

#include <cmath>
#include <string>

#include "dsbvp/errors.hpp"

namespace dsbvp {

namespace {

void require_callables(const ProblemSpec& spec) {
    if (!spec.p || !spec.p_prime || !spec.q || !spec.f || !spec.f_y) {
        throw InvalidProblem("problem needs p, p_prime, q, f and f_y");
    }
}

double checked_eval(const ScalarFn& fn, double x, const char* name) {
    const double v = fn(x);
    if (!std::isfinite(v)) {
        throw NonFiniteEvaluation(std::string(name) + "(" + std::to_string(x) +
                                  ") is not finite");
    }
    return v;
}

std::string sweep_msg(int sweep, const char* what) {
    return "sweep " + std::to_string(sweep) + ": " + what;
}

template <typename Fn>
auto with_sweep_context(int sweep, Fn&& fn) {
    try {
        return fn();
    } catch (const DomainViolation& e) {
        throw DomainViolation(sweep_msg(sweep, e.what()));
    } catch (const NonFiniteEvaluation& e) {
        throw NonFiniteEvaluation(sweep_msg(sweep, e.what()));
    } catch (const NonFiniteInput& e) {
        throw NonFiniteInput(sweep_msg(sweep, e.what()));
    } catch (const SingularMatrix& e) {
        throw SingularMatrix(sweep_msg(sweep, e.what()));
    }
}

}  // namespace

LinearizedCoeffs linearize(const ProblemSpec& spec, double x, double y_prev) {
    require_callables(spec);
    double y = y_prev;
    if (spec.domain_guard) {
        y = spec.domain_guard(y_prev);
        if (std::isnan(y)) {
            throw DomainViolation("iterate y = " + std::to_string(y_prev) +
                                  " at x = " + std::to_string(x) +
                                  " rejected by the domain guard");
        }
    }
    const double q = checked_eval(spec.q, x, "q");
    const double f = spec.f(x, y);
    const double fy = spec.f_y(x, y);
    if (!std::isfinite(f)) {
        throw NonFiniteEvaluation("f(" + std::to_string(x) + ", " +
                                  std::to_string(y) + ") is not finite");
    }
    if (!std::isfinite(fy)) {
        throw NonFiniteEvaluation("f_y(" + std::to_string(x) + ", " +
                                  std::to_string(y) + ") is not finite");
    }
    return LinearizedCoeffs{-q * fy, q * (f - y * fy)};
}

namespace {

DenseSystem assemble_common(const ProblemSpec& spec, const HaarBasis& basis,
                            const std::vector<double>& y_prev, bool dirichlet) {
    require_callables(spec);
    validate(spec.bc);
    if (dirichlet != is_dirichlet(spec.bc)) {
        throw InvalidArgument("assemble: boundary condition kind does not match");
    }
    const int n = basis.size();
    if (y_prev.size() != static_cast<size_t>(n)) {
        throw InvalidArgument("assemble: previous iterate has " +
                              std::to_string(y_prev.size()) + " values, grid has " +
                              std::to_string(n));
    }

    DenseSystem sys;
    sys.n = n;
    sys.matrix.resize(static_cast<size_t>(n) * n);
    sys.rhs.resize(static_cast<size_t>(n));

    const DirichletBC* dir = std::get_if<DirichletBC>(&spec.bc);
    const NeumannRobinBC* rob = std::get_if<NeumannRobinBC>(&spec.bc);

    for (int l = 0; l < n; ++l) {
        const double x = basis.grid()[static_cast<size_t>(l)];
        const double p = checked_eval(spec.p, x, "p");
        const double pp = checked_eval(spec.p_prime, x, "p_prime");
        const LinearizedCoeffs lc = linearize(spec, x, y_prev[static_cast<size_t>(l)]);

        if (dir) {
            const double slope = dir->beta - dir->alpha;
            for (int i = 1; i <= n; ++i) {
                sys.entry(l, i - 1) = p * basis.h_at(i, l) +
                                      pp * (basis.p1_at(i, l) - basis.c1(i)) +
                                      lc.r * (basis.p2_at(i, l) - basis.c1(i) * x);
            }
            sys.rhs[static_cast<size_t>(l)] =
                lc.g - pp * slope - lc.r * (dir->alpha + slope * x);
        } else {
            for (int i = 1; i <= n; ++i) {
                sys.entry(l, i - 1) = p * basis.h_at(i, l) + pp * basis.p1_at(i, l) +
                                      lc.r * (basis.p2_at(i, l) - basis.c1(i));
            }
            sys.entry(l, 0) -= lc.r * rob->beta / rob->alpha;
            sys.rhs[static_cast<size_t>(l)] = lc.g - lc.r * rob->gamma / rob->alpha;
        }
    }
    return sys;
}

}  // namespace

DenseSystem assemble_dirichlet(const ProblemSpec& spec, const HaarBasis& basis,
                               const std::vector<double>& y_prev) {
    return assemble_common(spec, basis, y_prev, true);
}

DenseSystem assemble_robin(const ProblemSpec& spec, const HaarBasis& basis,
                           const std::vector<double>& y_prev) {
    return assemble_common(spec, basis, y_prev, false);
}

double reconstruct(const std::vector<double>& coeffs, const HaarBasis& basis,
                   const BoundaryCondition& bc, double x, int order) {
    const int n = basis.size();
    if (coeffs.size() != static_cast<size_t>(n)) {
        throw InvalidArgument("reconstruct: " + std::to_string(coeffs.size()) +
                              " coefficients for a basis of " + std::to_string(n));
    }
    if (order < 0 || order > 2) {
        throw OutOfRange("reconstruct: order must be 0, 1 or 2");
    }
    if (!(x >= 0.0 && x <= 1.0)) {
        throw OutOfRange("reconstruct: x = " + std::to_string(x) + " outside [0,1]");
    }
    if (order == 2 && x == 1.0) {
        throw OutOfRange("reconstruct: second derivative is undefined at x = 1");
    }
    validate(bc);

    if (order == 2) {
        double s = 0.0;
        for (int i = 1; i <= n; ++i) {
            s += coeffs[static_cast<size_t>(i - 1)] * basis.h(i, x);
        }
        return s;
    }

    if (const auto* dir = std::get_if<DirichletBC>(&bc)) {
        const double slope = dir->beta - dir->alpha;
        if (order == 0) {
            double s = dir->alpha + slope * x;
            for (int i = 1; i <= n; ++i) {
                s += coeffs[static_cast<size_t>(i - 1)] *
                     (basis.p2(i, x) - basis.c1(i) * x);
            }
            return s;
        }
        double s = slope;
        for (int i = 1; i <= n; ++i) {
            s += coeffs[static_cast<size_t>(i - 1)] * (basis.p1(i, x) - basis.c1(i));
        }
        return s;
    }

    const auto& rob = std::get<NeumannRobinBC>(bc);
    if (order == 0) {
        double s = rob.gamma / rob.alpha - coeffs[0] * rob.beta / rob.alpha;
        for (int i = 1; i <= n; ++i) {
            s += coeffs[static_cast<size_t>(i - 1)] * (basis.p2(i, x) - basis.c1(i));
        }
        return s;
    }
    double s = 0.0;
    for (int i = 1; i <= n; ++i) {
        s += coeffs[static_cast<size_t>(i - 1)] * basis.p1(i, x);
    }
    return s;
}

Solution::Solution(HaarBasis basis, BoundaryCondition bc, std::vector<double> coeffs,
                   std::vector<double> delta_history, bool converged, int iterations)
    : basis_(std::move(basis)),
      bc_(std::move(bc)),
      coeffs_(std::move(coeffs)),
      delta_history_(std::move(delta_history)),
      converged_(converged),
      iterations_(iterations) {}

double Solution::evaluate(double x, int order) const {
    return reconstruct(coeffs_, basis_, bc_, x, order);
}

Solution solve(const ProblemSpec& spec, const SolverConfig& config,
               const IterationObserver& observer) {
    require_callables(spec);
    validate(spec.bc);
    if (config.resolution < 0 || config.resolution > 16) {
        throw OutOfRange("solve: resolution outside 0..16");
    }
    if (config.max_iters < 1) {
        throw InvalidArgument("solve: max_iters must be at least 1");
    }
    if (!(config.tol_outer > 0.0)) {
        throw InvalidArgument("solve: tol_outer must be positive");
    }

    HaarBasis basis(config.resolution);
    const int n = basis.size();
    const std::vector<double>& grid = basis.grid();
    const bool dirichlet = is_dirichlet(spec.bc);

    // The expansion keeps p and q away from x = 0 and x = 1, but they
    // still have to make sense where we collocate.
    for (double x : grid) {
        const double p = checked_eval(spec.p, x, "p");
        checked_eval(spec.p_prime, x, "p_prime");
        const double q = checked_eval(spec.q, x, "q");
        if (!(p > 0.0) || !(q > 0.0)) {
            throw InvalidProblem("p and q must be positive on the grid; at x = " +
                                 std::to_string(x) + " got p = " + std::to_string(p) +
                                 ", q = " + std::to_string(q));
        }
    }

    std::vector<double> y_prev;
    if (config.initial_guess) {
        y_prev.resize(static_cast<size_t>(n));
        for (int l = 0; l < n; ++l) {
            y_prev[static_cast<size_t>(l)] =
                checked_eval(config.initial_guess, grid[static_cast<size_t>(l)],
                             "initial_guess");
        }
    } else if (const auto* dir = std::get_if<DirichletBC>(&spec.bc)) {
        y_prev.resize(static_cast<size_t>(n));
        for (int l = 0; l < n; ++l) {
            y_prev[static_cast<size_t>(l)] =
                dir->alpha + (dir->beta - dir->alpha) * grid[static_cast<size_t>(l)];
        }
    } else {
        const auto& rob = std::get<NeumannRobinBC>(spec.bc);
        y_prev.assign(static_cast<size_t>(n), rob.gamma / rob.alpha);
    }

    std::vector<double> coeffs;
    std::vector<double> history;
    history.reserve(static_cast<size_t>(config.max_iters));
    bool converged = false;
    int sweeps = 0;

    for (int sweep = 1; sweep <= config.max_iters; ++sweep) {
        sweeps = sweep;
        DenseSystem sys = with_sweep_context(sweep, [&] {
            return dirichlet ? assemble_dirichlet(spec, basis, y_prev)
                             : assemble_robin(spec, basis, y_prev);
        });
        coeffs = with_sweep_context(sweep, [&] { return gauss_solve(sys, config.gauss); });

        std::vector<double> y_next(static_cast<size_t>(n));
        double delta = 0.0;
        for (int l = 0; l < n; ++l) {
            y_next[static_cast<size_t>(l)] =
                reconstruct(coeffs, basis, spec.bc, grid[static_cast<size_t>(l)], 0);
            delta = std::max(delta, std::abs(y_next[static_cast<size_t>(l)] -
                                             y_prev[static_cast<size_t>(l)]));
        }
        history.push_back(delta);

        if (observer) {
            QlinState state;
            state.iteration = sweep;
            state.delta = delta;
            state.coeffs = coeffs;
            state.y_grid = y_next;
            state.yp_grid.resize(static_cast<size_t>(n));
            state.ypp_grid.resize(static_cast<size_t>(n));
            for (int l = 0; l < n; ++l) {
                state.yp_grid[static_cast<size_t>(l)] =
                    reconstruct(coeffs, basis, spec.bc, grid[static_cast<size_t>(l)], 1);
                state.ypp_grid[static_cast<size_t>(l)] =
                    reconstruct(coeffs, basis, spec.bc, grid[static_cast<size_t>(l)], 2);
            }
            observer(state);
        }

        y_prev = std::move(y_next);
        if (delta <= config.tol_outer) {
            converged = true;
            break;
        }
    }

    if (!converged && config.require_convergence) {
        throw NotConverged("solve: max-norm change " +
                           std::to_string(history.back()) + " after " +
                           std::to_string(sweeps) + " sweeps, tolerance " +
                           std::to_string(config.tol_outer));
    }
    return Solution(std::move(basis), spec.bc, std::move(coeffs), std::move(history),
                    converged, sweeps);
}

std::vector<std::pair<int, double>> convergence_history(const Solution& sol) {
    std::vector<std::pair<int, double>> out;
    out.reserve(sol.delta_history().size());
    int n = 1;
    for (double d : sol.delta_history()) {
        out.emplace_back(n++, d);
    }
    return out;
}

std::vector<RateRatio> quadratic_rate_ratios(const std::vector<double>& deltas,
                                             double floor_multiplier) {
    std::vector<RateRatio> out;
    if (deltas.size() < 2) {
        return out;
    }
    double floor = deltas.front();
    for (double d : deltas) {
        floor = std::min(floor, d);
    }
    floor = std::max(floor, 1e-15);
    const double threshold = floor_multiplier * floor;
    for (size_t k = 0; k + 1 < deltas.size(); ++k) {
        if (deltas[k] > threshold && deltas[k + 1] > threshold) {
            out.push_back(RateRatio{static_cast<int>(k) + 1,
                                    deltas[k + 1] / (deltas[k] * deltas[k])});
        }
    }
    return out;
}

}  // namespace dsbvp
