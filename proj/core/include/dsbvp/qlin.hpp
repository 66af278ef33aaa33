#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dsbvp/haar.hpp"
#include "dsbvp/linalg.hpp"
#include "dsbvp/problem.hpp"

namespace dsbvp {

/*
 * Outer loop: freeze the nonlinearity about the previous iterate,
 *
 *   p y'' + p' y' + r(x) y = g(x),
 *   r = -q f_y(x, y~),  g = q (f(x, y~) - y~ f_y(x, y~)),
 *
 * expand y'' in the Haar family and collocate at the grid midpoints.
 * The expansion already satisfies the boundary data termwise, so every
 * iterate meets it exactly no matter how far the outer loop has run.
 */

struct LinearizedCoeffs {
    double r;
    double g;
};

// Coefficients at one abscissa, expanded about y_prev (after the guard,
// when the problem carries one). Throws DomainViolation when the guard
// rejects y_prev, NonFiniteEvaluation when q, f or f_y come back
// NaN/Inf.
LinearizedCoeffs linearize(const ProblemSpec& spec, double x, double y_prev);

// Collocation system for value conditions at both ends. y_prev holds the
// previous iterate at the grid nodes.
DenseSystem assemble_dirichlet(const ProblemSpec& spec, const HaarBasis& basis,
                               const std::vector<double>& y_prev);

// Collocation system for y'(0) = 0 with a mixed condition at x = 1.
DenseSystem assemble_robin(const ProblemSpec& spec, const HaarBasis& basis,
                           const std::vector<double>& y_prev);

// Value of the expansion (order 0), its first or second derivative,
// at x in [0,1]. The second derivative follows the half-open wavelet
// convention and is not defined at x = 1.
double reconstruct(const std::vector<double>& coeffs, const HaarBasis& basis,
                   const BoundaryCondition& bc, double x, int order = 0);

struct SolverConfig {
    int resolution = 3;      // J; grid has 2^(J+1) nodes
    int max_iters = 12;
    double tol_outer = 1e-10;
    GaussOptions gauss;
    // Starting iterate, sampled at the grid nodes. Default: the straight
    // line (or constant) that already satisfies the boundary data.
    ScalarFn initial_guess;
    // When set, failing to meet tol_outer within max_iters throws
    // NotConverged instead of returning a flagged solution.
    bool require_convergence = false;
};

// Snapshot handed to the observer after each sweep. The grids are the
// reconstruction formulas applied to coeffs at the collocation nodes.
struct QlinState {
    int iteration;  // 1-based sweep count
    double delta;   // max-norm change of y over the grid
    std::vector<double> coeffs;
    std::vector<double> y_grid;
    std::vector<double> yp_grid;
    std::vector<double> ypp_grid;
};

using IterationObserver = std::function<void(const QlinState&)>;

class Solution {
public:
    Solution(HaarBasis basis, BoundaryCondition bc, std::vector<double> coeffs,
             std::vector<double> delta_history, bool converged, int iterations);

    double evaluate(double x, int order = 0) const;

    const HaarBasis& basis() const noexcept { return basis_; }
    const BoundaryCondition& boundary() const noexcept { return bc_; }
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    const std::vector<double>& delta_history() const noexcept { return delta_history_; }
    bool converged() const noexcept { return converged_; }
    int iterations() const noexcept { return iterations_; }

private:
    HaarBasis basis_;
    BoundaryCondition bc_;
    std::vector<double> coeffs_;
    std::vector<double> delta_history_;
    bool converged_;
    int iterations_;
};

Solution solve(const ProblemSpec& spec, const SolverConfig& config = {},
               const IterationObserver& observer = {});

// (sweep number, max-norm change) pairs, 1-based.
std::vector<std::pair<int, double>> convergence_history(const Solution& sol);

struct RateRatio {
    int iteration;  // sweep index of the pair's first member
    double ratio;   // delta_{n+1} / delta_n^2
};

// Ratios delta_{n+1} / delta_n^2 over consecutive pairs where both
// members still sit above floor_multiplier times the stall floor
// (the smallest delta seen, clipped below at 1e-15). Pairs with a
// member at or near the floor measure roundoff, not the rate, and are
// skipped.
std::vector<RateRatio> quadratic_rate_ratios(const std::vector<double>& deltas,
                                             double floor_multiplier = 100.0);

}  // namespace dsbvp
