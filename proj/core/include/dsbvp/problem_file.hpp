#pragma once

#include <iosfwd>
#include <string>

#include "dsbvp/problem.hpp"

namespace dsbvp {

/*
 * Plain key = value description of one problem. '#' starts a comment,
 * blank lines are skipped, keys may appear once.
 *
 *   p        = x^2             # coefficient, in x (required)
 *   p_prime  = 2*x             # optional; central differences when absent
 *   q        = x^2             # required, in x
 *   f        = y^5             # required, in x and y
 *   f_y      = 5*y^4           # required, in x and y
 *   bc.kind  = neumann_robin   # or dirichlet
 *   bc.alpha = 1
 *   bc.beta  = 0
 *   bc.gamma = sqrt(3)/2       # mixed conditions only
 *   guard    = y               # optional projection, in y; NaN rejects
 *
 * For dirichlet, alpha and beta are the end values y(0) and y(1) and
 * gamma must be absent. Boundary entries are constant expressions.
 */

// Throws ParseError carrying the line number and field name.
ProblemSpec parse_problem(std::istream& in);
ProblemSpec parse_problem_file(const std::string& path);

}  // namespace dsbvp
