#pragma once

#include <vector>

namespace dsbvp {

// Square system A a = b in row-major storage.
struct DenseSystem {
    int n = 0;
    std::vector<double> matrix;  // n * n
    std::vector<double> rhs;     // n

    double& entry(int row, int col) {
        return matrix[static_cast<size_t>(row) * n + col];
    }
    double entry(int row, int col) const {
        return matrix[static_cast<size_t>(row) * n + col];
    }
};

struct GaussOptions {
    // Pivot magnitudes at or below pivot_floor_rel * ||A||_inf abort the
    // elimination.
    double pivot_floor_rel = 1e-13;
    // Acceptance bound on ||A a - b||_inf relative to
    // ||A||_inf ||a||_inf + ||b||_inf.
    double tol_solve = 1e-10;
};

// Gaussian elimination with partial pivoting, followed by a residual
// check against the original system. Throws NonFiniteInput on NaN/Inf
// entries, InvalidArgument on shape mismatches, SingularMatrix when a
// pivot dips below the floor or the residual check fails.
std::vector<double> gauss_solve(const DenseSystem& system,
                                const GaussOptions& options = {});

}  // namespace dsbvp
