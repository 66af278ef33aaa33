#include "dsbvp/linalg.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "dsbvp/errors.hpp"

namespace dsbvp {

namespace {

double inf_norm_matrix(const std::vector<double>& m, int n) {
    double norm = 0.0;
    for (int r = 0; r < n; ++r) {
        double row = 0.0;
        for (int c = 0; c < n; ++c) {
            row += std::abs(m[static_cast<size_t>(r) * n + c]);
        }
        norm = std::max(norm, row);
    }
    return norm;
}

double inf_norm_vector(const std::vector<double>& v) {
    double norm = 0.0;
    for (double x : v) {
        norm = std::max(norm, std::abs(x));
    }
    return norm;
}

}  // namespace

std::vector<double> gauss_solve(const DenseSystem& system,
                                const GaussOptions& options) {
    const int n = system.n;
    if (n <= 0) {
        throw InvalidArgument("gauss_solve: system order must be positive");
    }
    if (system.matrix.size() != static_cast<size_t>(n) * n ||
        system.rhs.size() != static_cast<size_t>(n)) {
        throw InvalidArgument("gauss_solve: matrix/rhs sizes do not match order " +
                              std::to_string(n));
    }
    for (double v : system.matrix) {
        if (!std::isfinite(v)) {
            throw NonFiniteInput("gauss_solve: matrix contains a non-finite entry");
        }
    }
    for (double v : system.rhs) {
        if (!std::isfinite(v)) {
            throw NonFiniteInput("gauss_solve: rhs contains a non-finite entry");
        }
    }

    const double norm_a = inf_norm_matrix(system.matrix, n);
    const double pivot_floor = options.pivot_floor_rel * norm_a;

    std::vector<double> a = system.matrix;
    std::vector<double> b = system.rhs;

    for (int col = 0; col < n; ++col) {
        int pivot_row = col;
        double pivot_mag = std::abs(a[static_cast<size_t>(col) * n + col]);
        for (int r = col + 1; r < n; ++r) {
            const double mag = std::abs(a[static_cast<size_t>(r) * n + col]);
            if (mag > pivot_mag) {
                pivot_mag = mag;
                pivot_row = r;
            }
        }
        if (pivot_mag <= pivot_floor) {
            throw SingularMatrix("gauss_solve: pivot " + std::to_string(pivot_mag) +
                                 " in column " + std::to_string(col) +
                                 " is at or below the floor " +
                                 std::to_string(pivot_floor));
        }
        if (pivot_row != col) {
            for (int c = col; c < n; ++c) {
                std::swap(a[static_cast<size_t>(col) * n + c],
                          a[static_cast<size_t>(pivot_row) * n + c]);
            }
            std::swap(b[static_cast<size_t>(col)], b[static_cast<size_t>(pivot_row)]);
        }
        const double pivot = a[static_cast<size_t>(col) * n + col];
        for (int r = col + 1; r < n; ++r) {
            const double factor = a[static_cast<size_t>(r) * n + col] / pivot;
            if (factor == 0.0) {
                continue;
            }
            a[static_cast<size_t>(r) * n + col] = 0.0;
            for (int c = col + 1; c < n; ++c) {
                a[static_cast<size_t>(r) * n + c] -=
                    factor * a[static_cast<size_t>(col) * n + c];
            }
            b[static_cast<size_t>(r)] -= factor * b[static_cast<size_t>(col)];
        }
    }

    std::vector<double> x(static_cast<size_t>(n));
    for (int r = n - 1; r >= 0; --r) {
        double s = b[static_cast<size_t>(r)];
        for (int c = r + 1; c < n; ++c) {
            s -= a[static_cast<size_t>(r) * n + c] * x[static_cast<size_t>(c)];
        }
        x[static_cast<size_t>(r)] = s / a[static_cast<size_t>(r) * n + r];
    }

    // Residual against the unfactored system; catches quiet breakdowns
    // that survive the pivot floor.
    double resid = 0.0;
    for (int r = 0; r < n; ++r) {
        double s = -system.rhs[static_cast<size_t>(r)];
        for (int c = 0; c < n; ++c) {
            s += system.matrix[static_cast<size_t>(r) * n + c] * x[static_cast<size_t>(c)];
        }
        resid = std::max(resid, std::abs(s));
    }
    const double scale = norm_a * inf_norm_vector(x) + inf_norm_vector(system.rhs);
    if (resid > options.tol_solve * (scale > 0.0 ? scale : 1.0)) {
        throw SingularMatrix("gauss_solve: residual " + std::to_string(resid) +
                             " exceeds the acceptance bound; system is too "
                             "ill-conditioned to trust");
    }
    return x;
}

}  // namespace dsbvp
