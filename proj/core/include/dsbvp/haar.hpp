#pragma once

#include <vector>

namespace dsbvp {

/*
 * Haar family on [0,1), 1-based indexing.
 *
 *   h_1(x) = 1
 *   h_i(x) = +1 on [k/m, (k+0.5)/m), -1 on [(k+0.5)/m, (k+1)/m), 0 else
 *
 * where for i >= 2 the index splits as i = m + k + 1 with m = 2^j the
 * largest power of two at most i-1 and k = i - m - 1 the translation.
 *
 * Repeated integrals from 0:
 *   p_{i,1}(x) = int_0^x h_i,   p_{i,2}(x) = int_0^x p_{i,1},
 *   C_{i,1}    = int_0^1 p_{i,1}.
 *
 * p_{i,1} is a tent of height 1/(2m) peaking at (k+0.5)/m, so
 * p_{i,1}(1) = 0 and C_{i,1} = p_{i,2}(1) = 1/(4 m^2) for i >= 2; the
 * leading index has p_{1,1}(x) = x, p_{1,2}(x) = x^2/2, C_{1,1} = 1/2.
 * The identity p_{i,2}(1) = C_{i,1} is what lets series built from
 * p_{i,2}(x) - C_{i,1} x (or - C_{i,1}) meet boundary data exactly.
 */

struct HaarIndex {
    int index;  // i
    int level;  // j, dilation level
    int shift;  // k, translation within the level
    int scale;  // m = 2^j

    double left() const { return static_cast<double>(shift) / scale; }
    double middle() const { return (shift + 0.5) / scale; }
    double right() const { return static_cast<double>(shift + 1) / scale; }
};

// Splits i >= 2 into level/shift/scale. Throws OutOfRange for i < 2
// (the constant member has no dilation structure).
HaarIndex index_decompose(int i);

// Midpoints x_l = (l - 0.5) / (2M), l = 1..2M, with 2M = 2^(J+1).
// Throws OutOfRange for J < 0.
std::vector<double> collocation_grid(int resolution);

// Family member i at x in [0,1). Uses the half-open support convention
// above, so values at dyadic breakpoints follow the right-continuous
// branch.
double haar_eval(int i, double x);

// 2^(j/2) h_i(x) for i >= 2, the L2-normalised variant.
double haar_eval_normalized(int i, double x);

double p1_eval(int i, double x);  // x in [0,1]
double p2_eval(int i, double x);  // x in [0,1]
double c1_value(int i);

// Basis of the first 2M members with h, p1, p2 tabulated at the
// collocation grid. Tables are built once and never mutated, so a basis
// can be shared across threads.
class HaarBasis {
public:
    explicit HaarBasis(int resolution);

    int resolution() const noexcept { return resolution_; }
    int size() const noexcept { return size_; }  // 2M
    const std::vector<double>& grid() const noexcept { return grid_; }

    // Cached values at grid node l (0-based), member i (1-based).
    double h_at(int i, int node) const;
    double p1_at(int i, int node) const;
    double p2_at(int i, int node) const;
    double c1(int i) const;

    // Closed-form evaluation at arbitrary abscissae.
    double h(int i, double x) const;
    double p1(int i, double x) const;
    double p2(int i, double x) const;

private:
    void check_member(int i) const;
    void check_node(int node) const;

    int resolution_;
    int size_;
    std::vector<double> grid_;
    std::vector<double> h_table_;   // size_ x size_, member-major
    std::vector<double> p1_table_;
    std::vector<double> p2_table_;
    std::vector<double> c1_;
};

}  // namespace dsbvp
