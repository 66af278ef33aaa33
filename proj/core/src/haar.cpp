#include "dsbvp/haar.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "dsbvp/errors.hpp"

namespace dsbvp {

namespace {

void check_unit_interval(double x, bool closed_right, const char* who) {
    const bool ok = closed_right ? (x >= 0.0 && x <= 1.0) : (x >= 0.0 && x < 1.0);
    if (!ok) {
        throw OutOfRange(std::string(who) + ": x = " + std::to_string(x) +
                         " outside " + (closed_right ? "[0,1]" : "[0,1)"));
    }
}

}  // namespace

HaarIndex index_decompose(int i) {
    if (i < 2) {
        throw OutOfRange("index_decompose: i = " + std::to_string(i) +
                         ", dilation structure starts at i = 2");
    }
    const unsigned m = std::bit_floor(static_cast<unsigned>(i - 1));
    const int j = std::bit_width(m) - 1;
    const int k = i - static_cast<int>(m) - 1;
    return HaarIndex{i, j, k, static_cast<int>(m)};
}

std::vector<double> collocation_grid(int resolution) {
    if (resolution < 0) {
        throw OutOfRange("collocation_grid: resolution must be >= 0");
    }
    const int n = 2 << resolution;  // 2M = 2^(J+1)
    std::vector<double> grid(static_cast<size_t>(n));
    for (int l = 1; l <= n; ++l) {
        grid[static_cast<size_t>(l - 1)] = (l - 0.5) / n;
    }
    return grid;
}

double haar_eval(int i, double x) {
    if (i < 1) {
        throw OutOfRange("haar_eval: i must be >= 1");
    }
    check_unit_interval(x, false, "haar_eval");
    if (i == 1) {
        return 1.0;
    }
    const HaarIndex ix = index_decompose(i);
    if (x < ix.left() || x >= ix.right()) {
        return 0.0;
    }
    return x < ix.middle() ? 1.0 : -1.0;
}

double haar_eval_normalized(int i, double x) {
    if (i < 2) {
        throw OutOfRange("haar_eval_normalized: i must be >= 2");
    }
    const HaarIndex ix = index_decompose(i);
    return std::exp2(0.5 * ix.level) * haar_eval(i, x);
}

double p1_eval(int i, double x) {
    if (i < 1) {
        throw OutOfRange("p1_eval: i must be >= 1");
    }
    check_unit_interval(x, true, "p1_eval");
    if (i == 1) {
        return x;
    }
    const HaarIndex ix = index_decompose(i);
    if (x < ix.left()) {
        return 0.0;
    }
    if (x < ix.middle()) {
        return x - ix.left();
    }
    if (x < ix.right()) {
        return ix.right() - x;
    }
    return 0.0;
}

double p2_eval(int i, double x) {
    if (i < 1) {
        throw OutOfRange("p2_eval: i must be >= 1");
    }
    check_unit_interval(x, true, "p2_eval");
    if (i == 1) {
        return 0.5 * x * x;
    }
    const HaarIndex ix = index_decompose(i);
    const double plateau = 1.0 / (4.0 * ix.scale * ix.scale);
    if (x < ix.left()) {
        return 0.0;
    }
    if (x < ix.middle()) {
        const double d = x - ix.left();
        return 0.5 * d * d;
    }
    if (x < ix.right()) {
        const double d = ix.right() - x;
        return plateau - 0.5 * d * d;
    }
    return plateau;
}

double c1_value(int i) {
    if (i < 1) {
        throw OutOfRange("c1_value: i must be >= 1");
    }
    if (i == 1) {
        return 0.5;
    }
    const HaarIndex ix = index_decompose(i);
    return 1.0 / (4.0 * ix.scale * ix.scale);
}

HaarBasis::HaarBasis(int resolution)
    : resolution_(resolution), size_(0) {
    if (resolution < 0) {
        throw OutOfRange("HaarBasis: resolution must be >= 0");
    }
    grid_ = collocation_grid(resolution);
    size_ = static_cast<int>(grid_.size());

    const size_t n = static_cast<size_t>(size_);
    h_table_.resize(n * n);
    p1_table_.resize(n * n);
    p2_table_.resize(n * n);
    c1_.resize(n);
    for (int i = 1; i <= size_; ++i) {
        const size_t row = static_cast<size_t>(i - 1) * n;
        for (int l = 0; l < size_; ++l) {
            const double x = grid_[static_cast<size_t>(l)];
            h_table_[row + static_cast<size_t>(l)] = haar_eval(i, x);
            p1_table_[row + static_cast<size_t>(l)] = p1_eval(i, x);
            p2_table_[row + static_cast<size_t>(l)] = p2_eval(i, x);
        }
        c1_[static_cast<size_t>(i - 1)] = c1_value(i);
    }
}

void HaarBasis::check_member(int i) const {
    if (i < 1 || i > size_) {
        throw OutOfRange("HaarBasis: member index " + std::to_string(i) +
                         " outside 1.." + std::to_string(size_));
    }
}

void HaarBasis::check_node(int node) const {
    if (node < 0 || node >= size_) {
        throw OutOfRange("HaarBasis: node " + std::to_string(node) +
                         " outside 0.." + std::to_string(size_ - 1));
    }
}

double HaarBasis::h_at(int i, int node) const {
    check_member(i);
    check_node(node);
    return h_table_[static_cast<size_t>(i - 1) * size_ + node];
}

double HaarBasis::p1_at(int i, int node) const {
    check_member(i);
    check_node(node);
    return p1_table_[static_cast<size_t>(i - 1) * size_ + node];
}

double HaarBasis::p2_at(int i, int node) const {
    check_member(i);
    check_node(node);
    return p2_table_[static_cast<size_t>(i - 1) * size_ + node];
}

double HaarBasis::c1(int i) const {
    check_member(i);
    return c1_[static_cast<size_t>(i - 1)];
}

double HaarBasis::h(int i, double x) const {
    check_member(i);
    return haar_eval(i, x);
}

double HaarBasis::p1(int i, double x) const {
    check_member(i);
    return p1_eval(i, x);
}

double HaarBasis::p2(int i, double x) const {
    check_member(i);
    return p2_eval(i, x);
}

}  // namespace dsbvp
