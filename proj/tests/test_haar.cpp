#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "dsbvp/errors.hpp"
#include "dsbvp/haar.hpp"

using namespace dsbvp;

namespace {

// Independent quadrature oracles. Integrands are piecewise constant
// (h) or piecewise linear (p1), and the midpoint rule is exact for both
// once the panels are split at the support breakpoints.
double piecewise_midpoint(int i, double upper, bool integrate_p1) {
    std::vector<double> cuts = {0.0, upper};
    if (i >= 2) {
        const HaarIndex ix = index_decompose(i);
        for (double c : {ix.left(), ix.middle(), ix.right()}) {
            if (c > 0.0 && c < upper) {
                cuts.push_back(c);
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double a = cuts[s];
        const double b = cuts[s + 1];
        const int panels = 64;
        const double h = (b - a) / panels;
        double acc = 0.0;
        for (int k = 0; k < panels; ++k) {
            const double t = a + (k + 0.5) * h;
            acc += integrate_p1 ? p1_eval(i, t) : haar_eval(i, t);
        }
        total += acc * h;
    }
    return total;
}

double quad_p1(int i, double x) { return piecewise_midpoint(i, x, false); }
double quad_p2(int i, double x) { return piecewise_midpoint(i, x, true); }

}  // namespace

TEST_CASE("index decomposition") {
    const HaarIndex i2 = index_decompose(2);
    CHECK(i2.level == 0);
    CHECK(i2.shift == 0);
    CHECK(i2.scale == 1);
    CHECK(i2.left() == 0.0);
    CHECK(i2.middle() == 0.5);
    CHECK(i2.right() == 1.0);

    const HaarIndex i4 = index_decompose(4);
    CHECK(i4.level == 1);
    CHECK(i4.shift == 1);
    CHECK(i4.scale == 2);

    const HaarIndex i5 = index_decompose(5);
    CHECK(i5.level == 2);
    CHECK(i5.shift == 0);
    CHECK(i5.scale == 4);

    const HaarIndex i6 = index_decompose(6);
    CHECK(i6.level == 2);
    CHECK(i6.shift == 1);

    CHECK_THROWS_AS(index_decompose(1), OutOfRange);
    CHECK_THROWS_AS(index_decompose(0), OutOfRange);
    CHECK_THROWS_AS(index_decompose(-3), OutOfRange);

    // i = m + k + 1 must round-trip with 0 <= k < m across several levels.
    for (int i = 2; i <= 4096; ++i) {
        const HaarIndex ix = index_decompose(i);
        CHECK(ix.scale == (1 << ix.level));
        CHECK(ix.shift >= 0);
        CHECK(ix.shift < ix.scale);
        CHECK(ix.scale + ix.shift + 1 == i);
        CHECK(ix.left() < ix.middle());
        CHECK(ix.middle() < ix.right());
        CHECK(ix.right() <= 1.0);
    }
}

TEST_CASE("collocation grid") {
    const auto g0 = collocation_grid(0);
    REQUIRE(g0.size() == 2);
    CHECK(g0[0] == 0.25);
    CHECK(g0[1] == 0.75);

    const auto g1 = collocation_grid(1);
    REQUIRE(g1.size() == 4);
    CHECK(g1[0] == 0.125);
    CHECK(g1[3] == 0.875);

    const auto g3 = collocation_grid(3);
    REQUIRE(g3.size() == 16);
    CHECK(g3[0] == doctest::Approx(0.03125).epsilon(1e-15));
    CHECK(g3[15] == doctest::Approx(0.96875).epsilon(1e-15));

    CHECK_THROWS_AS(collocation_grid(-1), OutOfRange);

    for (int J = 0; J <= 8; ++J) {
        const auto g = collocation_grid(J);
        CHECK(g.size() == (2u << J));
        CHECK(g.front() > 0.0);
        CHECK(g.back() < 1.0);
        for (size_t l = 1; l < g.size(); ++l) {
            CHECK(g[l] > g[l - 1]);
        }
    }
}

TEST_CASE("grid points never sit on breakpoints") {
    // Nodes are odd multiples of 1/(4M), breakpoints even ones, so the
    // half-open conventions never get exercised at a node.
    const int J = 3;
    const auto g = collocation_grid(J);
    for (int i = 2; i <= 16; ++i) {
        const HaarIndex ix = index_decompose(i);
        for (double x : g) {
            CHECK(x != ix.left());
            CHECK(x != ix.middle());
            CHECK(x != ix.right());
        }
    }
}

TEST_CASE("wavelet point values") {
    CHECK(haar_eval(1, 0.0) == 1.0);
    CHECK(haar_eval(1, 0.73) == 1.0);
    CHECK(haar_eval(2, 0.25) == 1.0);
    CHECK(haar_eval(2, 0.5) == -1.0);
    CHECK(haar_eval(2, 0.99) == -1.0);
    CHECK(haar_eval(3, 0.3) == -1.0);
    CHECK(haar_eval(3, 0.1) == 1.0);
    CHECK(haar_eval(3, 0.6) == 0.0);
    CHECK(haar_eval(5, 0.1) == 1.0);

    CHECK_THROWS_AS(haar_eval(0, 0.5), OutOfRange);
    CHECK_THROWS_AS(haar_eval(1, 1.0), OutOfRange);
    CHECK_THROWS_AS(haar_eval(1, -0.1), OutOfRange);

    CHECK(haar_eval_normalized(5, 0.1) == 2.0);
    CHECK(haar_eval_normalized(2, 0.7) == -1.0);
    CHECK_THROWS_AS(haar_eval_normalized(1, 0.5), OutOfRange);

    // Right-continuity at every breakpoint.
    for (int i : {2, 3, 4, 5, 9, 17}) {
        const HaarIndex ix = index_decompose(i);
        CHECK(haar_eval(i, ix.left()) == 1.0);
        CHECK(haar_eval(i, ix.middle()) == -1.0);
        if (ix.right() < 1.0) {
            CHECK(haar_eval(i, ix.right()) == 0.0);
        }
    }
}

TEST_CASE("first and second integrals, closed forms") {
    CHECK(p1_eval(1, 0.4) == 0.4);
    CHECK(p1_eval(1, 1.0) == 1.0);
    CHECK(p2_eval(1, 1.0) == 0.5);

    // Tent peak 1/(2m) at the support midpoint.
    CHECK(p1_eval(2, 0.5) == 0.5);
    CHECK(p1_eval(5, 0.125) == 0.125);
    CHECK(p1_eval(5, 0.9) == 0.0);
    CHECK(p1_eval(2, 1.0) == 0.0);

    CHECK(p2_eval(5, 0.9) == 1.0 / 64.0);
    CHECK(p2_eval(2, 0.25) == 0.03125);

    CHECK(c1_value(1) == 0.5);
    CHECK(c1_value(2) == 0.25);
    CHECK(c1_value(5) == 1.0 / 64.0);

    CHECK_THROWS_AS(p1_eval(2, 1.5), OutOfRange);
    CHECK_THROWS_AS(p2_eval(2, -0.5), OutOfRange);
    CHECK_THROWS_AS(c1_value(0), OutOfRange);
}

TEST_CASE("p1 is continuous, p2 is C1") {
    const double eps = 1e-9;
    for (int i : {2, 3, 6, 11, 24}) {
        const HaarIndex ix = index_decompose(i);
        for (double c : {ix.left(), ix.middle(), ix.right()}) {
            if (c <= 0.0 || c >= 1.0) {
                continue;
            }
            CHECK(std::abs(p1_eval(i, c - eps) - p1_eval(i, c + eps)) < 1e-7);
            const double slope_l = (p2_eval(i, c) - p2_eval(i, c - eps)) / eps;
            const double slope_r = (p2_eval(i, c + eps) - p2_eval(i, c)) / eps;
            CHECK(std::abs(slope_l - slope_r) < 1e-6);
        }
    }
}

TEST_CASE("boundary identity p2(1) = C1 holds exactly") {
    for (int J = 0; J <= 5; ++J) {
        const int n = 2 << J;
        for (int i = 1; i <= n; ++i) {
            CHECK(p2_eval(i, 1.0) == c1_value(i));
        }
    }
    // And the tent closes: p1(1) vanishes for every oscillating member.
    for (int i = 2; i <= 64; ++i) {
        CHECK(p1_eval(i, 1.0) == 0.0);
    }
}

TEST_CASE("orthogonality and zero mean") {
    // Aligned composite midpoint: exact for these piecewise-constant
    // products up to rounding.
    const int n = 16;  // J = 3 family
    const int panels = 256;
    for (int i = 1; i <= n; ++i) {
        for (int l = 1; l <= n; ++l) {
            double acc = 0.0;
            for (int k = 0; k < panels; ++k) {
                const double x = (k + 0.5) / panels;
                acc += haar_eval(i, x) * haar_eval(l, x);
            }
            acc /= panels;
            double expected = 0.0;
            if (i == l) {
                expected = i == 1 ? 1.0 : 1.0 / index_decompose(i).scale;
            }
            CHECK(std::abs(acc - expected) < 1e-12);
        }
    }
    for (int i = 2; i <= n; ++i) {
        double mean = 0.0;
        for (int k = 0; k < panels; ++k) {
            mean += haar_eval(i, (k + 0.5) / panels);
        }
        CHECK(std::abs(mean / panels) < 1e-12);
    }
}

TEST_CASE("p1 and p2 match quadrature on random pairs") {
    std::mt19937 rng(20240817u);
    std::uniform_int_distribution<int> pick_i(1, 64);
    std::uniform_real_distribution<double> pick_x(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int i = pick_i(rng);
        const double x = pick_x(rng);
        worst = std::max(worst, std::abs(p1_eval(i, x) - quad_p1(i, x)));
        worst = std::max(worst, std::abs(p2_eval(i, x) - quad_p2(i, x)));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("basis tables agree with the closed forms") {
    const HaarBasis basis(2);
    CHECK(basis.size() == 8);
    CHECK(basis.resolution() == 2);
    REQUIRE(basis.grid().size() == 8);
    for (int i = 1; i <= basis.size(); ++i) {
        CHECK(basis.c1(i) == c1_value(i));
        for (int l = 0; l < basis.size(); ++l) {
            const double x = basis.grid()[static_cast<size_t>(l)];
            CHECK(basis.h_at(i, l) == haar_eval(i, x));
            CHECK(basis.p1_at(i, l) == p1_eval(i, x));
            CHECK(basis.p2_at(i, l) == p2_eval(i, x));
        }
    }
    CHECK(basis.h(3, 0.3) == -1.0);
    CHECK(basis.p1(1, 0.25) == 0.25);

    CHECK_THROWS_AS(basis.h_at(0, 0), OutOfRange);
    CHECK_THROWS_AS(basis.h_at(9, 0), OutOfRange);
    CHECK_THROWS_AS(basis.p2_at(1, 8), OutOfRange);
    CHECK_THROWS_AS(basis.c1(-1), OutOfRange);
    CHECK_THROWS_AS(HaarBasis(-2), OutOfRange);
}
