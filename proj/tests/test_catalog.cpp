#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <utility>
#include <vector>

#include "dsbvp/catalog.hpp"
#include "dsbvp/errors.hpp"
#include "dsbvp/qlin.hpp"

using namespace dsbvp;

namespace {

double fd_ode_residual(const BenchmarkCase& c, double x) {
    const double h = 1e-4;
    auto y = [&c](double t) { return c.exact(t); };
    const double yp = (y(x + h) - y(x - h)) / (2.0 * h);
    const double ypp = (y(x + h) - 2.0 * y(x) + y(x - h)) / (h * h);
    return c.spec.p(x) * ypp + c.spec.p_prime(x) * yp -
           c.spec.q(x) * c.spec.f(x, y(x));
}

}  // namespace

TEST_CASE("catalog shape") {
    const auto& cases = benchmark_cases();
    REQUIRE(cases.size() == 8);
    for (size_t k = 0; k < cases.size(); ++k) {
        const BenchmarkCase& c = cases[k];
        CHECK(c.id == static_cast<int>(k) + 1);
        CHECK(!c.name.empty());
        CHECK(!c.note.empty());
        CHECK(bool(c.spec.p));
        CHECK(bool(c.spec.p_prime));
        CHECK(bool(c.spec.q));
        CHECK(bool(c.spec.f));
        CHECK(bool(c.spec.f_y));
        CHECK(c.ref_resolution == 3);
        CHECK(c.ref_iters >= 6);
        CHECK(bool(c.kernel.b1_minus_b));
        REQUIRE(c.table.size() == 5);
        for (size_t r = 0; r < 5; ++r) {
            CHECK(c.table[r].x == doctest::Approx(0.1 + 0.2 * static_cast<double>(r)));
            CHECK(c.table[r].y_ref > -2.0);
            CHECK(c.table[r].y_ref < 2.0);
        }
        CHECK_NOTHROW(validate(c.spec.bc));
    }
    CHECK(get_case(3).id == 3);
    CHECK_THROWS_AS(get_case(0), OutOfRange);
    CHECK_THROWS_AS(get_case(9), OutOfRange);

    // Which cases carry a closed form, a full b(x), a second resolution.
    for (int id : {1, 3, 4, 5}) {
        CHECK(bool(get_case(id).exact));
    }
    for (int id : {2, 6, 7, 8}) {
        CHECK(!get_case(id).exact);
        CHECK_THROWS_AS(exact_eval(get_case(id), 0.5), NoExactSolution);
    }
    for (int id : {1, 2, 3}) {
        CHECK(bool(get_case(id).kernel.b));
    }
    for (int id : {4, 5, 6, 7, 8}) {
        CHECK(!get_case(id).kernel.b);
    }
    CHECK(get_case(2).alt_resolution.value() == 2);
    for (int id : {1, 3, 4, 5, 6, 7, 8}) {
        CHECK(!get_case(id).alt_resolution.has_value());
    }
}

TEST_CASE("closed-form values") {
    CHECK(exact_eval(get_case(1), 0.0) ==
          doctest::Approx(0.6931471805599453).epsilon(1e-14));
    CHECK(exact_eval(get_case(1), 1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(exact_eval(get_case(3), 1.0) ==
          doctest::Approx(-1.6094379124341003).epsilon(1e-14));
    CHECK(exact_eval(get_case(4), 0.5) ==
          doctest::Approx(0.9607689228305228).epsilon(1e-12));
    CHECK(exact_eval(get_case(5), 1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("closed forms satisfy the differential equation") {
    for (int id : {1, 3, 4, 5}) {
        const BenchmarkCase& c = get_case(id);
        for (int k = 1; k <= 9; ++k) {
            const double x = k / 10.0;
            CHECK(std::abs(fd_ode_residual(c, x)) <= 1e-5);
        }
    }
}

TEST_CASE("closed forms satisfy the boundary data") {
    {
        const BenchmarkCase& c = get_case(1);
        const auto& bc = std::get<DirichletBC>(c.spec.bc);
        CHECK(exact_eval(c, 0.0) == doctest::Approx(bc.alpha).epsilon(1e-14));
        CHECK(exact_eval(c, 1.0) == doctest::Approx(bc.beta).scale(1.0).epsilon(1e-14));
    }
    {
        const BenchmarkCase& c = get_case(3);
        const auto& bc = std::get<DirichletBC>(c.spec.bc);
        CHECK(exact_eval(c, 0.0) == doctest::Approx(bc.alpha).epsilon(1e-14));
        CHECK(exact_eval(c, 1.0) == doctest::Approx(bc.beta).epsilon(1e-14));
    }
    for (int id : {4, 5}) {
        const BenchmarkCase& c = get_case(id);
        const auto& bc = std::get<NeumannRobinBC>(c.spec.bc);
        const double h = 1e-5;
        const double yp0 = (c.exact(h) - c.exact(-h)) / (2.0 * h);
        CHECK(std::abs(yp0) <= 1e-9);
        const double yp1 = (c.exact(1.0 + h) - c.exact(1.0 - h)) / (2.0 * h);
        CHECK(std::abs(bc.alpha * c.exact(1.0) + bc.beta * yp1 - bc.gamma) <= 1e-9);
    }
}

TEST_CASE("stated y-derivatives match difference quotients") {
    // (x, y) samples inside each problem's admissible band.
    const std::vector<std::vector<std::pair<double, double>>> samples = {
        {{0.4, -0.3}, {0.4, 0.2}, {0.4, 0.6}},          // 1
        {{0.5, 0.0625}, {0.5, 0.25}, {0.5, 1.0}},       // 2
        {{0.3, -1.6}, {0.8, -1.4}},                     // 3
        {{0.5, 0.9}, {0.5, 1.0}},                       // 4
        {{0.5, 0.05}, {0.5, 0.3}},                      // 5
        {{0.5, 0.1}, {0.5, 0.25}},                      // 6
        {{0.5, 0.8}, {0.5, 0.95}},                      // 7
        {{0.5, 0.95}, {0.5, 1.0}},                      // 8
    };
    for (int id = 1; id <= 8; ++id) {
        const BenchmarkCase& c = get_case(id);
        for (const auto& [x, y] : samples[static_cast<size_t>(id - 1)]) {
            const double h = 1e-6;
            const double fd = (c.spec.f(x, y + h) - c.spec.f(x, y - h)) / (2.0 * h);
            const double stated = c.spec.f_y(x, y);
            CHECK(std::abs(fd - stated) <= 1e-5 * (1.0 + std::abs(stated)));
        }
    }
}

TEST_CASE("guards clip exactly where documented") {
    const auto& clip = get_case(2).spec.domain_guard;
    REQUIRE(bool(clip));
    CHECK(clip(-1.0) == 0.0);
    CHECK(clip(0.0) == 0.0);
    CHECK(clip(0.5) == 0.5);

    const auto& pole = get_case(8).spec.domain_guard;
    REQUIRE(bool(pole));
    CHECK(std::isnan(pole(1e-9)));
    CHECK(std::isnan(pole(-1e-7)));
    CHECK(pole(1.0) == 1.0);
    CHECK(pole(-1.0) == -1.0);

    for (int id : {1, 3, 4, 5, 6, 7}) {
        CHECK(!get_case(id).spec.domain_guard);
    }
}

TEST_CASE("published companion columns sit where expected") {
    // Column occupancy per case, frozen from the source tables.
    for (const TableRow& row : get_case(1).table) {
        CHECK(row.methods.admg.has_value());
        CHECK(!row.methods.adm.has_value());
        CHECK(row.exact_ref.has_value());
        CHECK(row.abs_err_ref.has_value());
        CHECK(!row.y_ref_alt.has_value());
    }
    for (const TableRow& row : get_case(2).table) {
        CHECK(row.methods.adm.has_value());
        CHECK(!row.methods.admg.has_value());
        CHECK(row.y_ref_alt.has_value());
        CHECK(!row.exact_ref.has_value());
    }
    for (const TableRow& row : get_case(6).table) {
        CHECK(row.methods.admg.has_value());
        CHECK(row.methods.fdm.has_value());
        CHECK(row.methods.tcm.has_value());
        CHECK(!row.methods.csm.has_value());
    }
    for (const TableRow& row : get_case(7).table) {
        CHECK(row.methods.admg.has_value());
        CHECK(row.methods.vim.has_value());
        CHECK(row.methods.csm.has_value());
        CHECK(!row.methods.fdm.has_value());
    }
    for (const TableRow& row : get_case(8).table) {
        CHECK(row.methods.admg.has_value());
        CHECK(row.methods.vim.has_value());
        CHECK(!row.methods.csm.has_value());
    }

    // A few frozen entries.
    CHECK(get_case(1).table[1].y_ref == 0.60697);
    CHECK(get_case(1).table[1].exact_ref.value() == 0.60715);
    CHECK(get_case(2).table[0].y_ref == 0.84909);
    CHECK(get_case(2).table[0].y_ref_alt.value() == 0.84976);
    CHECK(get_case(4).table[2].y_ref == 0.96077);
    CHECK(get_case(6).table[4].methods.tcm.value() == 0.16387);
    CHECK(get_case(7).table[2].methods.csm.value() == 0.85906);
}

TEST_CASE("published values stay close to the closed forms") {
    // The printed reference values carry 5 decimals; the worst drift of
    // the collocation column from the closed form is a few units in the
    // fourth place.
    for (int id : {1, 3, 4, 5}) {
        const BenchmarkCase& c = get_case(id);
        for (const TableRow& row : c.table) {
            CHECK(std::abs(row.y_ref - exact_eval(c, row.x)) <= 5e-4);
        }
    }
}

TEST_CASE("coarse-resolution column tracks a coarse run") {
    // The second printed run for the clipped-source problem sits one
    // level below the reference one. Away from x = 0 our coarse solve
    // lands on it to ~1e-4; at x = 0.1 the level's own truncation next
    // to the x^(-1/2) weight dominates (the two printed columns already
    // differ by 6.7e-4 there), so only a ~1e-3 match is meaningful.
    const BenchmarkCase& c = get_case(2);
    SolverConfig cfg;
    cfg.resolution = c.alt_resolution.value();
    cfg.max_iters = c.ref_iters;
    const Solution sol = solve(c.spec, cfg);
    for (const TableRow& row : c.table) {
        const double dev = std::abs(sol.evaluate(row.x) - row.y_ref_alt.value());
        CHECK(dev <= (row.x < 0.2 ? 1.5e-3 : 1e-4));
    }
}
