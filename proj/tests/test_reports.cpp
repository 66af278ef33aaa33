#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <string>
#include <vector>

#include "dsbvp/catalog.hpp"
#include "dsbvp/errors.hpp"
#include "dsbvp/problem.hpp"
#include "dsbvp/reports.hpp"

using namespace dsbvp;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        REQUIRE(nl != std::string::npos);  // every line must end in LF
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    size_t pos = 0;
    while (true) {
        const size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
            cells.push_back(line.substr(pos));
            return cells;
        }
        cells.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

ProblemSpec flat_linear() {
    ProblemSpec spec;
    spec.p = [](double) { return 1.0; };
    spec.p_prime = [](double) { return 0.0; };
    spec.q = [](double) { return 1.0; };
    spec.f = [](double, double) { return 2.0; };
    spec.f_y = [](double, double) { return 0.0; };
    spec.bc = DirichletBC{0.0, 0.0};
    return spec;
}

}  // namespace

TEST_CASE("format helpers") {
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("markdown") == OutputFormat::markdown);
    CHECK_THROWS_AS(parse_format("tsv"), InvalidArgument);

    CHECK(format_value(0.1) == "0.1");
    CHECK(format_value(-2.0) == "-2");
    CHECK(format_value(1.0 / 3.0) == "0.3333333333");
    CHECK(format_value(2.5e-11) == "2.5e-11");
    CHECK(format_value(0.60697) == "0.60697");

    CHECK(parse_probes("0.1,0.3") == std::vector<double>{0.1, 0.3});
    CHECK(parse_probes("0.5") == std::vector<double>{0.5});
    CHECK_THROWS_AS(parse_probes(""), InvalidArgument);
    CHECK_THROWS_AS(parse_probes("0.1,,0.3"), InvalidArgument);
    CHECK_THROWS_AS(parse_probes("1.5"), InvalidArgument);
    CHECK_THROWS_AS(parse_probes("abc"), InvalidArgument);

    CHECK(default_probes() == std::vector<double>{0.1, 0.3, 0.5, 0.7, 0.9});
}

TEST_CASE("bench report layout") {
    BenchOptions opts;
    const std::string text = bench_report({1}, opts);
    CHECK(text.find('\r') == std::string::npos);
    const auto lines = split_lines(text);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "case,x,y_h,exact,e_a,y_ref,dev_ref");
    for (size_t k = 1; k < lines.size(); ++k) {
        const auto cells = split_cells(lines[k]);
        REQUIRE(cells.size() == 7);
        CHECK(cells[0] == "1");
        for (size_t c = 1; c < cells.size(); ++c) {
            CHECK(!cells[c].empty());  // case 1 has a closed form and refs
        }
        const double yh = std::strtod(cells[2].c_str(), nullptr);
        const double yref = std::strtod(cells[5].c_str(), nullptr);
        CHECK(std::abs(yh - yref) < 5e-4);
    }
    CHECK(split_cells(lines[1])[1] == "0.1");
    CHECK(split_cells(lines[5])[1] == "0.9");
}

TEST_CASE("bench report off-table probes leave reference cells empty") {
    BenchOptions opts;
    opts.probes = {0.45};
    const std::string text = bench_report({6}, opts);
    const auto lines = split_lines(text);
    REQUIRE(lines.size() == 2);
    const auto cells = split_cells(lines[1]);
    REQUIRE(cells.size() == 7);
    CHECK(cells[1] == "0.45");
    CHECK(!cells[2].empty());
    CHECK(cells[3].empty());  // no closed form for case 6
    CHECK(cells[4].empty());
    CHECK(cells[5].empty());  // 0.45 is not a tabulated abscissa
    CHECK(cells[6].empty());
}

TEST_CASE("bench report is deterministic, concurrent or not") {
    BenchOptions opts;
    const std::vector<int> ids = {1, 4, 5};
    const std::string a = bench_report(ids, opts);
    const std::string b = bench_report(ids, opts);
    CHECK(a == b);
    opts.concurrent = false;
    const std::string serial = bench_report(ids, opts);
    CHECK(a == serial);
}

TEST_CASE("bench report markdown shape") {
    BenchOptions opts;
    opts.format = OutputFormat::markdown;
    opts.probes = {0.5};
    const std::string text = bench_report({4}, opts);
    const auto lines = split_lines(text);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "| case | x | y_h | exact | e_a | y_ref | dev_ref |");
    CHECK(lines[1] == "|---|---|---|---|---|---|---|");
    CHECK(lines[2].find("| 4 | 0.5 | ") == 0);
}

TEST_CASE("bench report argument checking") {
    BenchOptions opts;
    CHECK_THROWS_AS(bench_report({}, opts), InvalidArgument);
    CHECK_THROWS_AS(bench_report({99}, opts), OutOfRange);
}

TEST_CASE("convergence report for a case with a closed form") {
    ConvergeOptions opts;
    opts.resolution_lo = 2;
    opts.resolution_hi = 4;
    const std::string text = converge_report(1, opts);
    const auto lines = split_lines(text);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "case,J,nodes,max_err,ratio_next,delta_history");
    std::vector<double> errs;
    for (size_t k = 1; k < lines.size(); ++k) {
        const auto cells = split_cells(lines[k]);
        REQUIRE(cells.size() == 6);
        CHECK(cells[0] == "1");
        CHECK(cells[1] == std::to_string(1 + static_cast<int>(k)));
        CHECK(cells[2] == std::to_string(2 << (1 + static_cast<int>(k))));
        errs.push_back(std::strtod(cells[3].c_str(), nullptr));
        CHECK(cells[5].find(';') != std::string::npos);  // several sweeps
    }
    CHECK(errs[1] < errs[0]);
    CHECK(errs[2] < errs[1]);
    const auto row2 = split_cells(lines[1]);
    CHECK(std::strtod(row2[4].c_str(), nullptr) ==
          doctest::Approx(errs[0] / errs[1]).epsilon(1e-9));
    const auto last = split_cells(lines[3]);
    CHECK(last[4].empty());  // nothing to compare the top level against

    ConvergeOptions bad;
    bad.resolution_lo = 4;
    bad.resolution_hi = 2;
    CHECK_THROWS_AS(converge_report(1, bad), InvalidArgument);
}

TEST_CASE("convergence report without a closed form uses a finer run") {
    ConvergeOptions opts;
    opts.resolution_lo = 2;
    opts.resolution_hi = 3;
    const std::string text = converge_report(6, opts);
    const auto lines = split_lines(text);
    REQUIRE(lines.size() == 3);
    const double e2 = std::strtod(split_cells(lines[1])[3].c_str(), nullptr);
    const double e3 = std::strtod(split_cells(lines[2])[3].c_str(), nullptr);
    CHECK(e2 > 0.0);
    CHECK(e3 < e2);
}

TEST_CASE("oracle report shape") {
    OracleOptions opts;
    opts.resolution = 3;
    opts.n_quad = 256;
    const std::string text = oracle_report(5, opts);
    const auto lines = split_lines(text);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "case,J,n_quad,residual");
    const std::vector<std::string> panels = {"256", "512", "1024"};
    for (size_t k = 1; k < lines.size(); ++k) {
        const auto cells = split_cells(lines[k]);
        REQUIRE(cells.size() == 4);
        CHECK(cells[0] == "5");
        CHECK(cells[1] == "3");
        CHECK(cells[2] == panels[k - 1]);
        const double res = std::strtod(cells[3].c_str(), nullptr);
        CHECK(res >= 0.0);
        CHECK(res < 1e-2);
    }

    OracleOptions bad;
    bad.n_quad = 2;
    CHECK_THROWS_AS(oracle_report(5, bad), InvalidArgument);
}

TEST_CASE("oracle report for an ad-hoc problem") {
    OracleOptions opts;
    opts.resolution = 4;
    opts.n_quad = 512;
    const std::string text = oracle_report(flat_linear(), "flat", opts);
    const auto lines = split_lines(text);
    REQUIRE(lines.size() == 4);
    for (size_t k = 1; k < lines.size(); ++k) {
        const auto cells = split_cells(lines[k]);
        CHECK(cells[0] == "flat");
        CHECK(std::strtod(cells[3].c_str(), nullptr) < 1e-4);
    }
}

TEST_CASE("solve report") {
    SolveOptions opts;
    const std::string text = solve_report(flat_linear(), "flat", opts);
    const auto lines = split_lines(text);
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] == "# problem: flat");
    CHECK(lines[1] == "# J: 3");
    CHECK(lines[2] == "# converged: yes");
    CHECK(lines[3] == "# sweeps: 2");
    CHECK(lines[4].find("# delta_history: ") == 0);
    CHECK(lines[5] == "x,y_h");
    CHECK(split_cells(lines[6])[0] == "0.1");

    SolveOptions one;
    one.probes = {0.25};
    const auto focused = split_lines(solve_report(flat_linear(), "flat", one));
    REQUIRE(focused.size() == 7);
    CHECK(focused[6] == "0.25,-0.1875");

    SolveOptions md;
    md.format = OutputFormat::markdown;
    const auto prose = solve_report(flat_linear(), "flat", md);
    CHECK(prose.find("problem: flat\n\n") == 0);
    CHECK(prose.find("| x | y_h |") != std::string::npos);
}

TEST_CASE("catalog report") {
    const std::string text = catalog_report(OutputFormat::csv);
    const auto lines = split_lines(text);
    REQUIRE(lines.size() == 41);  // 8 cases x 5 rows + header
    CHECK(lines[0] ==
          "case,name,J_ref,sweeps_ref,x,y_ref,y_ref_alt,exact,abs_err,admg,adm,"
          "vim,fdm,tcm,csm");
    for (size_t k = 1; k < lines.size(); ++k) {
        REQUIRE(split_cells(lines[k]).size() == 15);  // names must stay comma-free
    }
    const auto first = split_cells(lines[1]);
    CHECK(first[0] == "1");
    CHECK(first[4] == "0.1");
    CHECK(first[5] == "0.6832");
    const auto c2 = split_cells(lines[6]);
    CHECK(c2[0] == "2");
    CHECK(c2[6] == "0.84976");
    CHECK(c2[7].empty());

    // Deterministic output.
    CHECK(catalog_report(OutputFormat::csv) == text);
    const std::string md = catalog_report(OutputFormat::markdown);
    CHECK(split_lines(md).size() == 42);
}
