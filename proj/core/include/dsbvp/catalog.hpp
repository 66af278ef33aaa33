#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsbvp/greens.hpp"
#include "dsbvp/problem.hpp"

namespace dsbvp {

// Published values from other methods, column by column as the source
// tables carry them. Absent entries mean the table has no such column.
struct MethodRefs {
    std::optional<double> admg;  // decomposition series built on the same kernel
    std::optional<double> adm;   // plain decomposition series
    std::optional<double> vim;   // variational iteration
    std::optional<double> fdm;   // finite differences
    std::optional<double> tcm;   // Taylor-series collocation
    std::optional<double> csm;   // cubic splines
};

struct TableRow {
    double x;
    double y_ref;                       // published collocation value
    std::optional<double> y_ref_alt;    // second published resolution, when given
    std::optional<double> exact_ref;    // closed-form column as published
    std::optional<double> abs_err_ref;  // published absolute error
    MethodRefs methods;
};

struct BenchmarkCase {
    int id;
    std::string name;
    ProblemSpec spec;
    ScalarFn exact;                     // empty when no closed form is known
    int ref_resolution;                 // J behind y_ref
    int ref_iters;                      // sweeps behind y_ref
    std::optional<int> alt_resolution;  // J behind y_ref_alt
    AnalyticKernelData kernel;
    std::vector<TableRow> table;
    std::string note;
};

// The eight standard test problems, ids 1..8.
const std::vector<BenchmarkCase>& benchmark_cases();

// Throws OutOfRange for ids outside 1..8.
const BenchmarkCase& get_case(int id);

// Closed-form value; throws NoExactSolution when the case has none.
double exact_eval(const BenchmarkCase& c, double x);

}  // namespace dsbvp
