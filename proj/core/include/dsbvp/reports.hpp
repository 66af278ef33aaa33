#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsbvp/problem.hpp"

namespace dsbvp {

enum class OutputFormat { csv, markdown };

// "csv" or "markdown"; anything else throws InvalidArgument.
OutputFormat parse_format(const std::string& name);

// 10 significant digits, shortest form ("%.10g").
std::string format_value(double v);

// "0.1,0.3,..." -> values; each must lie in [0,1].
std::vector<double> parse_probes(const std::string& text);

std::vector<double> default_probes();  // {0.1, 0.3, 0.5, 0.7, 0.9}

// All reports are deterministic: the same options produce byte-identical
// text, CSV is comma-separated with a header row and LF endings.

struct BenchOptions {
    std::optional<int> resolution;  // default: the case's reference J
    std::optional<int> max_iters;   // default: the case's reference sweeps
    double tol_outer = 1e-10;
    std::vector<double> probes;     // empty -> default_probes()
    OutputFormat format = OutputFormat::csv;
    bool concurrent = true;         // solve independent cases in parallel
};

// Solver values against the stored reference columns for the given
// cases. Columns: case, x, y_h, exact, e_a, y_ref, dev_ref.
std::string bench_report(const std::vector<int>& case_ids, const BenchOptions& opts);

struct ConvergeOptions {
    int resolution_lo = 2;
    int resolution_hi = 6;
    int max_iters = 12;
    double tol_outer = 1e-10;
    OutputFormat format = OutputFormat::csv;
};

// Max-norm grid error per resolution plus the drop to the next one.
// Cases without a closed form are measured against a converged run two
// levels above resolution_hi.
std::string converge_report(int case_id, const ConvergeOptions& opts);

struct OracleOptions {
    int resolution = 4;
    int max_iters = 12;
    double tol_outer = 1e-10;
    int n_quad = 1024;
    OutputFormat format = OutputFormat::csv;
};

// Integral-form residual of the solved case at n_quad, 2 n_quad and
// 4 n_quad panels.
std::string oracle_report(int case_id, const OracleOptions& opts);
std::string oracle_report(const ProblemSpec& spec, const std::string& label,
                          const OracleOptions& opts);

struct SolveOptions {
    int resolution = 3;
    int max_iters = 12;
    double tol_outer = 1e-10;
    std::vector<double> probes;  // empty -> default_probes()
    OutputFormat format = OutputFormat::csv;
};

// One ad-hoc problem: run summary plus probe values.
std::string solve_report(const ProblemSpec& spec, const std::string& label,
                         const SolveOptions& opts);

// Every stored reference row of every case.
std::string catalog_report(OutputFormat format);

}  // namespace dsbvp
