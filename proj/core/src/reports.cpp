#include "dsbvp/reports.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <memory>

#include "dsbvp/catalog.hpp"
#include "dsbvp/errors.hpp"
#include "dsbvp/greens.hpp"
#include "dsbvp/qlin.hpp"

namespace dsbvp {

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "markdown") {
        return OutputFormat::markdown;
    }
    throw InvalidArgument("format must be 'csv' or 'markdown', got '" + name + "'");
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::vector<double> parse_probes(const std::string& text) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) {
            comma = text.size();
        }
        const std::string piece = text.substr(pos, comma - pos);
        const char* begin = piece.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        while (end && *end == ' ') {
            ++end;
        }
        if (end == begin || *end != '\0') {
            throw InvalidArgument("bad probe list entry '" + piece + "'");
        }
        if (!(v >= 0.0 && v <= 1.0)) {
            throw InvalidArgument("probe " + piece + " outside [0,1]");
        }
        out.push_back(v);
        pos = comma + 1;
    }
    if (out.empty()) {
        throw InvalidArgument("probe list is empty");
    }
    return out;
}

std::vector<double> default_probes() {
    return {0.1, 0.3, 0.5, 0.7, 0.9};
}

namespace {

struct TextTable {
    std::vector<std::string> preamble;  // comment lines / prose
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string render(OutputFormat format) const {
        std::string out;
        for (const std::string& line : preamble) {
            if (format == OutputFormat::csv) {
                out += "# " + line + "\n";
            } else {
                out += line + "\n\n";
            }
        }
        if (format == OutputFormat::csv) {
            out += join(header, ",");
            out += "\n";
            for (const auto& row : rows) {
                out += join(row, ",");
                out += "\n";
            }
            return out;
        }
        out += "| " + join(header, " | ") + " |\n|";
        for (size_t i = 0; i < header.size(); ++i) {
            out += "---|";
        }
        out += "\n";
        for (const auto& row : rows) {
            out += "| " + join(row, " | ") + " |\n";
        }
        return out;
    }

    static std::string join(const std::vector<std::string>& parts,
                            const std::string& sep) {
        std::string out;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) {
                out += sep;
            }
            out += parts[i];
        }
        return out;
    }
};

std::string opt_cell(const std::optional<double>& v) {
    return v ? format_value(*v) : std::string();
}

SolverConfig bench_config(const BenchmarkCase& c, const BenchOptions& opts) {
    SolverConfig cfg;
    cfg.resolution = opts.resolution.value_or(c.ref_resolution);
    cfg.max_iters = opts.max_iters.value_or(c.ref_iters);
    cfg.tol_outer = opts.tol_outer;
    return cfg;
}

std::vector<std::vector<std::string>> bench_case_rows(int id,
                                                      const BenchOptions& opts,
                                                      const std::vector<double>& probes) {
    const BenchmarkCase& c = get_case(id);
    const Solution sol = solve(c.spec, bench_config(c, opts));
    std::vector<std::vector<std::string>> rows;
    rows.reserve(probes.size());
    for (double x : probes) {
        const double yh = sol.evaluate(x);
        std::string exact_cell;
        std::string err_cell;
        if (c.exact) {
            const double ex = c.exact(x);
            exact_cell = format_value(ex);
            err_cell = format_value(std::abs(ex - yh));
        }
        std::string ref_cell;
        std::string dev_cell;
        for (const TableRow& row : c.table) {
            if (std::abs(row.x - x) < 1e-12) {
                ref_cell = format_value(row.y_ref);
                dev_cell = format_value(std::abs(yh - row.y_ref));
                break;
            }
        }
        rows.push_back({std::to_string(id), format_value(x), format_value(yh),
                        exact_cell, err_cell, ref_cell, dev_cell});
    }
    return rows;
}

}  // namespace

std::string bench_report(const std::vector<int>& case_ids, const BenchOptions& opts) {
    if (case_ids.empty()) {
        throw InvalidArgument("bench_report: no cases requested");
    }
    for (int id : case_ids) {
        get_case(id);  // validate before spawning anything
    }
    const std::vector<double> probes =
        opts.probes.empty() ? default_probes() : opts.probes;

    TextTable table;
    table.header = {"case", "x", "y_h", "exact", "e_a", "y_ref", "dev_ref"};

    if (opts.concurrent && case_ids.size() > 1) {
        std::vector<std::future<std::vector<std::vector<std::string>>>> parts;
        parts.reserve(case_ids.size());
        for (int id : case_ids) {
            parts.push_back(std::async(std::launch::async, bench_case_rows, id, opts,
                                       probes));
        }
        for (auto& part : parts) {
            auto rows = part.get();
            table.rows.insert(table.rows.end(), rows.begin(), rows.end());
        }
    } else {
        for (int id : case_ids) {
            auto rows = bench_case_rows(id, opts, probes);
            table.rows.insert(table.rows.end(), rows.begin(), rows.end());
        }
    }
    return table.render(opts.format);
}

std::string converge_report(int case_id, const ConvergeOptions& opts) {
    const BenchmarkCase& c = get_case(case_id);
    if (opts.resolution_lo < 0 || opts.resolution_hi < opts.resolution_lo) {
        throw InvalidArgument("converge_report: bad resolution range");
    }

    // Reference: the closed form when there is one, otherwise a converged
    // run two levels finer than the sweep's top.
    std::function<double(double)> reference;
    if (c.exact) {
        reference = c.exact;
    } else {
        SolverConfig cfg;
        cfg.resolution = opts.resolution_hi + 2;
        cfg.max_iters = opts.max_iters;
        cfg.tol_outer = opts.tol_outer;
        cfg.require_convergence = true;
        auto fine = std::make_shared<Solution>(solve(c.spec, cfg));
        reference = [fine](double x) { return fine->evaluate(x); };
    }

    std::vector<double> errs;
    std::vector<std::string> histories;
    for (int j = opts.resolution_lo; j <= opts.resolution_hi; ++j) {
        SolverConfig cfg;
        cfg.resolution = j;
        cfg.max_iters = opts.max_iters;
        cfg.tol_outer = opts.tol_outer;
        const Solution sol = solve(c.spec, cfg);
        double err = 0.0;
        for (double x : sol.basis().grid()) {
            err = std::max(err, std::abs(sol.evaluate(x) - reference(x)));
        }
        errs.push_back(err);
        std::string deltas;
        for (size_t k = 0; k < sol.delta_history().size(); ++k) {
            if (k) {
                deltas += ";";
            }
            deltas += format_value(sol.delta_history()[k]);
        }
        histories.push_back(deltas);
    }

    TextTable table;
    table.header = {"case", "J", "nodes", "max_err", "ratio_next", "delta_history"};
    for (size_t k = 0; k < errs.size(); ++k) {
        const int j = opts.resolution_lo + static_cast<int>(k);
        std::string ratio;
        if (k + 1 < errs.size() && errs[k + 1] != 0.0) {
            ratio = format_value(errs[k] / errs[k + 1]);
        }
        table.rows.push_back({std::to_string(case_id), std::to_string(j),
                              std::to_string(2 << j), format_value(errs[k]), ratio,
                              histories[k]});
    }
    return table.render(opts.format);
}

namespace {

std::string oracle_report_impl(const ProblemSpec& spec, const std::string& label,
                               const AnalyticKernelData& analytic,
                               const OracleOptions& opts) {
    if (opts.n_quad < 4) {
        throw InvalidArgument("oracle_report: n_quad must be at least 4");
    }
    SolverConfig cfg;
    cfg.resolution = opts.resolution;
    cfg.max_iters = opts.max_iters;
    cfg.tol_outer = opts.tol_outer;
    const Solution sol = solve(spec, cfg);
    const KernelSpec kernel = make_kernel(spec, analytic);

    TextTable table;
    table.header = {"case", "J", "n_quad", "residual"};
    for (int mult = 1; mult <= 4; mult *= 2) {
        const int n = opts.n_quad * mult;
        const double res = integral_residual(sol, spec, kernel, n);
        table.rows.push_back({label, std::to_string(opts.resolution),
                              std::to_string(n), format_value(res)});
    }
    return table.render(opts.format);
}

}  // namespace

std::string oracle_report(int case_id, const OracleOptions& opts) {
    const BenchmarkCase& c = get_case(case_id);
    return oracle_report_impl(c.spec, std::to_string(case_id), c.kernel, opts);
}

std::string oracle_report(const ProblemSpec& spec, const std::string& label,
                          const OracleOptions& opts) {
    return oracle_report_impl(spec, label, AnalyticKernelData{}, opts);
}

std::string solve_report(const ProblemSpec& spec, const std::string& label,
                         const SolveOptions& opts) {
    SolverConfig cfg;
    cfg.resolution = opts.resolution;
    cfg.max_iters = opts.max_iters;
    cfg.tol_outer = opts.tol_outer;
    const Solution sol = solve(spec, cfg);
    const std::vector<double> probes =
        opts.probes.empty() ? default_probes() : opts.probes;

    TextTable table;
    table.preamble.push_back("problem: " + label);
    table.preamble.push_back("J: " + std::to_string(opts.resolution));
    table.preamble.push_back(std::string("converged: ") +
                             (sol.converged() ? "yes" : "no"));
    table.preamble.push_back("sweeps: " + std::to_string(sol.iterations()));
    std::string deltas;
    for (size_t k = 0; k < sol.delta_history().size(); ++k) {
        if (k) {
            deltas += ";";
        }
        deltas += format_value(sol.delta_history()[k]);
    }
    table.preamble.push_back("delta_history: " + deltas);
    table.header = {"x", "y_h"};
    for (double x : probes) {
        table.rows.push_back({format_value(x), format_value(sol.evaluate(x))});
    }
    return table.render(opts.format);
}

std::string catalog_report(OutputFormat format) {
    TextTable table;
    table.header = {"case", "name",      "J_ref", "sweeps_ref", "x",
                    "y_ref", "y_ref_alt", "exact", "abs_err",    "admg",
                    "adm",  "vim",       "fdm",   "tcm",        "csm"};
    for (const BenchmarkCase& c : benchmark_cases()) {
        for (const TableRow& row : c.table) {
            table.rows.push_back({std::to_string(c.id),
                                  c.name,
                                  std::to_string(c.ref_resolution),
                                  std::to_string(c.ref_iters),
                                  format_value(row.x),
                                  format_value(row.y_ref),
                                  opt_cell(row.y_ref_alt),
                                  opt_cell(row.exact_ref),
                                  opt_cell(row.abs_err_ref),
                                  opt_cell(row.methods.admg),
                                  opt_cell(row.methods.adm),
                                  opt_cell(row.methods.vim),
                                  opt_cell(row.methods.fdm),
                                  opt_cell(row.methods.tcm),
                                  opt_cell(row.methods.csm)});
        }
    }
    return table.render(format);
}

}  // namespace dsbvp
