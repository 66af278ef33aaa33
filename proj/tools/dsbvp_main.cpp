// Command-line front end: solve ad-hoc problems, replay the benchmark
// catalogue, sweep resolutions, and cross-check against the integral
// form. Exit codes: 0 success, 1 usage or input errors, 2 solver
// failures, 3 when the integral-form kernel does not exist.

#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dsbvp/catalog.hpp"
#include "dsbvp/errors.hpp"
#include "dsbvp/problem_file.hpp"
#include "dsbvp/reports.hpp"

namespace {

struct CommonOpts {
    std::string format = "csv";
    std::string out_path;
    std::string probe_text;
};

void add_common(CLI::App* cmd, CommonOpts& common) {
    cmd->add_option("--format", common.format, "Output format: csv or markdown")
        ->check(CLI::IsMember({"csv", "markdown"}));
    cmd->add_option("--out", common.out_path, "Write the report to this path");
}

int emit(const std::string& text, const CommonOpts& common) {
    if (common.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(common.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << common.out_path << "' for writing\n";
        return 1;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Haar-basis collocation for doubly singular two-point "
                 "boundary value problems"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve a problem file");
    std::string solve_problem;
    dsbvp::SolveOptions solve_opts;
    CommonOpts solve_common;
    solve_cmd->add_option("--problem", solve_problem, "Problem description file")
        ->required();
    solve_cmd->add_option("--J", solve_opts.resolution, "Resolution level")
        ->check(CLI::Range(0, 12));
    solve_cmd->add_option("--iters", solve_opts.max_iters, "Sweep budget")
        ->check(CLI::Range(1, 1000));
    solve_cmd->add_option("--tol", solve_opts.tol_outer, "Outer tolerance");
    solve_cmd->add_option("--probe", solve_common.probe_text,
                          "Comma-separated abscissae");
    add_common(solve_cmd, solve_common);

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Replay catalogue cases");
    int bench_case = 0;
    bool bench_all = false;
    dsbvp::BenchOptions bench_opts;
    int bench_res = -1;
    int bench_iters = -1;
    CommonOpts bench_common;
    auto* bench_case_opt =
        bench_cmd->add_option("--case", bench_case, "Case id")->check(CLI::Range(1, 8));
    auto* bench_all_opt =
        bench_cmd->add_flag("--all", bench_all, "Run every catalogue case");
    bench_case_opt->excludes(bench_all_opt);
    bench_all_opt->excludes(bench_case_opt);
    bench_cmd->add_option("--J", bench_res, "Resolution level (default: as published)")
        ->check(CLI::Range(0, 12));
    bench_cmd->add_option("--iters", bench_iters, "Sweep budget (default: as published)")
        ->check(CLI::Range(1, 1000));
    bench_cmd->add_option("--tol", bench_opts.tol_outer, "Outer tolerance");
    bench_cmd->add_option("--probe", bench_common.probe_text,
                          "Comma-separated abscissae");
    add_common(bench_cmd, bench_common);

    // converge
    auto* conv_cmd = app.add_subcommand("converge", "Resolution sweep for one case");
    int conv_case = 0;
    dsbvp::ConvergeOptions conv_opts;
    CommonOpts conv_common;
    conv_cmd->add_option("--case", conv_case, "Case id")
        ->required()
        ->check(CLI::Range(1, 8));
    conv_cmd->add_option("--J", conv_opts.resolution_hi, "Top resolution of the sweep")
        ->check(CLI::Range(2, 10));
    conv_cmd->add_option("--iters", conv_opts.max_iters, "Sweep budget")
        ->check(CLI::Range(1, 1000));
    conv_cmd->add_option("--tol", conv_opts.tol_outer, "Outer tolerance");
    add_common(conv_cmd, conv_common);

    // oracle
    auto* oracle_cmd =
        app.add_subcommand("oracle", "Integral-form residual of a solved problem");
    int oracle_case = 0;
    std::string oracle_problem;
    dsbvp::OracleOptions oracle_opts;
    CommonOpts oracle_common;
    auto* oracle_case_opt =
        oracle_cmd->add_option("--case", oracle_case, "Case id")->check(CLI::Range(1, 8));
    auto* oracle_problem_opt =
        oracle_cmd->add_option("--problem", oracle_problem, "Problem description file");
    oracle_case_opt->excludes(oracle_problem_opt);
    oracle_problem_opt->excludes(oracle_case_opt);
    oracle_cmd->add_option("--J", oracle_opts.resolution, "Resolution level")
        ->check(CLI::Range(0, 12));
    oracle_cmd->add_option("--iters", oracle_opts.max_iters, "Sweep budget")
        ->check(CLI::Range(1, 1000));
    oracle_cmd->add_option("--tol", oracle_opts.tol_outer, "Outer tolerance");
    oracle_cmd->add_option("--quad", oracle_opts.n_quad, "Base quadrature panel count")
        ->check(CLI::Range(4, 1 << 20));
    add_common(oracle_cmd, oracle_common);

    // catalog
    auto* catalog_cmd =
        app.add_subcommand("catalog", "Dump the stored reference tables");
    CommonOpts catalog_common;
    add_common(catalog_cmd, catalog_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    std::string problem_path;  // for parse-error reporting
    try {
        if (solve_cmd->parsed()) {
            if (!solve_common.probe_text.empty()) {
                solve_opts.probes = dsbvp::parse_probes(solve_common.probe_text);
            }
            solve_opts.format = dsbvp::parse_format(solve_common.format);
            problem_path = solve_problem;
            const dsbvp::ProblemSpec spec = dsbvp::parse_problem_file(solve_problem);
            return emit(dsbvp::solve_report(spec, solve_problem, solve_opts),
                        solve_common);
        }
        if (bench_cmd->parsed()) {
            if (bench_case == 0 && !bench_all) {
                std::cerr << "error: bench needs --case or --all\n";
                return 1;
            }
            if (bench_res >= 0) {
                bench_opts.resolution = bench_res;
            }
            if (bench_iters > 0) {
                bench_opts.max_iters = bench_iters;
            }
            if (!bench_common.probe_text.empty()) {
                bench_opts.probes = dsbvp::parse_probes(bench_common.probe_text);
            }
            bench_opts.format = dsbvp::parse_format(bench_common.format);
            std::vector<int> ids;
            if (bench_all) {
                ids.resize(dsbvp::benchmark_cases().size());
                std::iota(ids.begin(), ids.end(), 1);
            } else {
                ids.push_back(bench_case);
            }
            return emit(dsbvp::bench_report(ids, bench_opts), bench_common);
        }
        if (conv_cmd->parsed()) {
            conv_opts.format = dsbvp::parse_format(conv_common.format);
            return emit(dsbvp::converge_report(conv_case, conv_opts), conv_common);
        }
        if (oracle_cmd->parsed()) {
            oracle_opts.format = dsbvp::parse_format(oracle_common.format);
            if (oracle_case == 0 && oracle_problem.empty()) {
                std::cerr << "error: oracle needs --case or --problem\n";
                return 1;
            }
            if (oracle_case != 0) {
                return emit(dsbvp::oracle_report(oracle_case, oracle_opts),
                            oracle_common);
            }
            problem_path = oracle_problem;
            const dsbvp::ProblemSpec spec = dsbvp::parse_problem_file(oracle_problem);
            return emit(dsbvp::oracle_report(spec, oracle_problem, oracle_opts),
                        oracle_common);
        }
        // catalog
        return emit(dsbvp::catalog_report(dsbvp::parse_format(catalog_common.format)),
                    catalog_common);
    } catch (const dsbvp::UnavailableKernel& e) {
        std::cerr << "error: no integral-form kernel: " << e.what() << "\n";
        return 3;
    } catch (const dsbvp::ParseError& e) {
        std::cerr << "error: " << problem_path << ":" << e.line();
        if (!e.field().empty()) {
            std::cerr << " (" << e.field() << ")";
        }
        std::cerr << ": " << e.what() << "\n";
        return 1;
    } catch (const dsbvp::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const dsbvp::OutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const dsbvp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
