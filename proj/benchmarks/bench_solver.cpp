#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dsbvp/catalog.hpp"
#include "dsbvp/greens.hpp"
#include "dsbvp/haar.hpp"
#include "dsbvp/linalg.hpp"
#include "dsbvp/qlin.hpp"

namespace {

using namespace dsbvp;

void BM_BasisBuild(benchmark::State& state) {
    const int resolution = static_cast<int>(state.range(0));
    for (auto _ : state) {
        HaarBasis basis(resolution);
        benchmark::DoNotOptimize(basis.p2_at(basis.size(), basis.size() - 1));
    }
}
BENCHMARK(BM_BasisBuild)->DenseRange(3, 7);

void BM_GaussSolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    DenseSystem sys;
    sys.n = n;
    sys.matrix.resize(static_cast<size_t>(n) * n);
    sys.rhs.resize(n);
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double& v : sys.matrix) {
        v = u(rng);
    }
    for (int i = 0; i < n; ++i) {
        sys.entry(i, i) += n;  // keep it comfortably nonsingular
        sys.rhs[i] = u(rng);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_solve(sys));
    }
}
BENCHMARK(BM_GaussSolve)->RangeMultiplier(2)->Range(16, 256);

void BM_SolveCase(benchmark::State& state) {
    const BenchmarkCase& c = get_case(static_cast<int>(state.range(0)));
    SolverConfig cfg;
    cfg.resolution = c.ref_resolution;
    cfg.max_iters = c.ref_iters;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(c.spec, cfg));
    }
}
BENCHMARK(BM_SolveCase)->DenseRange(1, 8);

void BM_SolveResolution(benchmark::State& state) {
    const BenchmarkCase& c = get_case(1);
    SolverConfig cfg;
    cfg.resolution = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(c.spec, cfg));
    }
}
BENCHMARK(BM_SolveResolution)->DenseRange(2, 7);

void BM_IntegralResidual(benchmark::State& state) {
    const BenchmarkCase& c = get_case(5);
    const KernelSpec kernel = make_kernel(c.spec, c.kernel);
    SolverConfig cfg;
    cfg.resolution = 4;
    const Solution sol = solve(c.spec, cfg);
    const int n_quad = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(integral_residual(sol, c.spec, kernel, n_quad));
    }
}
BENCHMARK(BM_IntegralResidual)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace

BENCHMARK_MAIN();
