#include "qcount/counting.hpp"
#include "qcount/locality.hpp"
#include "qcount/thermalization.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace qcount;

namespace {

ModelParams chain(int n, double g = 0.0)
{
    ModelParams p;
    p.N = n;
    p.g = g;
    return p;
}

}  // namespace

static void BM_ThermalDistribution(benchmark::State& state)
{
    const ModelParams p = chain(static_cast<int>(state.range(0)), 0.7);
    for (auto _ : state)
        benchmark::DoNotOptimize(thermal_distribution(p, Thermo{0.3}));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ThermalDistribution)->RangeMultiplier(2)->Range(128, 8192)->Complexity(benchmark::oNSquared);

// One temperature of the criticality scan: 201 fields, three distributions each.
static void BM_GScan(benchmark::State& state)
{
    std::vector<double> grid;
    for (int i = 0; i <= 200; ++i)
        grid.push_back(i * 0.01);
    for (auto _ : state)
        benchmark::DoNotOptimize(g_scan(chain(1000), grid, Thermo{0.05}, 1e-3, 1));
}
BENCHMARK(BM_GScan)->Unit(benchmark::kMillisecond);

static void BM_QuenchScan(benchmark::State& state)
{
    QuenchSpec spec;
    spec.bath_t_over_j = 100.0;
    for (int i = 0; i <= 400; ++i)
        spec.times.push_back(i * 0.1);
    for (auto _ : state)
        benchmark::DoNotOptimize(quench_scan(chain(1000, 2.0), spec, false, 1));
}
BENCHMARK(BM_QuenchScan)->Unit(benchmark::kMillisecond);

static void BM_Kernels(benchmark::State& state)
{
    const ModelParams p = chain(static_cast<int>(state.range(0)), 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels(p, 10, Thermo{0.1}));
}
BENCHMARK(BM_Kernels)->Arg(1000)->Arg(10000);
BENCHMARK_MAIN();
