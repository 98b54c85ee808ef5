#include "qcount/oracle/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace qcount;

static void BM_OraclePairCoefficients(benchmark::State& state)
{
    const Mode m = make_mode(7, 0.9, 1.0, 0.4);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::oracle_pair_coefficients(m, Thermo{0.3}));
}
BENCHMARK(BM_OraclePairCoefficients);

// Exact rational arithmetic: expected to be far slower than the recursion.
static void BM_OracleDistribution(benchmark::State& state)
{
    ModelParams p;
    p.N = static_cast<int>(state.range(0));
    p.g = 1.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::oracle_distribution(p, Thermo{0.3}, 1.0));
}
BENCHMARK(BM_OracleDistribution)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_OracleQuench(benchmark::State& state)
{
    const Mode m = make_mode(3, 0.5, 1.0, 1.0);
    QuenchSpec spec;
    spec.bath_t_over_j = 0.1;
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::oracle_quench_two_mode(m, spec, state.range(0)));
}
BENCHMARK(BM_OracleQuench)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);
