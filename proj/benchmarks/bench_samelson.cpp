#include <benchmark/benchmark.h>

#include <samelson/chern.hpp>
#include <samelson/order.hpp>

using namespace samelson;

static void BM_ComputeOrder(benchmark::State& state) {
    SamelsonParams params(state.range(0), state.range(1));
    for (auto _ : state) {
        OrderReport report = compute_order(params);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_ComputeOrder)->Args({1, 2})->Args({3, 7})->Args({1, 12})->Args({6, 12});

static void BM_Sweep(benchmark::State& state) {
    const long max_n = state.range(0);
    for (auto _ : state) {
        for (long n = 2; n <= max_n; ++n) {
            for (long m = 1; m < n; ++m) {
                OrderReport report = compute_order(SamelsonParams(m, n));
                benchmark::DoNotOptimize(report);
            }
        }
    }
}
BENCHMARK(BM_Sweep)->Arg(6)->Arg(12);

static void BM_ChernSeries(benchmark::State& state) {
    const long j = state.range(0), k = state.range(1);
    for (auto _ : state) {
        Rational value = chern_via_series(j, k);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_ChernSeries)->Args({15, 7})->Args({30, 15})->Args({30, 29});

static void BM_ChernCompositions(benchmark::State& state) {
    const long j = state.range(0), k = state.range(1);
    for (auto _ : state) {
        Rational value = chern_via_compositions(j, k);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_ChernCompositions)->Args({15, 7})->Args({30, 15})->Args({30, 29});

BENCHMARK_MAIN();
