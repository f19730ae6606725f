#include <benchmark/benchmark.h>

#include "bench_support.hpp"
#include "sixcube/group_law.hpp"

using namespace sixcube;

static void BM_PointAdd(benchmark::State& state) {
    const auto ctx = bench::ctx_ex1();
    const auto P = bench::generator_ex1();
    const auto Q = multiply(ctx.curve, P, 2L);
    for (auto _ : state) {
        auto R = add(ctx.curve, P, Q);
        benchmark::DoNotOptimize(R);
    }
}
BENCHMARK(BM_PointAdd);

// coordinate sizes grow quadratically in k, so multiply cost does too
static void BM_ScalarMultiply(benchmark::State& state) {
    const auto ctx = bench::ctx_ex1();
    const auto P = bench::generator_ex1();
    for (auto _ : state) {
        auto R = multiply(ctx.curve, P, state.range(0));
        benchmark::DoNotOptimize(R);
    }
}
BENCHMARK(BM_ScalarMultiply)->Arg(4)->Arg(8)->Arg(16);
