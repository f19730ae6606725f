#include <benchmark/benchmark.h>

#include "bench_support.hpp"
#include "sixcube/oracle.hpp"
#include "sixcube/pipeline.hpp"

using namespace sixcube;

static void BM_GenerateIdentities(benchmark::State& state) {
    const auto fam = bench::family_ex1();
    const auto par = bench::par_ex1();
    const auto ctx = bench::ctx_ex1();
    const std::vector<CurvePoint> gens{bench::generator_ex1()};
    GenerateOptions options;
    options.nmax = state.range(0);
    for (auto _ : state) {
        auto out = generate_all(fam, par, ctx, gens, options);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_GenerateIdentities)->Arg(2)->Arg(4)->Arg(6);

static void BM_ClearDenominators(benchmark::State& state) {
    const auto fam = bench::family_ex1();
    const auto par = bench::par_ex1();
    const auto ctx = bench::ctx_ex1();
    const auto P = multiply(ctx.curve, bench::generator_ex1(), state.range(0));
    const auto sol = point_to_solution(fam, par, ctx, P);
    for (auto _ : state) {
        auto isol = clear_denominators(fam, sol);
        benchmark::DoNotOptimize(isol);
    }
}
BENCHMARK(BM_ClearDenominators)->Arg(4)->Arg(6)->Arg(8);

static void BM_OracleMeetInTheMiddle(benchmark::State& state) {
    const auto fam = bench::family_ex1();
    for (auto _ : state) {
        auto sols = brute_force(fam, state.range(0), state.range(1));
        benchmark::DoNotOptimize(sols);
    }
}
BENCHMARK(BM_OracleMeetInTheMiddle)->Args({4, 13})->Args({8, 60});
