#include <benchmark/benchmark.h>

#include "bench_support.hpp"
#include "sixcube/pipeline.hpp"

using namespace sixcube;

static void BM_SearchH(benchmark::State& state) {
    const auto fam = EquationFamily{{Integer(1)}, {Integer(7)}, Sign::Plus};
    const std::vector<Rational> one{Rational(1)};
    for (auto _ : state) {
        auto found = search_h(fam, one, one, one, state.range(0));
        benchmark::DoNotOptimize(found);
    }
}
BENCHMARK(BM_SearchH)->Arg(8)->Arg(16)->Arg(32);

static void BM_PointSearch(benchmark::State& state) {
    const auto ctx = bench::ctx_ex1();
    for (auto _ : state) {
        auto found = point_search(ctx, state.range(0));
        benchmark::DoNotOptimize(found);
    }
}
BENCHMARK(BM_PointSearch)->Arg(4)->Arg(8)->Arg(16);
