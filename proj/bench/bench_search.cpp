#include "lsg/search.hpp"

#include <benchmark/benchmark.h>

namespace {

void run_search(benchmark::State& state, bool parallel) {
    lsg::SearchOptions options;
    options.parallel = parallel;
    const auto constraints = lsg::parse_constraints("cmc,csc");
    for (auto _ : state) {
        const auto res = lsg::constraint_search(4, constraints, static_cast<int>(state.range(0)), 1, options);
        benchmark::DoNotOptimize(res.survivors.size());
    }
}

void BM_SearchSerial(benchmark::State& state) { run_search(state, false); }
void BM_SearchOpenMP(benchmark::State& state) { run_search(state, true); }

BENCHMARK(BM_SearchSerial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchOpenMP)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
