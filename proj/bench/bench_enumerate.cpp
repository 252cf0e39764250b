// Parallel enumeration against the single-threaded reference walk.
//   bench_enumerate --benchmark_filter=Pure

#include <benchmark/benchmark.h>

#include "gridresolve/enumerate.hpp"

using namespace gridresolve;

namespace {

template <auto Enumerate>
void run(benchmark::State& state, EnumerationMode mode) {
    const Grid g(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const int k_max = static_cast<int>(state.range(2));
    std::size_t count = 0;
    for (auto _ : state) {
        const auto cat = Enumerate(g, k_max, mode, EnumerationOptions{});
        count = cat.minimals.size();
        benchmark::DoNotOptimize(count);
    }
    state.counters["minimals"] = static_cast<double>(count);
}

void PureParallel(benchmark::State& s) { run<&enumerate_minimals>(s, EnumerationMode::PureOracle); }
void PureReference(benchmark::State& s) { run<&reference::enumerate_minimals>(s, EnumerationMode::PureOracle); }
void PrunedParallel(benchmark::State& s) { run<&enumerate_minimals>(s, EnumerationMode::TheoremPruned); }
void PrunedReference(benchmark::State& s) { run<&reference::enumerate_minimals>(s, EnumerationMode::TheoremPruned); }

void pure_sizes(benchmark::internal::Benchmark* b) {
    b->Args({4, 4, 8})->Args({4, 5, 8})->Args({5, 5, 6})->Unit(benchmark::kMillisecond)->UseRealTime();
}

void pruned_sizes(benchmark::internal::Benchmark* b) {
    b->Args({5, 5, 10})->Args({5, 6, 10})->Args({6, 6, 12})->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(PureParallel)->Apply(pure_sizes);
BENCHMARK(PureReference)->Apply(pure_sizes);
BENCHMARK(PrunedParallel)->Apply(pruned_sizes);
BENCHMARK(PrunedReference)->Apply(pruned_sizes);

BENCHMARK_MAIN();
