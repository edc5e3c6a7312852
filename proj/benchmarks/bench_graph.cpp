#include <benchmark/benchmark.h>

#include "oct/generators.hpp"
#include "oct/graph.hpp"
#include "oct/io.hpp"
#include "oct/reductions.hpp"

using namespace oct;

static void BM_is_bipartite(benchmark::State& state) {
    Graph g = erdos_renyi(static_cast<int>(state.range(0)), 0.05, 7);
    for (auto _ : state) benchmark::DoNotOptimize(is_bipartite(g));
}
BENCHMARK(BM_is_bipartite)->Arg(100)->Arg(1000);

static void BM_degeneracy_ordering(benchmark::State& state) {
    Graph g = erdos_renyi(static_cast<int>(state.range(0)), 0.05, 7);
    for (auto _ : state) benchmark::DoNotOptimize(degeneracy_ordering(g));
}
BENCHMARK(BM_degeneracy_ordering)->Arg(100)->Arg(1000);

static void BM_write_canonical(benchmark::State& state) {
    Graph g = erdos_renyi(500, 0.1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(write_canonical(g));
}
BENCHMARK(BM_write_canonical);

static void BM_sanitize_roundtrip(benchmark::State& state) {
    std::string text = write_canonical(erdos_renyi(500, 0.1, 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(sanitize(parse_edge_list(text)));
}
BENCHMARK(BM_sanitize_roundtrip);

static void BM_reduce_fixpoint(benchmark::State& state) {
    // sparse close-to-bipartite instance: the reductions' sweet spot
    Graph g = tunable_oct(static_cast<int>(state.range(0)), 0.02, 8, 0.5, 11);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_fixpoint(g));
}
BENCHMARK(BM_reduce_fixpoint)->Arg(100)->Arg(300);

BENCHMARK_MAIN();
