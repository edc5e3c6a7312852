#include <benchmark/benchmark.h>

#include "oct/generators.hpp"
#include "oct/heuristics.hpp"
#include "oct/ic.hpp"
#include "oct/ilp.hpp"
#include "oct/vc.hpp"

using namespace oct;

static void BM_heuristic_cycle(benchmark::State& state) {
    Graph g = erdos_renyi(static_cast<int>(state.range(0)), 0.1, 5);
    uint64_t seed = 1;
    for (auto _ : state) {
        for (auto kind : {HeuristicKind::dfs, HeuristicKind::bfs,
                          HeuristicKind::luby, HeuristicKind::mindeg})
            benchmark::DoNotOptimize(run_heuristic(kind, g, seed));
        ++seed;
    }
}
BENCHMARK(BM_heuristic_cycle)->Arg(50)->Arg(200);

static void BM_compress(benchmark::State& state) {
    Graph g = tunable_oct(60, 0.15, 6, 0.5, 3);
    EnsembleConfig ecfg;
    ecfg.max_invocations = 8;
    OctSolution s = ensemble(g, ecfg).solution;
    for (auto _ : state) benchmark::DoNotOptimize(compress(g, s.vertices));
}
BENCHMARK(BM_compress);

static void BM_min_vertex_cut(benchmark::State& state) {
    // pick a seed whose terminals are not directly adjacent
    Graph g;
    for (uint64_t seed = 1;; ++seed) {
        g = erdos_renyi(300, 0.02, seed);
        if (!g.has_edge(0, 299) && min_vertex_cut(g, {0}, {299}).feasible) break;
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(min_vertex_cut(g, {0}, {299}));
}
BENCHMARK(BM_min_vertex_cut);

static void BM_solve_ic(benchmark::State& state) {
    Graph g = tunable_oct(40, 0.2, 5, 0.5, 13);
    for (auto _ : state) {
        IcConfig cfg;
        cfg.level = static_cast<int>(state.range(0));
        benchmark::DoNotOptimize(solve_ic(g, cfg));
    }
}
BENCHMARK(BM_solve_ic)->Arg(1)->Arg(2);

static void BM_solve_vc_exact(benchmark::State& state) {
    Graph g = to_vc_instance(erdos_renyi(18, 0.3, 21)).graph;
    for (auto _ : state) benchmark::DoNotOptimize(solve_vc_exact(g));
}
BENCHMARK(BM_solve_vc_exact);

static void BM_enumerate_ilp(benchmark::State& state) {
    IlpModel model = build_oct_model(erdos_renyi(12, 0.4, 17));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_model(model));
}
BENCHMARK(BM_enumerate_ilp);
