#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oct/generators.hpp"
#include "oct/heuristics.hpp"
#include "oct/oracle.hpp"
#include "oct/rng.hpp"

using namespace oct;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

} // namespace

TEST_CASE("dfs coloring: bipartite graphs never lose vertices") {
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        Graph g = tunable_oct(20, 0.4, 0, 0.5, seed);
        CHECK(dfs_two_coloring(g, seed).size() == 0);
    }
}

TEST_CASE("dfs coloring on C5 and K4") {
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        CHECK(dfs_two_coloring(cycle(5), seed).size() == 1);
        CHECK(dfs_two_coloring(complete(4), seed).size() == 2);
    }
}

TEST_CASE("bfs coloring small cases") {
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        CHECK(bfs_two_coloring(cycle(5), seed).size() == 1);
        CHECK(bfs_two_coloring(cycle(3), seed).size() == 1);
        CHECK(bfs_two_coloring(cycle(8), seed).size() == 0);
    }
}

TEST_CASE("mindeg known cases") {
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        CHECK(mindeg_independent(star(5), seed).size() == 0);
        CHECK(mindeg_independent(cycle(5), seed).size() == 1);
    }
}

TEST_CASE("mindeg stays within d * OPT") {
    for (uint64_t seed = 1; seed <= 150; ++seed) {
        int n = 5 + static_cast<int>(seed % 8);
        double p = 0.15 + 0.15 * static_cast<double>(seed % 3);
        Graph g = erdos_renyi(n, p, seed);
        int d = degeneracy_ordering(g).degeneracy;
        int opt = brute_force_oct(g).opt;
        for (uint64_t s2 = 1; s2 <= 10; ++s2) {
            CAPTURE(seed);
            CAPTURE(s2);
            CHECK(mindeg_independent(g, s2).size() <= d * opt);
        }
    }
}

TEST_CASE("luby known cases") {
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        CHECK(luby(Graph::empty(6), seed).size() == 0);
        CHECK(luby(Graph::from_edges(2, {{0, 1}}), seed).size() == 0);
        int c5 = luby(cycle(5), seed).size();
        CHECK(c5 >= 1);
        CHECK(c5 <= 2);
    }
    int best = 99;
    for (uint64_t seed = 1; seed <= 50; ++seed)
        best = std::min(best, luby(cycle(5), seed).size());
    CHECK(best == 1);
}

TEST_CASE("every heuristic output is verified and at least OPT") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = erdos_renyi(10, 0.35, seed);
        int opt = brute_force_oct(g).opt;
        for (auto kind : {HeuristicKind::dfs, HeuristicKind::bfs,
                          HeuristicKind::luby, HeuristicKind::mindeg}) {
            OctSolution sol = run_heuristic(kind, g, seed * 31 + 7);
            CHECK(sol.verified);
            CHECK(sol.size() >= opt);
            CHECK(std::is_sorted(sol.vertices.begin(), sol.vertices.end()));
        }
    }
}

TEST_CASE("ensemble finds zero on bipartite graphs immediately") {
    Graph g = tunable_oct(30, 0.3, 0, 0.5, 3);
    EnsembleConfig cfg;
    cfg.timeout = 0.01;
    SolverReport rep = ensemble(g, cfg);
    CHECK(rep.upper == 0);
    CHECK(rep.optimal);
    CHECK(rep.solution.verified);
}

TEST_CASE("ensemble replay with a fixed budget is exact") {
    Graph g = erdos_renyi(25, 0.25, 5);
    EnsembleConfig cfg;
    cfg.seed = 42;
    cfg.max_invocations = 13;
    SolverReport a = ensemble(g, cfg);
    SolverReport b = ensemble(g, cfg);
    CHECK(a.solution.vertices == b.solution.vertices);
    CHECK(a.iterations == 13);
    CHECK(a.termination == Termination::completed);
}

TEST_CASE("ensemble replay is stable across enabled subsets") {
    // per-invocation seeds depend on the heuristic's own index, so a
    // single-heuristic run reproduces that heuristic's cycle-0 result
    Graph g = erdos_renyi(18, 0.3, 9);
    EnsembleConfig only_luby;
    only_luby.seed = 7;
    only_luby.enabled = {HeuristicKind::luby};
    only_luby.max_invocations = 1;
    SolverReport a = ensemble(g, only_luby);
    OctSolution direct = luby(g, mix_seed(7, static_cast<uint64_t>(HeuristicKind::luby), 0));
    CHECK(a.solution.vertices == direct.vertices);
}

TEST_CASE("ensemble runs at least one full cycle under a tiny deadline") {
    Graph g = erdos_renyi(60, 0.2, 11);
    EnsembleConfig cfg;
    cfg.timeout = 1e-9;
    SolverReport rep = ensemble(g, cfg);
    CHECK(rep.iterations >= 4);
    CHECK(rep.solution.verified);
}

TEST_CASE("ensemble config validation") {
    Graph g = cycle(5);
    EnsembleConfig bad;
    bad.enabled.clear();
    CHECK_THROWS_AS(ensemble(g, bad), std::invalid_argument);
    EnsembleConfig bad2;
    bad2.timeout = 0;
    CHECK_THROWS_AS(ensemble(g, bad2), std::invalid_argument);
}
