#ifndef OCT_HEURISTICS_HPP
#define OCT_HEURISTICS_HPP

#include <cstdint>
#include <vector>

#include "oct/graph.hpp"
#include "oct/solution.hpp"

namespace oct {

// Four linear-time randomized bipartization heuristics. Every result is
// verified before it is returned.

// Greedy 2-coloring along a seeded DFS; a vertex whose forced color clashes
// with an already colored neighbor joins S.
OctSolution dfs_two_coloring(const Graph& g, uint64_t seed);

// Breadth-first variant of the same scheme.
OctSolution bfs_two_coloring(const Graph& g, uint64_t seed);

// Two greedy minimum-degree independent-set rounds per connected component
// (seeded tie-breaks, several derived restarts, best kept); bipartite
// components contribute their exact two-coloring. S is everything left over.
OctSolution mindeg_independent(const Graph& g, uint64_t seed);

// Two rounds of Luby-style randomized maximal independent set; priorities are
// redrawn every inner iteration and every round.
OctSolution luby(const Graph& g, uint64_t seed);

enum class HeuristicKind { dfs = 0, bfs = 1, luby = 2, mindeg = 3 };

OctSolution run_heuristic(HeuristicKind h, const Graph& g, uint64_t seed);

struct EnsembleConfig {
    double timeout = 1.0; // seconds, ignored when max_invocations >= 0
    uint64_t seed = 1;
    std::vector<HeuristicKind> enabled = {HeuristicKind::dfs, HeuristicKind::bfs,
                                          HeuristicKind::luby,
                                          HeuristicKind::mindeg};
    // Fixed work budget for time-free replay: run exactly this many heuristic
    // invocations instead of watching the clock.
    long long max_invocations = -1;
};

// Round-robin over the enabled heuristics until the deadline (at least one
// full cycle always runs). Per-invocation seeds are derived from
// (seed, heuristic index, cycle), so a replay with the reported iteration
// count reproduces the result exactly. Keeps the smallest verified S,
// earliest find wins ties.
SolverReport ensemble(const Graph& g, const EnsembleConfig& cfg);

} // namespace oct

#endif
