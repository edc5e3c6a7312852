#ifndef OCT_IC_HPP
#define OCT_IC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "oct/graph.hpp"
#include "oct/solution.hpp"

namespace oct {

// Iterative compression solver with bipartite jump-start orderings.
// Levels: 0 = ascending ids, 1 = bipartite part of a heuristic solution
// first, 2 = additionally the solution suffix in reverse degeneracy order.
struct IcConfig {
    int level = 2; // p in {0, 1, 2}
    std::optional<double> timeout;
    uint64_t seed = 1;
    std::optional<OctSolution> jumpstart; // required by levels 1-2; computed
                                          // via a budgeted ensemble if absent
    long long max_compress_calls = -1;    // fixed work budget for replay
};

struct IcState {
    std::vector<int> ordering;
    int frontier = 0;          // vertices ordering[0..frontier) are active
    std::vector<int> current;  // feasible OCT of the active induced subgraph
    int lower = 0;
    int upper = 0;
};

std::vector<int> build_ordering(const Graph& g, const IcConfig& cfg);

// One compression step: s is a feasible OCT of h with |s| = k+1; returns a
// feasible OCT of size <= k or nullopt when none exists. Enumerates
// (transversal, left, right) assignments of s with same-side adjacency
// pruning and solves one vertex cut per valid assignment.
std::optional<std::vector<int>> compress(const Graph& h,
                                         const std::vector<int>& s);

SolverReport solve_ic(const Graph& g, IcConfig cfg);

// Fewest interior vertices whose removal disconnects sources from sinks.
// Terminals are never removed; infeasible exactly when a source touches a
// sink directly.
struct CutResult {
    bool feasible = false;
    std::vector<int> cut;
};

CutResult min_vertex_cut(const Graph& g, const std::vector<int>& sources,
                         const std::vector<int>& sinks);

// Default level policy: the degeneracy reordering only pays off once the
// deadline clears a second, so p=1 under one second, p=2 otherwise.
int ic_level_for_timeout(std::optional<double> timeout);

} // namespace oct

#endif
