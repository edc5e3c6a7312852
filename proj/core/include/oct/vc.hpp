#ifndef OCT_VC_HPP
#define OCT_VC_HPP

#include <optional>
#include <vector>

#include "oct/graph.hpp"
#include "oct/solution.hpp"

namespace oct {

// Auxiliary vertex cover instance for a graph on n vertices: two copies of
// every edge plus the matching edge (v, v+n) per vertex, so
// min VC = n + OPT_OCT.
struct VcInstance {
    Graph graph;        // 2n vertices; copy ids are v and v + original_n
    int original_n = 0;
};

VcInstance to_vc_instance(const Graph& g);

bool is_vertex_cover(const Graph& g, const std::vector<int>& cover);

// S = { v : both copies covered }. Throws std::invalid_argument when the
// input is not a cover.
std::vector<int> from_vc_solution(const VcInstance& inst,
                                  const std::vector<int>& cover);

// Optimal half-integral VC relaxation via maximum matching on the bipartite
// double cover. Values are stored doubled so everything stays integral.
struct HalfIntegralLp {
    std::vector<int> value2; // 2*x_v, each in {0, 1, 2}
    long long bound2 = 0;    // 2 * LP objective = sum of value2
};

HalfIntegralLp lp_half_integral(const Graph& g);

// Exact branch-and-reduce VC solver: degree-0/1, dominance, degree-2 folding,
// half-integral LP bound with persistency fixing; branches on the max-degree
// vertex (include vs include-neighborhood). The report's solution holds the
// cover; `verified` means the cover was checked.
SolverReport solve_vc_exact(const Graph& g,
                            std::optional<double> timeout = std::nullopt,
                            long long node_budget = -1);

// OCT end to end through the VC route: reduce_fixpoint, transform, solve,
// map back, lift.
SolverReport solve_oct_via_vc(const Graph& g,
                              std::optional<double> timeout = std::nullopt,
                              long long node_budget = -1);

} // namespace oct

#endif
