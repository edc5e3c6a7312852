#ifndef OCT_REDUCTIONS_HPP
#define OCT_REDUCTIONS_HPP

#include <string>
#include <vector>

#include "oct/graph.hpp"

namespace oct {

// Rules, in scan order. OCT level:
//   deg_le1       delete vertices of degree <= 1
//   no_odd_cycle  delete vertices on no odd cycle (bipartite blocks)
//   twin_c4       induced C4 u-v-w-x with deg(v) = deg(x) = 2: higher-id twin
//                 removed, lower id survives
// VC level (on the doubled instance):
//   vc_isolated   isolated vertex removed
//   vc_oct        both copies persistency-fixed into the cover: forced OCT
//   vc_bip        a copy fixed out of the cover: labeled bipartite (kept)
enum class ReductionRule {
    deg_le1,
    no_odd_cycle,
    twin_c4,
    vc_isolated,
    vc_oct,
    vc_bip,
};

std::string to_string(ReductionRule r);

struct ReductionEvent {
    ReductionRule rule;
    int vertex;          // removed (or, for vc_bip, labeled) vertex
    int survivor = -1;   // twin_c4: the kept twin
    int substitute = -1; // twin_c4: common neighbor swapped in when lifting
};

struct ReductionPartition {
    // Vr / Vo / Vb / V' in original ids, each sorted.
    std::vector<int> v_removed;
    std::vector<int> v_oct;
    std::vector<int> v_bip;
    std::vector<int> v_rest;
    std::vector<std::pair<int, int>> e_removed;
    Graph reduced;              // induced on Vb ∪ V', ascending relabel
    std::vector<int> lift_map;  // reduced id -> original id
    std::vector<ReductionEvent> events; // application order; drives lifting
    int original_n = 0;
};

// OCT-level rules to exhaustion, ascending-id scans.
ReductionPartition reduce_oct_rules(const Graph& g);

// VC-level fixing through the doubled instance: isolated vertices, then
// half-integral LP persistency. Iterated until stable.
ReductionPartition reduce_vc_rules(const Graph& g);

// Alternates the two rule families until neither changes the graph.
ReductionPartition reduce_fixpoint(const Graph& g);

// Maps a feasible solution of the reduced graph to a feasible solution of the
// original: lift_map image plus Vo, with twin substitutions replayed in
// reverse so the certificate always survives. Never grows the set.
std::vector<int> lift_solution(const ReductionPartition& p,
                               const std::vector<int>& s_reduced);

// Deterministic JSON record: Vr/Vo/Vb/V', Er, lift map and the rule log.
std::string partition_to_json(const ReductionPartition& p);

} // namespace oct

#endif
