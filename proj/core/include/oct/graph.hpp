#ifndef OCT_GRAPH_HPP
#define OCT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oct {

// Simple undirected graph on vertices 0..n-1 with strictly increasing
// adjacency lists. Treated as immutable after construction; safe to share
// across threads.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adj;

    // Sorts and deduplicates; throws std::out_of_range for bad endpoints and
    // std::invalid_argument for self-loops.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
    static Graph empty(int n);

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;
};

enum class Color : unsigned char { left, right, deleted };

struct TwoColoring {
    std::vector<Color> color;
};

// BFS 2-coloring, lowest-id root per component colored left. Returns nullopt
// iff the graph has an odd cycle.
std::optional<TwoColoring> is_bipartite(const Graph& g);

// Same, ignoring vertices with deleted[v] != 0 (they are colored `deleted`).
std::optional<TwoColoring> two_color_excluding(const Graph& g,
                                               const std::vector<char>& deleted);

// True iff g minus s is bipartite. Throws std::out_of_range on bad ids.
bool verify_oct(const Graph& g, const std::vector<int>& s);

struct DegeneracyOrder {
    std::vector<int> order; // repeated minimum-degree removal, lowest id first on ties
    int degeneracy = 0;     // max degree observed at removal time
};

DegeneracyOrder degeneracy_ordering(const Graph& g);

// Subgraph induced by `keep` (must be sorted, unique, in range), relabeled by
// position: keep[i] becomes vertex i.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

} // namespace oct

#endif
