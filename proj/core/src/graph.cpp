#include "oct/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace oct {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("edge endpoint out of range: (" +
                                    std::to_string(u) + "," + std::to_string(v) +
                                    ") with n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    g.m = 0;
    for (auto& list : g.adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.m += static_cast<long long>(list.size());
    }
    g.m /= 2;
    return g;
}

Graph Graph::empty(int n) {
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& list = adj[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m));
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::optional<TwoColoring> two_color_excluding(const Graph& g,
                                               const std::vector<char>& deleted) {
    TwoColoring tc;
    tc.color.assign(g.n, Color::deleted);
    std::vector<char> seen(g.n, 0);
    std::queue<int> queue;
    for (int root = 0; root < g.n; ++root) {
        if (deleted[root] || seen[root]) continue;
        seen[root] = 1;
        tc.color[root] = Color::left;
        queue.push(root);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            Color opposite =
                tc.color[u] == Color::left ? Color::right : Color::left;
            for (int w : g.adj[u]) {
                if (deleted[w]) continue;
                if (!seen[w]) {
                    seen[w] = 1;
                    tc.color[w] = opposite;
                    queue.push(w);
                } else if (tc.color[w] == tc.color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return tc;
}

std::optional<TwoColoring> is_bipartite(const Graph& g) {
    return two_color_excluding(g, std::vector<char>(g.n, 0));
}

bool verify_oct(const Graph& g, const std::vector<int>& s) {
    std::vector<char> deleted(g.n, 0);
    for (int v : s) {
        if (v < 0 || v >= g.n)
            throw std::out_of_range("solution vertex " + std::to_string(v) +
                                    " out of range");
        deleted[v] = 1;
    }
    return two_color_excluding(g, deleted).has_value();
}

DegeneracyOrder degeneracy_ordering(const Graph& g) {
    DegeneracyOrder res;
    res.order.reserve(g.n);
    std::vector<int> deg(g.n);
    // Buckets of live vertices by degree; std::set gives lowest-id ties.
    std::vector<std::set<int>> buckets(g.n + 1);
    for (int v = 0; v < g.n; ++v) {
        deg[v] = g.degree(v);
        buckets[deg[v]].insert(v);
    }
    std::vector<char> removed(g.n, 0);
    for (int step = 0; step < g.n; ++step) {
        int d = 0;
        while (buckets[d].empty()) ++d;
        int v = *buckets[d].begin();
        buckets[d].erase(buckets[d].begin());
        removed[v] = 1;
        res.order.push_back(v);
        res.degeneracy = std::max(res.degeneracy, deg[v]);
        for (int w : g.adj[v]) {
            if (removed[w]) continue;
            buckets[deg[w]].erase(w);
            --deg[w];
            buckets[deg[w]].insert(w);
        }
    }
    return res;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> pos(g.n, -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.n)
            throw std::out_of_range("induced_subgraph vertex out of range");
        pos[v] = static_cast<int>(i);
    }
    Graph sub = Graph::empty(static_cast<int>(keep.size()));
    long long m = 0;
    for (size_t i = 0; i < keep.size(); ++i) {
        for (int w : g.adj[keep[i]]) {
            if (pos[w] >= 0) {
                sub.adj[i].push_back(pos[w]);
                ++m;
            }
        }
    }
    sub.m = m / 2;
    for (auto& list : sub.adj) std::sort(list.begin(), list.end());
    return sub;
}

} // namespace oct
