#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oct/generators.hpp"
#include "oct/graph.hpp"
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

} // namespace

TEST_CASE("from_edges sorts, deduplicates and validates") {
    Graph g = Graph::from_edges(3, {{2, 0}, {0, 1}, {1, 0}});
    CHECK(g.n == 3);
    CHECK(g.m == 2);
    CHECK(g.adj[0] == std::vector<int>{1, 2});
    CHECK(g.has_edge(0, 2));
    CHECK(!g.has_edge(1, 2));
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), std::out_of_range);
}

TEST_CASE("adjacency stays symmetric and strictly sorted") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = erdos_renyi(20, 0.3, seed);
        for (int v = 0; v < g.n; ++v) {
            for (size_t i = 1; i < g.adj[v].size(); ++i)
                CHECK(g.adj[v][i - 1] < g.adj[v][i]);
            for (int u : g.adj[v]) CHECK(g.has_edge(u, v));
        }
    }
}

TEST_CASE("is_bipartite on small cases") {
    CHECK(is_bipartite(cycle(4)).has_value());
    CHECK(!is_bipartite(cycle(5)).has_value());
    CHECK(is_bipartite(Graph::empty(0)).has_value());
    CHECK(is_bipartite(Graph::empty(7)).has_value());
}

TEST_CASE("two-coloring is deterministic: lowest-id roots go left") {
    Graph g = cycle(4);
    auto tc = is_bipartite(g);
    REQUIRE(tc.has_value());
    CHECK(tc->color[0] == Color::left);
    CHECK(tc->color[1] == Color::right);
    CHECK(tc->color[2] == Color::left);
    CHECK(tc->color[3] == Color::right);
}

TEST_CASE("verify_oct basics") {
    Graph c5 = cycle(5);
    CHECK(verify_oct(c5, {0}));
    CHECK(!verify_oct(c5, {}));
    Graph k5 = complete(5);
    CHECK(verify_oct(k5, {1, 3, 4}));
    CHECK_THROWS_AS(verify_oct(c5, {9}), std::out_of_range);
}

TEST_CASE("verify_oct of everything / nothing") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = erdos_renyi(12, 0.4, seed);
        std::vector<int> all(g.n);
        for (int v = 0; v < g.n; ++v) all[v] = v;
        CHECK(verify_oct(g, all));
        CHECK(verify_oct(g, {}) == is_bipartite(g).has_value());
    }
}

TEST_CASE("degeneracy on known graphs") {
    Graph path = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(degeneracy_ordering(path).degeneracy == 1);
    CHECK(degeneracy_ordering(complete(4)).degeneracy == 3);
    CHECK(degeneracy_ordering(cycle(5)).degeneracy == 2);
}

TEST_CASE("every subgraph has a vertex of degree at most the degeneracy") {
    Rng rng(99);
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = erdos_renyi(14, 0.35, seed);
        int d = degeneracy_ordering(g).degeneracy;
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> keep;
            for (int v = 0; v < g.n; ++v)
                if (rng.below(2)) keep.push_back(v);
            if (keep.empty()) continue;
            Graph sub = induced_subgraph(g, keep);
            int mindeg = sub.n;
            for (int v = 0; v < sub.n; ++v) mindeg = std::min(mindeg, sub.degree(v));
            CHECK(mindeg <= d);
        }
    }
}

TEST_CASE("induced_subgraph relabels by position") {
    Graph g = cycle(5);
    Graph sub = induced_subgraph(g, {0, 1, 4});
    CHECK(sub.n == 3);
    CHECK(sub.m == 2); // edges 0-1 and 0-4
    CHECK(sub.has_edge(0, 1));
    CHECK(sub.has_edge(0, 2));
}
