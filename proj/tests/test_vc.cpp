#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oct/generators.hpp"
#include "oct/oracle.hpp"
#include "oct/vc.hpp"

using namespace oct;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

} // namespace

TEST_CASE("to_vc_instance builds the doubled graph") {
    Graph edge = Graph::from_edges(2, {{0, 1}});
    VcInstance inst = to_vc_instance(edge);
    CHECK(inst.graph.n == 4);
    auto edges = inst.graph.edges();
    CHECK(edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});

    VcInstance empty3 = to_vc_instance(Graph::empty(3));
    CHECK(empty3.graph.n == 6);
    CHECK(empty3.graph.m == 3);
    CHECK(brute_force_vc(empty3.graph).opt == 3);
}

TEST_CASE("from_vc_solution maps covers to transversals") {
    Graph edge = Graph::from_edges(2, {{0, 1}});
    VcInstance inst = to_vc_instance(edge);
    CHECK(from_vc_solution(inst, {0, 1, 2, 3}) == std::vector<int>{0, 1});
    CHECK(from_vc_solution(inst, {0, 3}).empty());
    CHECK_THROWS_AS(from_vc_solution(inst, {0}), std::invalid_argument);
}

TEST_CASE("doubled instance identity: min VC = n + OPT") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = erdos_renyi(4 + static_cast<int>(seed % 8), 0.4, seed);
        VcInstance inst = to_vc_instance(g);
        int opt_oct = brute_force_oct(g).opt;
        auto cover = brute_force_vc(inst.graph, 24);
        CHECK(cover.opt == g.n + opt_oct);
        CHECK(static_cast<int>(from_vc_solution(inst, cover.witness).size()) ==
              opt_oct);
        CHECK(verify_oct(g, from_vc_solution(inst, cover.witness)));
    }
}

TEST_CASE("half-integral LP known values") {
    Graph edge = Graph::from_edges(2, {{0, 1}});
    auto lp = lp_half_integral(edge);
    CHECK(lp.value2 == std::vector<int>{1, 1});
    CHECK(lp.bound2 == 2);

    auto lp_star = lp_half_integral(star(3));
    CHECK(lp_star.value2 == std::vector<int>{2, 0, 0, 0});
    CHECK(lp_star.bound2 == 2);
}

TEST_CASE("LP bound sandwiches min VC") {
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        Graph g = erdos_renyi(10, 0.35, seed);
        auto lp = lp_half_integral(g);
        int opt = brute_force_vc(g).opt;
        CHECK(lp.bound2 <= 2 * opt);
        CHECK(2 * opt <= 2 * lp.bound2); // opt <= 2 * LP objective
    }
}

TEST_CASE("LP persistency against the oracle") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = erdos_renyi(9, 0.4, seed);
        auto lp = lp_half_integral(g);
        int opt = brute_force_vc(g).opt;
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> others;
            for (int u = 0; u < g.n; ++u)
                if (u != v) others.push_back(u);
            Graph without = induced_subgraph(g, others);
            if (lp.value2[v] == 2) {
                // some minimum cover contains v
                CHECK(1 + brute_force_vc(without).opt == opt);
            } else if (lp.value2[v] == 0) {
                // some minimum cover avoids v, taking all its neighbors
                std::vector<int> rest;
                std::vector<char> drop(g.n, 0);
                drop[v] = 1;
                for (int u : g.adj[v]) drop[u] = 1;
                for (int u = 0; u < g.n; ++u)
                    if (!drop[u]) rest.push_back(u);
                CHECK(g.degree(v) +
                          brute_force_vc(induced_subgraph(g, rest)).opt ==
                      opt);
            }
        }
    }
}

TEST_CASE("solve_vc_exact known values") {
    CHECK(solve_vc_exact(star(5)).upper == 1);
    CHECK(solve_vc_exact(cycle(5)).upper == 3);
    CHECK(solve_vc_exact(Graph::empty(4)).upper == 0);
}

TEST_CASE("solve_vc_exact equals the oracle") {
    for (uint64_t seed = 1; seed <= 300; ++seed) {
        int n = 6 + static_cast<int>(seed % 11); // up to 16
        double p = 0.2 + 0.2 * static_cast<double>(seed % 3);
        Graph g = erdos_renyi(n, p, seed);
        SolverReport rep = solve_vc_exact(g);
        CAPTURE(seed);
        CHECK(rep.optimal);
        CHECK(rep.solution.verified);
        CHECK(rep.upper == brute_force_vc(g).opt);
        CHECK(is_vertex_cover(g, rep.solution.vertices));
    }
}

TEST_CASE("solve_vc_exact respects a node budget") {
    Graph g = erdos_renyi(30, 0.4, 7);
    SolverReport rep = solve_vc_exact(g, std::nullopt, 1);
    CHECK(!rep.optimal);
    CHECK(rep.termination == Termination::deadline);
    CHECK(rep.lower <= rep.upper);
    CHECK(is_vertex_cover(g, rep.solution.vertices));
}

TEST_CASE("solve_oct_via_vc end to end") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = erdos_renyi(11, 0.35, seed);
        SolverReport rep = solve_oct_via_vc(g);
        CAPTURE(seed);
        CHECK(rep.optimal);
        CHECK(rep.solution.verified);
        CHECK(rep.upper == brute_force_oct(g).opt);
    }
}
