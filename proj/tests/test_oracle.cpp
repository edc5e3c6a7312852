#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

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

TEST_CASE("brute_force_oct known values") {
    auto c5 = brute_force_oct(cycle(5));
    CHECK(c5.opt == 1);
    CHECK(c5.witness == std::vector<int>{0});
    CHECK(brute_force_oct(complete(5)).opt == 3);
    CHECK(brute_force_oct(cycle(6)).opt == 0);
    CHECK(brute_force_oct(cycle(6)).witness.empty());
}

TEST_CASE("brute_force_vc known values") {
    Graph edge = Graph::from_edges(2, {{0, 1}});
    CHECK(brute_force_vc(edge).opt == 1);
    CHECK(brute_force_vc(cycle(5)).opt == 3);
    CHECK(brute_force_vc(star(7)).opt == 1);
}

TEST_CASE("witnesses are feasible") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = erdos_renyi(10, 0.35, seed);
        auto oct_res = brute_force_oct(g);
        CHECK(verify_oct(g, oct_res.witness));
        auto vc_res = brute_force_vc(g);
        CHECK(is_vertex_cover(g, vc_res.witness));
    }
}

TEST_CASE("oracle self-consistency through the doubled instance") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = erdos_renyi(9, 0.4, seed);
        VcInstance inst = to_vc_instance(g);
        CHECK(brute_force_vc(inst.graph).opt == g.n + brute_force_oct(g).opt);
    }
}

TEST_CASE("cap refusal is explicit") {
    Graph big = Graph::empty(30);
    CHECK_THROWS_AS(brute_force_oct(big), OracleRefused);
    CHECK_THROWS_AS(brute_force_vc(big, 10), OracleRefused);
    CHECK_NOTHROW(brute_force_oct(big, 31));
}
