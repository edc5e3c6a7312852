#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oct/generators.hpp"
#include "oct/io.hpp"

using namespace oct;

TEST_CASE("parse_qubo reads instances in file order") {
    auto raws = parse_qubo("1\n3 2\n1 2 5\n2 3 0\n");
    REQUIRE(raws.size() == 1);
    CHECK(raws[0].declared_labels == std::vector<std::string>{"1", "2", "3"});
    REQUIRE(raws[0].edges.size() == 2);
    CHECK(raws[0].edges[0].u == "1");
    CHECK(raws[0].edges[0].v == "2");
    CHECK(raws[0].edges[0].w == 5);
    CHECK(raws[0].edges[1].w == 0);
}

TEST_CASE("parse_qubo keeps self-loop triples for sanitize to drop") {
    auto raws = parse_qubo("1\n2 1\n1 1 4\n");
    REQUIRE(raws.size() == 1);
    CHECK(raws[0].edges.size() == 1);
    CHECK(raws[0].edges[0].u == raws[0].edges[0].v);
    Graph g = sanitize(raws[0]).graph;
    CHECK(g.n == 2);
    CHECK(g.m == 0);
}

TEST_CASE("parse_qubo error paths carry line numbers") {
    CHECK_THROWS_AS(parse_qubo("x\n"), ParseError);
    CHECK_THROWS_AS(parse_qubo("1\n3 2\n1 2 5\n"), ParseError); // truncated
    CHECK_THROWS_AS(parse_qubo("1\n3 one\n"), ParseError);
    CHECK_THROWS_AS(parse_qubo("1\n2 1\n1 9 3\n"), ParseError); // out of range
    try {
        parse_qubo("1\n3 2\n1 2 5\n2 q 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("parse_edge_list basics") {
    RawGraph raw = parse_edge_list("a b\nb c\n");
    CHECK(raw.declared_labels.empty());
    CHECK(raw.edges.size() == 2);
    CHECK(parse_edge_list("# comment\n0 1\n").edges.size() == 1);
    CHECK(parse_edge_list("0 1\n1 0\n").edges.size() == 2);
    CHECK(parse_edge_list("a b c d\n").edges.size() == 2); // pairs per line
    CHECK_THROWS_AS(parse_edge_list("a b c\n"), ParseError);
    CHECK(parse_edge_list("").edges.empty());
}

TEST_CASE("sanitize applies the cleanup rules") {
    RawGraph raw;
    raw.declared_labels = {"1", "2", "3"};
    raw.edges = {{"1", "2", 5}, {"2", "3", 0}, {"1", "1", 4}};
    auto res = sanitize(raw);
    CHECK(res.graph.n == 3);
    CHECK(res.graph.m == 1);
    CHECK(res.graph.has_edge(0, 1));
}

TEST_CASE("sanitize relabels lexicographically") {
    RawGraph raw;
    raw.edges = {{"b", "a", 1}};
    auto res = sanitize(raw);
    REQUIRE(res.label_map.size() == 2);
    CHECK(res.label_map[0].first == "a");
    CHECK(res.label_map[0].second == 0);
    CHECK(res.label_map[1].first == "b");
    CHECK(res.label_map[1].second == 1);
}

TEST_CASE("string order puts 10 before 2, numeric mode does not") {
    RawGraph raw;
    raw.edges = {{"10", "2", 1}};
    auto lex = sanitize(raw);
    CHECK(lex.label_map[0].first == "10");
    auto num = sanitize(raw, LabelOrder::numeric);
    CHECK(num.label_map[0].first == "2");
}

TEST_CASE("duplicate edges with mixed weights survive when any is nonzero") {
    RawGraph raw;
    raw.edges = {{"a", "b", 0}, {"b", "a", 7}, {"a", "c", 0}};
    auto res = sanitize(raw);
    CHECK(res.graph.n == 2); // "c" only touched a zero-weight edge
    CHECK(res.graph.m == 1);
}

TEST_CASE("write_canonical fixed bytes") {
    Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(write_canonical(tri) == "3 3\n0 1\n0 2\n1 2\n");
    CHECK(write_canonical(Graph::empty(0)) == "0 0\n");
}

TEST_CASE("canonical round trip, including isolated vertices") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = erdos_renyi(4 + static_cast<int>(seed % 9), 0.25, seed);
        std::string text = write_canonical(g);
        Graph back = sanitize(parse_edge_list(text)).graph;
        CHECK(back.n == g.n);
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("sanitize is idempotent through the canonical format") {
    RawGraph raw;
    raw.edges = {{"x", "y", 1}, {"y", "z", 2}, {"z", "x", 1}, {"x", "y", 0}};
    Graph once = sanitize(raw).graph;
    Graph twice = sanitize(parse_edge_list(write_canonical(once))).graph;
    CHECK(write_canonical(once) == write_canonical(twice));
}

TEST_CASE("load_graph_text auto-detects QUBO versus edge list") {
    auto qubo = load_graph_text("2\n2 1\n1 2 3\n3 1\n1 3 2\n", 2);
    CHECK(qubo.graph.n == 3);
    CHECK(qubo.graph.m == 1);
    auto edges = load_graph_text("0 1\n1 2\n");
    CHECK(edges.graph.n == 3);
    CHECK_THROWS_AS(load_graph_text("1\n2 1\n1 2 1\n", 5), ParseError);
}
