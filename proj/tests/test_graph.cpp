#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>

#include "rigidity/errors.hpp"
#include "rigidity/graph.hpp"

using namespace rigidity;

namespace {
template <typename E, typename Fn>
bool throws_with_substring(Fn&& fn, const std::string& needle) {
    try {
        fn();
    } catch (const E& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    } catch (...) {
        return false;
    }
    return false;
}
} // namespace

TEST_CASE("make_edge canonicalizes and rejects self-loops") {
    CHECK(make_edge(3, 1) == Edge{1, 3});
    CHECK(make_edge(1, 3) == Edge{1, 3});
    CHECK_THROWS_AS(make_edge(2, 2), InputError);
}

TEST_CASE("graph construction validates endpoints and duplicates") {
    CHECK_NOTHROW(Graph(3, {make_edge(0, 1), make_edge(1, 2)}));
    CHECK_THROWS_AS(Graph(3, {make_edge(0, 3)}), InputError);       // out of range
    CHECK_THROWS_AS(Graph(3, {make_edge(0, -1)}), InputError);
    CHECK_THROWS_AS(Graph(3, {make_edge(0, 1), make_edge(1, 0)}), InputError);  // duplicate
    CHECK_THROWS_AS(Graph(-1), InputError);
}

TEST_CASE("edges come out lexicographically sorted regardless of input order") {
    const Graph g(4, {make_edge(2, 3), make_edge(0, 1), make_edge(0, 3)});
    const std::vector<Edge> expected{{0, 1}, {0, 3}, {2, 3}};
    CHECK(g.edges() == expected);
}

TEST_CASE("adjacency queries") {
    const Graph g(4, {make_edge(0, 1), make_edge(0, 3), make_edge(1, 2)});
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK(g.neighbors(0) == std::vector<int>{1, 3});
    CHECK(g.neighbors(2) == std::vector<int>{1});
}

TEST_CASE("with_edge adds exactly one edge and rejects duplicates") {
    const Graph g(3, {make_edge(0, 1)});
    const Graph g2 = g.with_edge(make_edge(1, 2));
    CHECK(g2.edge_count() == 2);
    CHECK(g2.has_edge(1, 2));
    CHECK(g.edge_count() == 1);  // original untouched
    CHECK_THROWS_AS(g.with_edge(make_edge(0, 1)), InputError);
}

TEST_CASE("induced_edge_count and vertex set validation") {
    const Graph k4 = complete_graph(4);
    CHECK(induced_edge_count(k4, {0, 1, 2}) == 3);
    CHECK(induced_edge_count(k4, {0, 1, 2, 3}) == 6);
    CHECK(induced_edge_count(k4, {2}) == 0);
    CHECK_THROWS_AS(validate_vertex_set(k4, {2, 1}), InputError);   // unsorted
    CHECK_THROWS_AS(validate_vertex_set(k4, {1, 1}), InputError);   // duplicate
    CHECK_THROWS_AS(validate_vertex_set(k4, {0, 4}), InputError);   // out of range
}

TEST_CASE("vertex set helpers") {
    CHECK(set_intersection({0, 1, 2, 5}, {1, 4, 5}) == VertexSet{1, 5});
    CHECK(set_intersection({0, 2}, {1, 3}) == VertexSet{});
    CHECK(is_subset_of({1, 5}, {0, 1, 2, 5}));
    CHECK_FALSE(is_subset_of({1, 3}, {0, 1, 2, 5}));
    CHECK(is_subset_of({}, {0}));
    const Graph g(3, {});
    CHECK(all_vertices(g) == VertexSet{0, 1, 2});
}

TEST_CASE("subgraph_with_edges keeps the vertex set") {
    const Graph k4 = complete_graph(4);
    const Graph sub = subgraph_with_edges(k4, {make_edge(0, 1), make_edge(2, 3)});
    CHECK(sub.vertex_count() == 4);
    CHECK(sub.edge_count() == 2);
    CHECK_THROWS_AS(subgraph_with_edges(path_graph(3), {make_edge(0, 2)}), InputError);
}

TEST_CASE("non_edges complements the edge set") {
    CHECK(non_edges(complete_graph(5)).empty());
    const EdgeSubset missing = non_edges(path_graph(4));
    const EdgeSubset expected{{0, 2}, {0, 3}, {1, 3}};
    CHECK(missing == expected);
}

TEST_CASE("generators produce the expected shapes") {
    CHECK(complete_graph(6).edge_count() == 15);
    CHECK(complete_graph(1).edge_count() == 0);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(7).edge_count() == 6);
    CHECK_THROWS_AS(complete_graph(0), InputError);
    CHECK_THROWS_AS(path_graph(0), InputError);
}

TEST_CASE("parallel_connection glues along one shared edge") {
    const Graph k5 = complete_graph(5);
    const Graph glued = parallel_connection(k5, k5, {0, 1}, {0, 1});
    CHECK(glued.vertex_count() == 8);
    CHECK(glued.edge_count() == 19);
    CHECK(glued.has_edge(0, 1));
    // matches the named example built the same way
    const Graph plus = example_double_k5_plus();
    CHECK(glued.vertex_count() == plus.vertex_count());
    CHECK(glued.edge_count() == plus.edge_count());
}

TEST_CASE("double-K5 example: 8 vertices, 18 edges, deleted pair (0,1)") {
    const DoubleK5 ex = example_double_k5();
    CHECK(ex.graph.vertex_count() == 8);
    CHECK(ex.graph.edge_count() == 18);
    CHECK(ex.deleted_pair == Edge{0, 1});
    CHECK_FALSE(ex.graph.has_edge(0, 1));
    // both blocks induce 9 edges (K5 minus the shared pair)
    CHECK(induced_edge_count(ex.graph, {0, 1, 2, 3, 4}) == 9);
    CHECK(induced_edge_count(ex.graph, {0, 1, 5, 6, 7}) == 9);
}

TEST_CASE("double-K5-plus adds exactly the pair (0,1)") {
    const Graph plus = example_double_k5_plus();
    CHECK(plus.vertex_count() == 8);
    CHECK(plus.edge_count() == 19);
    CHECK(plus.has_edge(0, 1));
}

TEST_CASE("K5 flower: 35 vertices, 100 edges, central K5 intact") {
    const Graph flower = example_k5_flower();
    CHECK(flower.vertex_count() == 35);
    CHECK(flower.edge_count() == 100);
    CHECK(induced_edge_count(flower, {0, 1, 2, 3, 4}) == 10);
}

TEST_CASE("random_graph is deterministic and respects density extremes") {
    const Graph a = random_graph(8, 0.5, 12345);
    const Graph b = random_graph(8, 0.5, 12345);
    CHECK(a.edges() == b.edges());
    const Graph c = random_graph(8, 0.5, 54321);
    CHECK(a.edges() != c.edges());  // overwhelmingly likely for 28 pairs
    CHECK(random_graph(6, 0.0, 7).edge_count() == 0);
    CHECK(random_graph(6, 1.0, 7).edge_count() == 15);
    CHECK_THROWS_AS(random_graph(5, -0.1, 0), InputError);
    CHECK_THROWS_AS(random_graph(5, 1.5, 0), InputError);
}

TEST_CASE("edge-list round trip") {
    const Graph g = random_graph(9, 0.4, 99);
    const std::string text = serialize_graph(g, GraphFormat::edge_list);
    const Graph back = parse_graph(text, GraphFormat::edge_list);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
    // auto-detection picks edge-list for a digit first byte
    const Graph detected = parse_graph(text);
    CHECK(detected.edges() == g.edges());
}

TEST_CASE("json round trip") {
    const Graph g = random_graph(7, 0.6, 4);
    const std::string text = serialize_graph(g, GraphFormat::json);
    const Graph back = parse_graph(text, GraphFormat::json);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
    const Graph detected = parse_graph(text);  // '{' first byte
    CHECK(detected.edges() == g.edges());
}

TEST_CASE("dot output is emitted but not parsed") {
    const std::string dot = serialize_graph(path_graph(3), GraphFormat::dot);
    CHECK(dot.find("graph g {") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK_THROWS_AS(parse_graph(dot, GraphFormat::dot), InputError);
}

TEST_CASE("parse errors point at the offending line or field") {
    // bad header
    CHECK(throws_with_substring<InputError>([] { parse_graph("x y\n"); }, "line 1"));
    // edge line with one token
    CHECK(throws_with_substring<InputError>([] { parse_graph("3 1\n0\n"); }, "line 2"));
    // fewer edge lines than promised
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), InputError);
    // out-of-range endpoint
    CHECK_THROWS_AS(parse_graph("3 1\n0 3\n"), InputError);
    // duplicate edge
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n1 0\n"), InputError);
    // self-loop
    CHECK_THROWS_AS(parse_graph("3 1\n1 1\n"), InputError);
    // malformed json
    CHECK_THROWS_AS(parse_graph("{\"n\": 3"), InputError);
    // json missing fields
    CHECK(throws_with_substring<InputError>([] { parse_graph("{\"edges\": []}"); }, "n"));
    // json edge that is not a pair
    CHECK_THROWS_AS(parse_graph("{\"n\": 3, \"edges\": [[0, 1, 2]]}"), InputError);
    // empty input
    CHECK_THROWS_AS(parse_graph(""), InputError);
}

TEST_CASE("vertex-count-only graphs survive a round trip") {
    const Graph g(5, {});
    const Graph back = parse_graph(serialize_graph(g, GraphFormat::edge_list));
    CHECK(back.vertex_count() == 5);
    CHECK(back.edge_count() == 0);
}
