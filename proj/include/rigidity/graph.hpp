#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rigidity {

// Undirected edge stored canonically with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Canonicalizes the endpoint order; rejects self-loops.
Edge make_edge(int u, int v);

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;
// Sorted, duplicate-free list of canonical edges.
using EdgeSubset = std::vector<Edge>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// "mutating" helpers return new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    // Validates endpoints, sorts lexicographically, rejects duplicates.
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;

    Graph with_edge(Edge e) const;    // InputError if already present

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;                  // lexicographically sorted
    std::vector<std::vector<int>> adjacency_;  // sorted neighbor lists
};

// Number of edges with both endpoints in x. x must be sorted, duplicate-free
// and within range.
long long induced_edge_count(const Graph& g, const VertexSet& x);

// Validates that x is sorted, duplicate-free and within range for g.
void validate_vertex_set(const Graph& g, const VertexSet& x);

VertexSet all_vertices(const Graph& g);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool is_subset_of(const VertexSet& small, const VertexSet& big);

// New graph on g's vertex set keeping only the given edges (each must exist
// in g).
Graph subgraph_with_edges(const Graph& g, const EdgeSubset& keep);

// Edges of g not present in g (complement pairs), lexicographically sorted.
EdgeSubset non_edges(const Graph& g);

// ---- generators ----------------------------------------------------------

Graph complete_graph(int n);   // n >= 1
Graph path_graph(int n);       // n >= 1

// Glues g2 onto g1 by identifying edge e1 of g1 with edge e2 of g2,
// first endpoint with first endpoint. The shared edge is kept once, so the
// result has |V1|+|V2|-2 vertices and |E1|+|E2|-1 edges.
Graph parallel_connection(const Graph& g1, const Graph& g2,
                          std::pair<int, int> e1, std::pair<int, int> e2);

// Two K5 blocks sharing exactly the pair {0, 1}, with the edge 0-1 deleted:
// 8 vertices, 18 edges. The distinguished deleted pair is (0, 1).
struct DoubleK5 {
    Graph graph;
    Edge deleted_pair;   // (0, 1); not an edge of the graph
};
DoubleK5 example_double_k5();

// The same graph with the edge 0-1 present (two K5 blocks sharing an edge):
// 8 vertices, 19 edges.
Graph example_double_k5_plus();

// A central K5 with a K5 block glued onto each of its 10 edges:
// 35 vertices, 100 edges, 11 blocks each inducing exactly 10 edges.
Graph example_k5_flower();

// G(n, p): each pair kept independently with probability `density`.
// Deterministic for a given seed.
Graph random_graph(int n, double density, std::uint64_t seed);

// ---- serialization -------------------------------------------------------

enum class GraphFormat { edge_list, json, dot };

// Auto-detects edge-list vs JSON by the first non-whitespace byte.
Graph parse_graph(std::string_view text);
Graph parse_graph(std::string_view text, GraphFormat format);  // dot input unsupported
std::string serialize_graph(const Graph& g, GraphFormat format);

} // namespace rigidity
