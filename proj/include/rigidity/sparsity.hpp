#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

// Dimension parameter d with the derived counting threshold l = d(d+1)/2.
// A graph is d-sparse when every vertex set X with |X| >= d induces at most
// d|X| - l edges (sets of size d and d+1 can never violate this in a simple
// graph).
struct SparsityParams {
    int d;

    explicit SparsityParams(int dim);

    int threshold() const { return d * (d + 1) / 2; }
    long long bound(long long set_size) const {
        return static_cast<long long>(d) * set_size - threshold();
    }
    // Dimensions above 5 are accepted for exploration but the rank upper
    // bound is not guaranteed there.
    bool beyond_proven_range() const { return d >= 6; }
};

enum class Backend { brute, flow, both };

struct SparsityVerdict {
    bool is_sparse = true;
    std::optional<VertexSet> witness;  // a violating set when not sparse
};

struct MaxExcess {
    long long value = 0;  // max of i(S) - d|S| over S containing the forced set
    VertexSet argmax;     // the unique inclusion-maximal maximizer
};

// Maximizes i(S) - d|S| over all S containing `forced` via one max-flow
// computation. Requires |forced| = d, or forced = all vertices when the
// graph has fewer than d vertices (the maximum then ranges over {V} alone).
MaxExcess max_excess_over(const Graph& g, const VertexSet& forced, SparsityParams p);

// brute enumerates subsets (capability cap: |V| <= 20); flow runs
// max_excess_over on forced supersets of every edge; both runs both and
// raises InternalInconsistencyError if the verdicts differ.
SparsityVerdict is_d_sparse(const Graph& g, SparsityParams p, Backend backend = Backend::flow);

// Whether h + e is still d-sparse. e must not be an edge of h; h itself is
// assumed d-sparse (only violations through both endpoints of e are probed).
bool can_add_edge(const Graph& h, Edge e, SparsityParams p);

struct MaximalSubgraphResult {
    EdgeSubset kept;
    EdgeSubset rejected;
    std::vector<Edge> insertion_order;  // the order edges were processed in
};

// Greedy single pass: keep an edge iff the kept set stays d-sparse. The
// result is always a maximal d-sparse subgraph of g.
MaximalSubgraphResult maximal_sparse_subgraph(const Graph& g, SparsityParams p);
MaximalSubgraphResult maximal_sparse_subgraph(const Graph& g, SparsityParams p,
                                              std::uint64_t seed);
MaximalSubgraphResult maximal_sparse_subgraph(const Graph& g, SparsityParams p,
                                              std::span<const Edge> order);

// A d-critical component: either a single edge lying in no tight set, or an
// inclusion-maximal tight set (i(U) = d|U| - l) with |U| >= d+2, together
// with its induced edges in the sparse host graph.
struct CriticalComponent {
    VertexSet vertices;
    EdgeSubset edges;
};

// All d-critical components of a d-sparse graph h (PreconditionError when h
// is not d-sparse). The brute backend enumerates tight sets directly and
// caps at |V| <= 16.
std::vector<CriticalComponent> critical_components(const Graph& h, SparsityParams p,
                                                   Backend backend = Backend::flow);

// Pairwise component intersections: any two distinct components may share at
// most d-1 vertices, and a (d-1)-vertex intersection must induce a complete
// graph in the sparse host.
struct IntersectionCheck {
    int first = 0;
    int second = 0;
    VertexSet intersection;
    long long induced = -1;  // filled when the intersection has d-1 vertices
    bool pass = true;
};
struct IntersectionReport {
    std::vector<IntersectionCheck> pairs;
    bool pass = true;
};
IntersectionReport check_component_intersections(const std::vector<CriticalComponent>& components,
                                                 const Graph& h, SparsityParams p);

} // namespace rigidity
