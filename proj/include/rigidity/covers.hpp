#pragma once

#include <string>
#include <vector>

#include "rigidity/sparsity.hpp"

namespace rigidity {

// A family of vertex sets covering every edge of a host graph. For critical
// covers the sets are the d-critical components of a sparse subgraph;
// set_edges keeps each component's edge set so hinge bookkeeping can refer
// back to it.
struct Cover {
    Graph graph;                        // the covered graph; closedness is judged here
    std::vector<VertexSet> sets;
    std::vector<EdgeSubset> set_edges;  // per-set edges of the sparse subgraph
};

// A k-hinge: k vertices lying in at least two cover sets.
struct Hinge {
    VertexSet vertices;
    int multiplicity = 0;  // number of cover sets containing it
    bool closed = false;   // host graph induces a complete graph on it
};

struct HingeAggregates {
    // a[k] = sum over k-hinges U of (multiplicity(U) - 1), k = 0..d, where
    // the empty set counts as the unique 0-hinge with multiplicity |sets|.
    std::vector<long long> a;
    // theta[i][k] = number of k-hinges contained in set i, k = 0..d.
    std::vector<std::vector<int>> theta;
    bool degenerate = false;  // fewer than two sets: all zero, checks skipped
};

// Vertex sets of the d-critical components of the maximal d-sparse subgraph
// h of g. Verifies h against g (InputError / PreconditionError) and then the
// guaranteed cover properties: the sets cover every edge of g, pairwise
// intersections have at most d-1 vertices, and every (d-1)-hinge is closed
// in g; their failure raises InternalInconsistencyError.
Cover critical_cover(const Graph& g, const MaximalSubgraphResult& h, SparsityParams p);

// The d-critical cover of a d-sparse graph (the graph covers itself).
Cover critical_cover_of_sparse(const Graph& h, SparsityParams p,
                               Backend backend = Backend::flow);

int cover_thinness(const Cover& c);            // max pairwise intersection size
bool covers_graph(const Cover& c, const Graph& g);

// All k-hinges (k >= 1), sorted by vertex tuple. Multiplicity is counted
// against every cover set, not just one intersecting pair.
std::vector<Hinge> hinges(const Cover& c, int k);

HingeAggregates aggregates(const Cover& c, SparsityParams p);

struct CheckLine {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    bool pass = true;
};

struct CoverReport {
    int thin = 0;
    std::vector<Hinge> hinge_list;     // k = 1..d, sorted by (k, vertices)
    HingeAggregates agg;
    std::vector<CheckLine> checks;
    std::vector<VertexSet> exempt;     // hinges skipped by a precondition
    bool applicable = true;            // preconditions of the check family held
    bool vacuous = false;              // trivially satisfied (size-2 component)
    bool pass = true;
};

// Per-hinge counting inequality: for every hinge W all of whose containing
// components have at least d+2 vertices,
//   (d-k) * sum_{U in Theta_{k+1}, U > W} (mult(U)-1)
//        - sum_{U in Theta_{k+2}, U > W} (mult(U)-1)
//   < C(d+1-k, 2) * (mult(W)-1),        0 <= k <= d-1.
CoverReport check_prefixedhinge(const Graph& h, SparsityParams p);

// Aggregate inequalities over the whole cover; applicable only when every
// component has at least d+2 vertices and there are at least two of them.
// For 0 <= k <= d-2, strictly:
//   (a) (d-k)(k+1) a_{k+1} - C(k+2,2) a_{k+2} < C(d+1-k,2) a_k
//   (b) (d-k) a_{k+1} - (k+1) a_{k+2} < C(d+1,k+2) (|sets|-1)
//   (c) d(d-k) a_{k+1} < (k+2)(d-k-1) C(d+1,k+2) (|sets|-1)
CoverReport check_fixedhinge(const Graph& h, SparsityParams p);

// Some component sees few hinges: min_i theta_1 <= 2d-1; for d >= 3 also
// min_i theta_2 <= (d-2)(d+1)-1; and min_i theta_{d-1} <= d. Trivially true
// (and flagged vacuous) when a two-vertex component exists.
CoverReport check_boundedhinges(const Graph& h, SparsityParams p);

// Edges of the given component whose endpoint pair is a 2-hinge of the cover.
EdgeSubset two_hinge_edges(const Cover& c, int component_index);

} // namespace rigidity
