#include "rigidity/sparsity.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "rigidity/errors.hpp"
#include "rigidity/maxflow.hpp"
#include "rigidity/rng.hpp"
#include "rigidity/util.hpp"

namespace rigidity {

SparsityParams::SparsityParams(int dim) : d(dim) {
    if (dim < 1 || dim > 8) {
        throw InputError("dimension must lie in 1..8, got " + std::to_string(dim));
    }
}

MaxExcess max_excess_over(const Graph& g, const VertexSet& forced, SparsityParams p) {
    validate_vertex_set(g, forced);
    const int n = g.vertex_count();
    if (n < p.d) {
        // Only S = V is available; the forced set must already be everything.
        if (static_cast<int>(forced.size()) != n) {
            throw InputError("graphs with fewer than d vertices require forced = V");
        }
        const VertexSet everything = all_vertices(g);
        return MaxExcess{g.edge_count() - static_cast<long long>(p.d) * n, everything};
    }
    if (static_cast<int>(forced.size()) != p.d) {
        throw InputError("forced set must have exactly d vertices");
    }

    // Flow network: source -> one node per edge (capacity 1); each edge node
    // feeds the nodes of its non-forced endpoints (capacity |E|+1, i.e.
    // effectively infinite); each non-forced vertex node -> sink (capacity d).
    // A minimum cut C satisfies
    //     max_{S >= forced} (i(S) - d|S|) = |E| - C - d*|forced|,
    // and the sink-side cut read off the final residual network corresponds
    // to the inclusion-maximal maximizer: i(S) - d|S| is supermodular, so its
    // maximizers over supersets of the forced set are closed under union.
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<char> is_forced(n, 0);
    for (int v : forced) is_forced[v] = 1;
    std::vector<int> vertex_node(n, -1);
    int next_node = 1 + m;
    for (int v = 0; v < n; ++v) {
        if (!is_forced[v]) vertex_node[v] = next_node++;
    }
    const int source = 0;
    const int sink = next_node;

    MaxFlow flow(sink + 1);
    for (int i = 0; i < m; ++i) flow.add_arc(source, 1 + i, 1);
    for (int i = 0; i < m; ++i) {
        if (!is_forced[edges[i].u]) flow.add_arc(1 + i, vertex_node[edges[i].u], m + 1);
        if (!is_forced[edges[i].v]) flow.add_arc(1 + i, vertex_node[edges[i].v], m + 1);
    }
    for (int v = 0; v < n; ++v) {
        if (!is_forced[v]) flow.add_arc(vertex_node[v], sink, p.d);
    }

    const long long cut = flow.run(source, sink);
    const long long value = m - cut - static_cast<long long>(p.d) * p.d;

    const std::vector<char> reaches = flow.nodes_reaching_sink(sink);
    VertexSet argmax = forced;
    for (int v = 0; v < n; ++v) {
        if (!is_forced[v] && !reaches[vertex_node[v]]) argmax.push_back(v);
    }
    std::sort(argmax.begin(), argmax.end());
    return MaxExcess{value, std::move(argmax)};
}

namespace {

// Size-d forced sets through which every counting violation involving the
// pair {e.u, e.v} is reachable. For d = 1 a single endpoint suffices: any
// violating set containing the edge contains e.u.
std::vector<VertexSet> forced_sets_for_pair(const Graph& g, Edge e, int d) {
    std::vector<VertexSet> out;
    if (d == 1) {
        out.push_back(VertexSet{e.u});
        return out;
    }
    VertexSet pool;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v != e.u && v != e.v) pool.push_back(v);
    }
    for_each_combination(pool, d - 2, [&](const std::vector<int>& extra) {
        VertexSet forced{e.u, e.v};
        forced.insert(forced.end(), extra.begin(), extra.end());
        std::sort(forced.begin(), forced.end());
        out.push_back(std::move(forced));
    });
    return out;
}

SparsityVerdict sparse_via_flow(const Graph& g, SparsityParams p) {
    if (g.vertex_count() < p.d) return SparsityVerdict{};
    // Any violating set induces at least one edge (it induces more than
    // d|X| - l >= 0 of them), so probing forced supersets of each edge
    // reaches every violator.
    for (const Edge& e : g.edges()) {
        for (const VertexSet& forced : forced_sets_for_pair(g, e, p.d)) {
            const MaxExcess excess = max_excess_over(g, forced, p);
            if (excess.value > -p.threshold()) {
                return SparsityVerdict{false, excess.argmax};
            }
        }
    }
    return SparsityVerdict{};
}

constexpr int kBruteSparsityCap = 20;  // 2^20 subsets
constexpr int kBruteTightSetCap = 16;  // 2^16 subsets

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> mask(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        mask[e.u] |= std::uint32_t{1} << e.v;
        mask[e.v] |= std::uint32_t{1} << e.u;
    }
    return mask;
}

long long induced_count_of_mask(const std::vector<std::uint32_t>& adj, std::uint32_t set_mask) {
    long long doubled = 0;
    std::uint32_t rest = set_mask;
    while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        doubled += std::popcount(adj[v] & set_mask);
    }
    return doubled / 2;
}

VertexSet vertices_of_mask(std::uint32_t mask) {
    VertexSet out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

SparsityVerdict sparse_via_brute(const Graph& g, SparsityParams p) {
    const int n = g.vertex_count();
    if (n > kBruteSparsityCap) {
        throw CapabilityError("brute-force sparsity test caps at " +
                              std::to_string(kBruteSparsityCap) + " vertices");
    }
    if (n < p.d) return SparsityVerdict{};
    const auto adj = adjacency_masks(g);
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        const int size = std::popcount(mask);
        if (size < p.d) continue;
        if (induced_count_of_mask(adj, mask) > p.bound(size)) {
            return SparsityVerdict{false, vertices_of_mask(mask)};
        }
    }
    return SparsityVerdict{};
}

} // namespace

SparsityVerdict is_d_sparse(const Graph& g, SparsityParams p, Backend backend) {
    switch (backend) {
        case Backend::flow:
            return sparse_via_flow(g, p);
        case Backend::brute:
            return sparse_via_brute(g, p);
        case Backend::both: {
            const SparsityVerdict flow_verdict = sparse_via_flow(g, p);
            const SparsityVerdict brute_verdict = sparse_via_brute(g, p);
            if (flow_verdict.is_sparse != brute_verdict.is_sparse) {
                throw InternalInconsistencyError(
                    "sparsity backends disagree (flow=" +
                    std::to_string(flow_verdict.is_sparse) +
                    ", brute=" + std::to_string(brute_verdict.is_sparse) +
                    ", d=" + std::to_string(p.d) + ") on graph:\n" +
                    serialize_graph(g, GraphFormat::edge_list));
            }
            return flow_verdict;
        }
    }
    throw InputError("unknown backend");
}

bool can_add_edge(const Graph& h, Edge e, SparsityParams p) {
    e = make_edge(e.u, e.v);
    if (h.has_edge(e.u, e.v)) {
        throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         "): already present");
    }
    const Graph extended = h.with_edge(e);
    if (extended.vertex_count() < p.d) return true;
    // h is d-sparse, so any violation in h + e passes through both endpoints
    // of e; probing forced supersets of the new edge is exhaustive.
    for (const VertexSet& forced : forced_sets_for_pair(extended, e, p.d)) {
        const MaxExcess excess = max_excess_over(extended, forced, p);
        if (excess.value > -p.threshold()) return false;
    }
    return true;
}

namespace {

MaximalSubgraphResult greedy_in_order(const Graph& g, SparsityParams p,
                                      std::vector<Edge> order) {
    Graph kept_graph(g.vertex_count());
    MaximalSubgraphResult result;
    for (const Edge& e : order) {
        if (can_add_edge(kept_graph, e, p)) {
            kept_graph = kept_graph.with_edge(e);
            result.kept.push_back(e);
        } else {
            result.rejected.push_back(e);
        }
    }
    std::sort(result.kept.begin(), result.kept.end());
    std::sort(result.rejected.begin(), result.rejected.end());
    result.insertion_order = std::move(order);
    return result;
}

} // namespace

MaximalSubgraphResult maximal_sparse_subgraph(const Graph& g, SparsityParams p) {
    return greedy_in_order(g, p, g.edges());
}

MaximalSubgraphResult maximal_sparse_subgraph(const Graph& g, SparsityParams p,
                                              std::uint64_t seed) {
    std::vector<Edge> order = g.edges();
    Xoshiro256 rng(seed);
    rng.shuffle(order);
    return greedy_in_order(g, p, std::move(order));
}

MaximalSubgraphResult maximal_sparse_subgraph(const Graph& g, SparsityParams p,
                                              std::span<const Edge> order) {
    std::vector<Edge> sequence(order.begin(), order.end());
    std::vector<Edge> sorted = sequence;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.edges()) {
        throw InputError("explicit order must be a permutation of the graph's edges");
    }
    return greedy_in_order(g, p, std::move(sequence));
}

namespace {

EdgeSubset induced_edges(const Graph& g, const VertexSet& vertices) {
    std::vector<char> in_set(g.vertex_count(), 0);
    for (int v : vertices) in_set[v] = 1;
    EdgeSubset out;
    for (const Edge& e : g.edges()) {
        if (in_set[e.u] && in_set[e.v]) out.push_back(e);
    }
    return out;
}

// Keeps the inclusion-maximal sets and attaches induced edges; adds a
// two-vertex component for every edge covered by no kept set.
std::vector<CriticalComponent> assemble_components(const Graph& h, const std::set<VertexSet>& tight) {
    std::vector<VertexSet> maximal;
    for (const VertexSet& candidate : tight) {
        bool dominated = false;
        for (const VertexSet& other : tight) {
            if (other.size() > candidate.size() && is_subset_of(candidate, other)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(candidate);
    }
    std::sort(maximal.begin(), maximal.end());

    std::vector<CriticalComponent> components;
    for (const VertexSet& vertices : maximal) {
        components.push_back(CriticalComponent{vertices, induced_edges(h, vertices)});
    }
    for (const Edge& e : h.edges()) {
        bool covered = false;
        for (const VertexSet& vertices : maximal) {
            if (std::binary_search(vertices.begin(), vertices.end(), e.u) &&
                std::binary_search(vertices.begin(), vertices.end(), e.v)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            components.push_back(CriticalComponent{VertexSet{e.u, e.v}, EdgeSubset{e}});
        }
    }
    std::sort(components.begin(), components.end(),
              [](const CriticalComponent& a, const CriticalComponent& b) {
                  return a.vertices < b.vertices;
              });
    return components;
}

std::vector<CriticalComponent> components_via_flow(const Graph& h, SparsityParams p) {
    // Every component U with |U| >= d+2 contains an edge together with a
    // size-d forced set D inside U; the maximizers of i(S) - d|S| over
    // supersets of D form a lattice, U is one of them (tight sets attain the
    // maximum -l in a sparse graph), and the maximal maximizer returned by
    // the flow equals U because no larger tight set contains U. Sweeping all
    // (edge, D) pairs therefore collects every such component, plus possibly
    // smaller tight sets that the maximality filter below removes.
    std::set<VertexSet> tight;
    for (const Edge& e : h.edges()) {
        for (const VertexSet& forced : forced_sets_for_pair(h, e, p.d)) {
            const MaxExcess excess = max_excess_over(h, forced, p);
            if (excess.value == -p.threshold() &&
                static_cast<int>(excess.argmax.size()) >= p.d + 2) {
                tight.insert(excess.argmax);
            }
        }
    }
    return assemble_components(h, tight);
}

std::vector<CriticalComponent> components_via_brute(const Graph& h, SparsityParams p) {
    const int n = h.vertex_count();
    if (n > kBruteTightSetCap) {
        throw CapabilityError("brute-force tight-set enumeration caps at " +
                              std::to_string(kBruteTightSetCap) + " vertices");
    }
    const auto adj = adjacency_masks(h);
    std::set<VertexSet> tight;
    const std::uint32_t limit = n >= 0 ? std::uint32_t{1} << n : 0;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        const int size = std::popcount(mask);
        if (size < p.d + 2) continue;
        if (induced_count_of_mask(adj, mask) == p.bound(size)) {
            tight.insert(vertices_of_mask(mask));
        }
    }
    return assemble_components(h, tight);
}

} // namespace

std::vector<CriticalComponent> critical_components(const Graph& h, SparsityParams p,
                                                   Backend backend) {
    const Backend sparsity_backend = backend == Backend::both ? Backend::both : backend;
    const SparsityVerdict verdict = is_d_sparse(h, p, sparsity_backend);
    if (!verdict.is_sparse) {
        throw PreconditionError("critical components require a d-sparse graph");
    }
    switch (backend) {
        case Backend::flow:
            return components_via_flow(h, p);
        case Backend::brute:
            return components_via_brute(h, p);
        case Backend::both: {
            const auto flow_result = components_via_flow(h, p);
            const auto brute_result = components_via_brute(h, p);
            bool same = flow_result.size() == brute_result.size();
            for (std::size_t i = 0; same && i < flow_result.size(); ++i) {
                same = flow_result[i].vertices == brute_result[i].vertices &&
                       flow_result[i].edges == brute_result[i].edges;
            }
            if (!same) {
                throw InternalInconsistencyError(
                    "component backends disagree (d=" + std::to_string(p.d) + ") on graph:\n" +
                    serialize_graph(h, GraphFormat::edge_list));
            }
            return flow_result;
        }
    }
    throw InputError("unknown backend");
}

IntersectionReport check_component_intersections(const std::vector<CriticalComponent>& components,
                                                 const Graph& h, SparsityParams p) {
    IntersectionReport report;
    for (std::size_t i = 0; i < components.size(); ++i) {
        for (std::size_t j = i + 1; j < components.size(); ++j) {
            IntersectionCheck check;
            check.first = static_cast<int>(i);
            check.second = static_cast<int>(j);
            check.intersection = set_intersection(components[i].vertices, components[j].vertices);
            const int size = static_cast<int>(check.intersection.size());
            check.pass = size <= p.d - 1;
            if (size == p.d - 1) {
                check.induced = induced_edge_count(h, check.intersection);
                check.pass = check.pass && check.induced == binomial(p.d - 1, 2);
            }
            report.pass = report.pass && check.pass;
            report.pairs.push_back(std::move(check));
        }
    }
    return report;
}

} // namespace rigidity
