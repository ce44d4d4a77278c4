#include "rigidity/covers.hpp"

#include <algorithm>
#include <set>

#include "rigidity/errors.hpp"
#include "rigidity/util.hpp"

namespace rigidity {

namespace {

std::string vertex_tuple(const VertexSet& vertices) {
    std::string out = "{";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(vertices[i]);
    }
    out += '}';
    return out;
}

Cover cover_from_components(Graph host, const std::vector<CriticalComponent>& components) {
    Cover cover;
    cover.graph = std::move(host);
    for (const CriticalComponent& component : components) {
        cover.sets.push_back(component.vertices);
        cover.set_edges.push_back(component.edges);
    }
    return cover;
}

// Guaranteed structural properties of a critical cover; failure is a bug.
void verify_cover_properties(const Cover& cover, const Graph& g, SparsityParams p) {
    if (!covers_graph(cover, g)) {
        throw InternalInconsistencyError("critical cover does not cover the host graph");
    }
    if (cover_thinness(cover) > p.d - 1) {
        throw InternalInconsistencyError("critical cover is not (d-1)-thin");
    }
    if (p.d >= 2) {  // at d = 1 the only (d-1)-hinge is the empty set
        for (const Hinge& hinge : hinges(cover, p.d - 1)) {
            if (!hinge.closed) {
                throw InternalInconsistencyError("open (d-1)-hinge " +
                                                 vertex_tuple(hinge.vertices) +
                                                 " in a critical cover");
            }
        }
    }
}

} // namespace

Cover critical_cover(const Graph& g, const MaximalSubgraphResult& h, SparsityParams p) {
    EdgeSubset all_edges = h.kept;
    all_edges.insert(all_edges.end(), h.rejected.begin(), h.rejected.end());
    std::sort(all_edges.begin(), all_edges.end());
    if (all_edges != g.edges()) {
        throw InputError("subgraph result does not partition the host graph's edges");
    }
    const Graph kept_graph = subgraph_with_edges(g, h.kept);
    if (!is_d_sparse(kept_graph, p).is_sparse) {
        throw PreconditionError("kept subgraph is not d-sparse");
    }
    for (const Edge& e : h.rejected) {
        if (can_add_edge(kept_graph, e, p)) {
            throw PreconditionError("kept subgraph is not maximal: edge (" +
                                    std::to_string(e.u) + ", " + std::to_string(e.v) +
                                    ") could be added");
        }
    }
    Cover cover = cover_from_components(g, critical_components(kept_graph, p));
    verify_cover_properties(cover, g, p);
    return cover;
}

Cover critical_cover_of_sparse(const Graph& h, SparsityParams p, Backend backend) {
    Cover cover = cover_from_components(h, critical_components(h, p, backend));
    verify_cover_properties(cover, h, p);
    return cover;
}

int cover_thinness(const Cover& c) {
    int thin = 0;
    for (std::size_t i = 0; i < c.sets.size(); ++i) {
        for (std::size_t j = i + 1; j < c.sets.size(); ++j) {
            const VertexSet inter = set_intersection(c.sets[i], c.sets[j]);
            thin = std::max(thin, static_cast<int>(inter.size()));
        }
    }
    return thin;
}

bool covers_graph(const Cover& c, const Graph& g) {
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (const VertexSet& set : c.sets) {
            if (std::binary_search(set.begin(), set.end(), e.u) &&
                std::binary_search(set.begin(), set.end(), e.v)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

std::vector<Hinge> hinges(const Cover& c, int k) {
    if (k < 1) throw InputError("hinge size must be at least 1");
    std::set<VertexSet> candidates;
    for (std::size_t i = 0; i < c.sets.size(); ++i) {
        for (std::size_t j = i + 1; j < c.sets.size(); ++j) {
            const VertexSet inter = set_intersection(c.sets[i], c.sets[j]);
            if (static_cast<int>(inter.size()) < k) continue;
            for_each_combination(inter, k, [&](const std::vector<int>& subset) {
                candidates.insert(subset);
            });
        }
    }
    std::vector<Hinge> out;
    for (const VertexSet& vertices : candidates) {
        Hinge hinge;
        hinge.vertices = vertices;
        for (const VertexSet& set : c.sets) {
            if (is_subset_of(vertices, set)) ++hinge.multiplicity;
        }
        hinge.closed = true;
        for (std::size_t a = 0; a < vertices.size() && hinge.closed; ++a) {
            for (std::size_t b = a + 1; b < vertices.size(); ++b) {
                if (!c.graph.has_edge(vertices[a], vertices[b])) {
                    hinge.closed = false;
                    break;
                }
            }
        }
        out.push_back(std::move(hinge));
    }
    return out;  // std::set iteration already sorts by vertex tuple
}

HingeAggregates aggregates(const Cover& c, SparsityParams p) {
    const int m = static_cast<int>(c.sets.size());
    HingeAggregates agg;
    agg.a.assign(p.d + 1, 0);
    agg.theta.assign(m, std::vector<int>(p.d + 1, 0));
    if (m < 2) {
        agg.degenerate = true;
        return agg;
    }
    agg.a[0] = m - 1;  // the empty hinge lies in every set
    for (int i = 0; i < m; ++i) agg.theta[i][0] = 1;
    for (int k = 1; k <= p.d; ++k) {
        for (const Hinge& hinge : hinges(c, k)) {
            agg.a[k] += hinge.multiplicity - 1;
            for (int i = 0; i < m; ++i) {
                if (is_subset_of(hinge.vertices, c.sets[i])) ++agg.theta[i][k];
            }
        }
    }
    return agg;
}

namespace {

CoverReport base_report(const Cover& cover, SparsityParams p) {
    CoverReport report;
    report.thin = cover_thinness(cover);
    for (int k = 1; k <= p.d; ++k) {
        for (Hinge& hinge : hinges(cover, k)) report.hinge_list.push_back(std::move(hinge));
    }
    report.agg = aggregates(cover, p);
    return report;
}

void add_check(CoverReport& report, std::string name, long long lhs, long long rhs,
               bool strict) {
    CheckLine line;
    line.name = std::move(name);
    line.lhs = lhs;
    line.rhs = rhs;
    line.pass = strict ? lhs < rhs : lhs <= rhs;
    report.pass = report.pass && line.pass;
    report.checks.push_back(std::move(line));
}

} // namespace

CoverReport check_prefixedhinge(const Graph& h, SparsityParams p) {
    const Cover cover = critical_cover_of_sparse(h, p);
    CoverReport report = base_report(cover, p);
    const int m = static_cast<int>(cover.sets.size());
    if (m < 2) {
        report.applicable = false;
        return report;
    }

    // Hinge families up to size d+1; anything beyond the cover's thinness is
    // empty, which makes the top-k sums vanish as expected.
    std::vector<std::vector<Hinge>> theta(p.d + 2);
    for (int k = 1; k <= p.d + 1; ++k) theta[k] = hinges(cover, k);

    auto qualifies = [&](const VertexSet& w) {
        for (const VertexSet& set : cover.sets) {
            if (is_subset_of(w, set) && static_cast<int>(set.size()) < p.d + 2) return false;
        }
        return true;
    };
    auto restricted_sum = [&](int k, const VertexSet& w) {
        long long sum = 0;
        if (k <= p.d + 1) {
            for (const Hinge& u : theta[k]) {
                if (is_subset_of(w, u.vertices)) sum += u.multiplicity - 1;
            }
        }
        return sum;
    };

    for (int k = 0; k <= p.d - 1; ++k) {
        // Hinges of size k; k = 0 contributes the empty hinge, whose
        // multiplicity is the number of cover sets.
        std::vector<std::pair<VertexSet, int>> level;
        if (k == 0) {
            level.emplace_back(VertexSet{}, m);
        } else {
            for (const Hinge& w : theta[k]) level.emplace_back(w.vertices, w.multiplicity);
        }
        for (const auto& [w, mult] : level) {
            if (!qualifies(w)) {
                report.exempt.push_back(w);
                continue;
            }
            const long long lhs =
                (p.d - k) * restricted_sum(k + 1, w) - restricted_sum(k + 2, w);
            const long long rhs = binomial(p.d + 1 - k, 2) * (mult - 1);
            add_check(report,
                      "prefixedhinge[k=" + std::to_string(k) + ",W=" + vertex_tuple(w) + "]",
                      lhs, rhs, /*strict=*/true);
        }
    }
    return report;
}

CoverReport check_fixedhinge(const Graph& h, SparsityParams p) {
    const Cover cover = critical_cover_of_sparse(h, p);
    CoverReport report = base_report(cover, p);
    const int m = static_cast<int>(cover.sets.size());
    bool all_large = true;
    for (const VertexSet& set : cover.sets) {
        all_large = all_large && static_cast<int>(set.size()) >= p.d + 2;
    }
    if (m < 2 || !all_large) {
        report.applicable = false;
        return report;
    }
    const auto& a = report.agg.a;
    auto at = [&](int k) { return k <= p.d ? a[k] : 0; };
    for (int k = 0; k <= p.d - 2; ++k) {
        // (a) aggregates the per-hinge inequality over all k-hinges, so it
        // carries content only when some k-hinge exists (a_k >= 1; note
        // a_k = 0 forces a_{k+1} = a_{k+2} = 0 since hinges nest downward).
        if (at(k) > 0) {
            add_check(report, "fixedhinge(a)[k=" + std::to_string(k) + "]",
                      static_cast<long long>(p.d - k) * (k + 1) * at(k + 1) -
                          binomial(k + 2, 2) * at(k + 2),
                      binomial(p.d + 1 - k, 2) * at(k), /*strict=*/true);
        }
        add_check(report, "fixedhinge(b)[k=" + std::to_string(k) + "]",
                  static_cast<long long>(p.d - k) * at(k + 1) -
                      static_cast<long long>(k + 1) * at(k + 2),
                  binomial(p.d + 1, k + 2) * (m - 1), /*strict=*/true);
        add_check(report, "fixedhinge(c)[k=" + std::to_string(k) + "]",
                  static_cast<long long>(p.d) * (p.d - k) * at(k + 1),
                  static_cast<long long>(k + 2) * (p.d - k - 1) *
                      binomial(p.d + 1, k + 2) * (m - 1),
                  /*strict=*/true);
    }
    return report;
}

CoverReport check_boundedhinges(const Graph& h, SparsityParams p) {
    const Cover cover = critical_cover_of_sparse(h, p);
    CoverReport report = base_report(cover, p);
    const int m = static_cast<int>(cover.sets.size());
    if (m == 0) {
        report.applicable = false;
        return report;
    }
    for (const VertexSet& set : cover.sets) {
        if (set.size() == 2) report.vacuous = true;
    }
    auto min_theta = [&](int k) {
        long long best = -1;
        for (int i = 0; i < m; ++i) {
            const long long value = report.agg.theta[i][k];
            if (best < 0 || value < best) best = value;
        }
        return best;
    };
    add_check(report, "boundedhinges(theta1)", min_theta(1), 2 * p.d - 1, /*strict=*/false);
    if (p.d >= 3) {
        // The theta_2 bound needs d >= 3: at d = 2 covers are 1-thin, so
        // theta_2 vanishes while the bound (d-2)(d+1)-1 would be negative.
        add_check(report, "boundedhinges(theta2)", min_theta(2),
                  static_cast<long long>(p.d - 2) * (p.d + 1) - 1, /*strict=*/false);
    }
    add_check(report, "boundedhinges(theta_dminus1)", min_theta(p.d - 1), p.d,
              /*strict=*/false);
    return report;
}

EdgeSubset two_hinge_edges(const Cover& c, int component_index) {
    if (component_index < 0 || component_index >= static_cast<int>(c.set_edges.size())) {
        throw InputError("component index out of range");
    }
    EdgeSubset out;
    for (const Edge& e : c.set_edges[component_index]) {
        const VertexSet pair{e.u, e.v};
        int multiplicity = 0;
        for (const VertexSet& set : c.sets) {
            if (is_subset_of(pair, set)) ++multiplicity;
        }
        if (multiplicity >= 2) out.push_back(e);
    }
    return out;
}

} // namespace rigidity
