#include "rigidity/verify.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "rigidity/errors.hpp"
#include "rigidity/json_io.hpp"
#include "rigidity/rng.hpp"
#include "rigidity/util.hpp"

namespace rigidity {

void SuiteResult::expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failures;
        if (notes.size() < 20) notes.push_back(what);
    }
}

namespace {

constexpr double kDensities[3] = {0.3, 0.5, 0.8};

template <class F>
SuiteResult run_suite(std::string name, F&& body) {
    SuiteResult s;
    s.name = std::move(name);
    try {
        body(s);
    } catch (const std::exception& e) {
        s.expect(false, std::string("exception: ") + e.what());
    }
    return s;
}

std::string describe(const char* what, std::uint64_t seed, int d) {
    return std::string(what) + " (seed " + std::to_string(seed) + ", d=" + std::to_string(d) + ")";
}

} // namespace

int connected_component_count(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    int count = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        ++count;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return count;
}

EdgeSubset sample_independent_set(const Graph& g, SparsityParams p, std::uint64_t seed,
                                  int trials) {
    std::vector<Edge> order = g.edges();
    Xoshiro256 rng(seed);
    rng.shuffle(order);
    EdgeSubset current;
    std::uint64_t step = 0;
    for (const Edge& e : order) {
        EdgeSubset candidate = current;
        candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), e), e);
        const RankResult r =
            rank_of_edge_rows(g, candidate, p, trials, derive_seed(seed, ++step));
        // rank == |rows| certifies independence exactly (the randomized rank
        // never overshoots); an undershoot only makes the sample smaller.
        if (r.rank == static_cast<int>(candidate.size())) current = std::move(candidate);
    }
    return current;
}

Graph random_qualifying_sparse_graph(SparsityParams p, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    if (p.d == 1) {
        // Disjoint random trees, each on at least 3 vertices: every tree is a
        // tight 1-critical component.
        const int trees = 2 + static_cast<int>(rng.below(3));
        std::vector<Edge> edges;
        int next = 0;
        for (int t = 0; t < trees; ++t) {
            const int size = 3 + static_cast<int>(rng.below(4));
            for (int i = 1; i < size; ++i) {
                const int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
                edges.push_back(make_edge(next + parent, next + i));
            }
            next += size;
        }
        return Graph(next, std::move(edges));
    }
    // Tight blocks: K_{d+2} minus one edge (exactly d(d+2) - d(d+1)/2 induced
    // edges). Later blocks share 1..d-1 vertices with an earlier block,
    // drawn from vertices avoiding the donor's missing edge so every shared
    // pair is adjacent. Each gluing leaves the union at least one edge below
    // tight, so the blocks stay separate critical components.
    const int max_blocks = p.d >= 4 ? 2 : (p.d == 3 ? 3 : 4);
    const int blocks =
        2 + (max_blocks > 2 ? static_cast<int>(rng.below(static_cast<std::uint64_t>(max_blocks - 1)))
                            : 0);
    std::set<Edge> edges;
    std::vector<VertexSet> complete_pools;  // per block: vertices off its missing edge
    int next = 0;
    for (int b = 0; b < blocks; ++b) {
        VertexSet verts;
        if (b > 0) {
            const int shared = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.d - 1)));
            VertexSet pool = complete_pools[rng.below(static_cast<std::uint64_t>(b))];
            rng.shuffle(pool);
            verts.assign(pool.begin(), pool.begin() + shared);
        }
        const int fresh = p.d + 2 - static_cast<int>(verts.size());
        for (int i = 0; i < fresh; ++i) verts.push_back(next + i);
        next += fresh;
        std::sort(verts.begin(), verts.end());
        const Edge missing = make_edge(next - 2, next - 1);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                const Edge e = make_edge(verts[i], verts[j]);
                if (e != missing) edges.insert(e);
            }
        }
        VertexSet pool;
        for (int v : verts) {
            if (v != missing.u && v != missing.v) pool.push_back(v);
        }
        complete_pools.push_back(std::move(pool));
    }
    return Graph(next, std::vector<Edge>(edges.begin(), edges.end()));
}

SuiteResult verify_double_k5_example(std::uint64_t seed, int trials) {
    return run_suite("double-k5", [&](SuiteResult& s) {
        const DoubleK5 ex = example_double_k5();
        SparsityParams p(3);
        s.expect(ex.graph.vertex_count() == 8 && ex.graph.edge_count() == 18,
                 "expected 8 vertices and 18 edges");
        const SparsityVerdict verdict = is_d_sparse(ex.graph, p, Backend::both);
        s.expect(verdict.is_sparse, "double-k5 must be 3-sparse");

        const RankResult rank = generic_rank(ex.graph, p, trials, seed);
        s.expect(rank.rank == 17, "rank 17 expected, got " + std::to_string(rank.rank));

        const SdEstimate sd = s_d_heuristic(ex.graph, p, 20, derive_seed(seed, 1));
        s.expect(sd.value == 18, "heuristic minimum 18 expected, got " + std::to_string(sd.value));

        const SdStarResult star = s_d_star_search(ex.graph, p, 1, 10, derive_seed(seed, 2), trials);
        s.expect(star.value == 17,
                 "augmented minimum 17 expected, got " + std::to_string(star.value));
        s.expect(star.added == EdgeSubset{ex.deleted_pair},
                 "the witness augmentation must be the shared pair");
    });
}

SuiteResult verify_flower_example(int orders, int growth_samples, std::uint64_t seed,
                                  int trials) {
    return run_suite("k5-flower", [&](SuiteResult& s) {
        const Graph flower = example_k5_flower();
        SparsityParams p(3);
        s.expect(flower.vertex_count() == 35 && flower.edge_count() == 100,
                 "expected 35 vertices and 100 edges");
        // 100 edges on 35 vertices exceeds 3*35 - 6 = 99: not 3-sparse, which
        // is exactly why the heuristic minimum (90) undercuts the edge count.
        s.expect(!is_d_sparse(flower, p).is_sparse, "flower must not be 3-sparse");

        const RankResult rank = generic_rank(flower, p, trials, seed);
        s.expect(rank.rank == 89, "rank 89 expected, got " + std::to_string(rank.rank));

        const SdEstimate sd = s_d_heuristic(flower, p, orders, derive_seed(seed, 1));
        s.expect(sd.value == 90,
                 "heuristic minimum 90 expected, got " + std::to_string(sd.value));
        s.expect(static_cast<int>(sd.witness.kept.size()) == 90, "witness must keep 90 edges");

        const GrowthReport growth = flower_rank_growth_check(growth_samples, seed, trials);
        s.expect(growth.base_rank == 89, "growth base rank 89");
        for (const GrowthCheck& c : growth.checks) {
            s.expect(c.pass, "adding " + std::to_string(c.added.u) + "-" +
                                 std::to_string(c.added.v) + " gave rank " +
                                 std::to_string(c.rank) + ", expected 90");
        }
    });
}

SuiteResult verify_rank_upper_bound_corpus(int graphs, int samples, std::uint64_t seed,
                                           int trials) {
    return run_suite("rank-upper-bound", [&](SuiteResult& s) {
        for (int i = 0; i < graphs; ++i) {
            const std::uint64_t gseed = derive_seed(seed, static_cast<std::uint64_t>(i));
            Xoshiro256 rng(gseed);
            const int n = 4 + static_cast<int>(rng.below(7));
            const Graph g = random_graph(n, kDensities[i % 3], rng.next());
            for (int d = 1; d <= 5; ++d) {
                const BoundReport rep = upper_bound_check(
                    g, SparsityParams(d), samples, derive_seed(gseed, 100 + d), trials);
                s.expect(rep.pass(),
                         describe("rank exceeded a maximal subgraph size", gseed, d));
            }
        }
    });
}

SuiteResult verify_circuit_facts(std::uint64_t seed, int trials) {
    return run_suite("circuit", [&](SuiteResult& s) {
        for (int d = 1; d <= 5; ++d) {
            SparsityParams p(d);
            const Graph circuit = complete_graph(d + 2);
            const int expected = static_cast<int>(binomial(d + 2, 2)) - 1;
            const RankResult rank = generic_rank(circuit, p, trials, derive_seed(seed, d));
            s.expect(rank.rank == expected,
                     "rank of K_" + std::to_string(d + 2) + " expected " +
                         std::to_string(expected) + ", got " + std::to_string(rank.rank));
            int index = 0;
            for (const Edge& skip : circuit.edges()) {
                EdgeSubset rest;
                for (const Edge& e : circuit.edges()) {
                    if (e != skip) rest.push_back(e);
                }
                const bool independent = is_independent(
                    circuit, rest, p, trials, derive_seed(seed, 100 * d + (++index)));
                s.expect(independent, describe("single-edge-deleted circuit subset dependent",
                                               seed, d));
            }
            const Graph clique = complete_graph(d + 1);
            const RankResult full = generic_rank(clique, p, trials, derive_seed(seed, 17 + d));
            s.expect(full.rank == static_cast<int>(binomial(d + 1, 2)),
                     "K_" + std::to_string(d + 1) + " must be independent");
        }
    });
}

SuiteResult verify_backend_equivalence(int random_graphs, int component_graphs,
                                       std::uint64_t seed) {
    return run_suite("backend-equivalence", [&](SuiteResult& s) {
        // Every labeled graph with up to 6 vertices.
        for (int n = 1; n <= 6; ++n) {
            std::vector<Edge> pairs;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) pairs.push_back(Edge{u, v});
            }
            const int pair_count = static_cast<int>(pairs.size());
            for (std::uint32_t mask = 0; mask < (1u << pair_count); ++mask) {
                std::vector<Edge> edges;
                for (int b = 0; b < pair_count; ++b) {
                    if (mask & (1u << b)) edges.push_back(pairs[b]);
                }
                const Graph g(n, std::move(edges));
                for (int d = 2; d <= 5; ++d) {
                    bool agreed = true;
                    std::string detail;
                    try {
                        is_d_sparse(g, SparsityParams(d), Backend::both);
                    } catch (const InternalInconsistencyError& e) {
                        agreed = false;
                        detail = e.what();
                    }
                    s.expect(agreed, "backend mismatch n=" + std::to_string(n) + " mask=" +
                                         std::to_string(mask) + " d=" + std::to_string(d) +
                                         ": " + detail);
                }
            }
        }
        // Random graphs with up to 8 vertices.
        for (int i = 0; i < random_graphs; ++i) {
            const std::uint64_t gseed = derive_seed(seed, 50000 + static_cast<std::uint64_t>(i));
            Xoshiro256 rng(gseed);
            const int n = 4 + static_cast<int>(rng.below(5));
            const Graph g = random_graph(n, kDensities[i % 3], rng.next());
            for (int d = 2; d <= 5; ++d) {
                bool agreed = true;
                std::string detail;
                try {
                    is_d_sparse(g, SparsityParams(d), Backend::both);
                } catch (const InternalInconsistencyError& e) {
                    agreed = false;
                    detail = e.what();
                }
                s.expect(agreed, describe(("backend mismatch: " + detail).c_str(), gseed, d));
            }
        }
        // Component lists on random d-sparse graphs with up to 10 vertices.
        for (int i = 0; i < component_graphs; ++i) {
            const int d = 2 + i % 4;
            SparsityParams p(d);
            const std::uint64_t gseed = derive_seed(seed, 90000 + static_cast<std::uint64_t>(i));
            Xoshiro256 rng(gseed);
            const int n = 6 + static_cast<int>(rng.below(5));
            const Graph g = random_graph(n, kDensities[i % 3], rng.next());
            const Graph h = subgraph_with_edges(g, maximal_sparse_subgraph(g, p).kept);
            bool agreed = true;
            std::string detail;
            try {
                critical_components(h, p, Backend::both);
            } catch (const InternalInconsistencyError& e) {
                agreed = false;
                detail = e.what();
            }
            s.expect(agreed, describe(("component mismatch: " + detail).c_str(), gseed, d));
        }
    });
}

SuiteResult verify_exactness_anchors(int graphs_per_dim, int samples, std::uint64_t seed,
                                     int trials) {
    return run_suite("exactness-anchors", [&](SuiteResult& s) {
        SparsityParams p1(1);
        for (int i = 0; i < graphs_per_dim; ++i) {
            const std::uint64_t gseed = derive_seed(seed, 1000 + static_cast<std::uint64_t>(i));
            Xoshiro256 rng(gseed);
            const int n = 3 + static_cast<int>(rng.below(8));
            const Graph g = random_graph(n, kDensities[i % 3], rng.next());
            const int expected = n - connected_component_count(g);
            const int r1 = generic_rank(g, p1, trials, derive_seed(gseed, 1)).rank;
            s.expect(r1 == expected, describe("r_1 != n - #components", gseed, 1));
            s.expect(static_cast<int>(maximal_sparse_subgraph(g, p1).kept.size()) == expected,
                     describe("canonical forest size off", gseed, 1));
            for (int t = 0; t < samples; ++t) {
                const auto sample =
                    maximal_sparse_subgraph(g, p1, derive_seed(gseed, 10 + static_cast<std::uint64_t>(t)));
                s.expect(static_cast<int>(sample.kept.size()) == expected,
                         describe("sampled forest size off", gseed, 1));
            }
        }
        SparsityParams p2(2);
        for (int i = 0; i < graphs_per_dim; ++i) {
            const std::uint64_t gseed = derive_seed(seed, 2000 + static_cast<std::uint64_t>(i));
            Xoshiro256 rng(gseed);
            const int n = 4 + static_cast<int>(rng.below(7));
            const Graph g = random_graph(n, kDensities[i % 3], rng.next());
            const int r2 = generic_rank(g, p2, trials, derive_seed(gseed, 1)).rank;
            s.expect(static_cast<int>(maximal_sparse_subgraph(g, p2).kept.size()) == r2,
                     describe("canonical 2-sparse size != r_2", gseed, 2));
            for (int t = 0; t < samples; ++t) {
                const auto sample =
                    maximal_sparse_subgraph(g, p2, derive_seed(gseed, 10 + static_cast<std::uint64_t>(t)));
                s.expect(static_cast<int>(sample.kept.size()) == r2,
                         describe("sampled 2-sparse size != r_2", gseed, 2));
            }
        }
    });
}

SuiteResult verify_cover_inequalities(int instances_per_dim, std::uint64_t seed) {
    return run_suite("cover-inequalities", [&](SuiteResult& s) {
        for (int d = 1; d <= 5; ++d) {
            SparsityParams p(d);
            int produced = 0;
            int attempt = 0;
            const int attempt_cap = instances_per_dim * 5;
            while (produced < instances_per_dim && attempt < attempt_cap) {
                const std::uint64_t iseed =
                    derive_seed(seed, static_cast<std::uint64_t>(d) * 10000 +
                                          static_cast<std::uint64_t>(attempt));
                ++attempt;
                const Graph g = random_qualifying_sparse_graph(p, iseed);
                const SparsityVerdict verdict = is_d_sparse(g, p);
                s.expect(verdict.is_sparse, describe("generated graph not sparse", iseed, d));
                if (!verdict.is_sparse) continue;

                const Cover cover = critical_cover_of_sparse(g, p);
                bool qualifies = cover.sets.size() >= 2;
                for (const VertexSet& set : cover.sets) {
                    qualifies = qualifies && static_cast<int>(set.size()) >= d + 2;
                }
                if (!qualifies) continue;
                ++produced;

                const CoverReport pre = check_prefixedhinge(g, p);
                s.expect(pre.applicable && pre.pass && pre.exempt.empty(),
                         describe("prefixedhinge failed", iseed, d));
                const CoverReport fix = check_fixedhinge(g, p);
                s.expect(fix.applicable && fix.pass, describe("fixedhinge failed", iseed, d));
                const CoverReport bnd = check_boundedhinges(g, p);
                s.expect(bnd.applicable && bnd.pass,
                         describe("boundedhinges failed", iseed, d));

                const auto comps = critical_components(g, p);
                s.expect(check_component_intersections(comps, g, p).pass,
                         describe("intersection lemma failed", iseed, d));
                s.expect(cover_thinness(cover) <= d - 1, describe("cover too thick", iseed, d));
                if (d >= 2) {
                    bool closed = true;
                    for (const Hinge& h : hinges(cover, d - 1)) closed = closed && h.closed;
                    s.expect(closed, describe("open (d-1)-hinge", iseed, d));
                }
                s.expect(hinges(cover, d).empty(), describe("unexpected d-hinge", iseed, d));
            }
            s.expect(produced == instances_per_dim,
                     "incomplete instance quota for d=" + std::to_string(d) + ": " +
                         std::to_string(produced) + "/" + std::to_string(instances_per_dim));
        }
    });
}

SuiteResult verify_maxwell_necessity(int sets, std::uint64_t seed, int trials) {
    return run_suite("maxwell-necessity", [&](SuiteResult& s) {
        for (int i = 0; i < sets; ++i) {
            const int d = 1 + i % 5;
            SparsityParams p(d);
            const std::uint64_t gseed = derive_seed(seed, 3000 + static_cast<std::uint64_t>(i));
            Xoshiro256 rng(gseed);
            const int n = d + 2 + static_cast<int>(rng.below(4));
            const Graph g = random_graph(n, kDensities[i % 3], rng.next());
            const EdgeSubset f = sample_independent_set(g, p, derive_seed(gseed, 1), trials);
            const MaxwellReport rep = maxwell_check(g, f, p, trials, derive_seed(gseed, 2));
            s.expect(rep.independent, describe("sampled set not certified independent", gseed, d));
            s.expect(rep.pass, describe("independent set spans a non-sparse subgraph", gseed, d));
        }
    });
}

SuiteResult verify_determinism(std::uint64_t seed) {
    return run_suite("determinism", [&](SuiteResult& s) {
        const DoubleK5 ex = example_double_k5();
        SparsityParams p3(3);
        auto run_all = [&]() {
            std::string out;
            out += dump_json_line(json_of_verdict(is_d_sparse(ex.graph, p3, Backend::both)));
            out += dump_json_line(json_of_components(critical_components(ex.graph, p3)));
            out += dump_json_line(json_of_rank(generic_rank(ex.graph, p3, 3, derive_seed(seed, 1))));
            out += dump_json_line(
                json_of_bounds(upper_bound_check(ex.graph, p3, 5, derive_seed(seed, 2))));
            out += dump_json_line(
                json_of_sdstar(s_d_star_search(ex.graph, p3, 1, 5, derive_seed(seed, 3))));
            const Graph rg = random_graph(9, 0.5, derive_seed(seed, 4));
            out += serialize_graph(rg, GraphFormat::edge_list);
            out += serialize_graph(rg, GraphFormat::json);
            out += serialize_graph(rg, GraphFormat::dot);
            out += dump_json_line(
                json_of_maximal(maximal_sparse_subgraph(rg, SparsityParams(2), derive_seed(seed, 5))));
            const Graph q = random_qualifying_sparse_graph(p3, derive_seed(seed, 6));
            out += dump_json_line(json_of_cover_report(
                critical_cover_of_sparse(q, p3), p3,
                {check_prefixedhinge(q, p3), check_fixedhinge(q, p3), check_boundedhinges(q, p3)}));
            return out;
        };
        const std::string first = run_all();
        const std::string second = run_all();
        s.expect(!first.empty(), "no output produced");
        s.expect(first == second, "library outputs differ between identical runs");
    });
}

std::vector<SuiteResult> verify_all(std::uint64_t seed) {
    std::vector<SuiteResult> out;
    out.push_back(verify_double_k5_example(seed));
    out.push_back(verify_flower_example(200, 5, seed));
    out.push_back(verify_rank_upper_bound_corpus(300, 5, seed));
    out.push_back(verify_circuit_facts(seed));
    out.push_back(verify_backend_equivalence(200, 100, seed));
    out.push_back(verify_exactness_anchors(100, 3, seed));
    out.push_back(verify_cover_inequalities(20, seed));
    out.push_back(verify_maxwell_necessity(100, seed));
    out.push_back(verify_determinism(seed));
    return out;
}

} // namespace rigidity
