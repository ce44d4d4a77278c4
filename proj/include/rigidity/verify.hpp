#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rigidity/bounds.hpp"
#include "rigidity/covers.hpp"

namespace rigidity {

// Outcome of one verification suite: a named bundle of individual checks.
// Failure notes keep the first few reproduction details (seeds, sizes).
struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what);
    bool pass() const { return failures == 0; }
};

// The double-K5 example: 3-sparse, rank 17, heuristic minimum 18, and a
// single added edge (the shared pair) brings the minimum down to 17.
SuiteResult verify_double_k5_example(std::uint64_t seed = 0, int trials = 3);

// The K5 flower: rank 89; the heuristic minimum over `orders` seeded orders
// is 90 with a verified-maximal witness; adding any sampled non-edge lifts
// the rank to exactly 90.
SuiteResult verify_flower_example(int orders = 200, int growth_samples = 5,
                                  std::uint64_t seed = 0, int trials = 3);

// rank <= |F| for every sampled maximal d-sparse subgraph F, across random
// graphs (n <= 10, densities 0.3/0.5/0.8) and every d in 1..5.
SuiteResult verify_rank_upper_bound_corpus(int graphs = 300, int samples = 5,
                                           std::uint64_t seed = 0, int trials = 3);

// K_{d+2} facts for d in 1..5: rank C(d+2,2)-1, every single-edge-deleted
// edge set independent, and K_{d+1} independent.
SuiteResult verify_circuit_facts(std::uint64_t seed = 0, int trials = 3);

// Flow and brute backends agree: sparsity verdicts on every labeled graph
// with n <= 6 and on random graphs with n <= 8 (d in 2..5), component lists
// on random d-sparse graphs with n <= 10.
SuiteResult verify_backend_equivalence(int random_graphs = 200, int component_graphs = 100,
                                       std::uint64_t seed = 0);

// d=1: every maximal 1-sparse subgraph has n - #components edges = r_1.
// d=2: every sampled maximal 2-sparse subgraph size equals r_2.
SuiteResult verify_exactness_anchors(int graphs_per_dim = 100, int samples = 3,
                                     std::uint64_t seed = 0, int trials = 3);

// Critical covers of generated qualifying sparse graphs (d in 1..5) satisfy
// the full inequality suite: prefixedhinge, fixedhinge, boundedhinges,
// pairwise intersection bounds, (d-1)-thinness, closed (d-1)-hinges, and no
// d-hinges at all.
SuiteResult verify_cover_inequalities(int instances_per_dim = 20, std::uint64_t seed = 0);

// Sampled independent edge sets always span a d-sparse subgraph (d in 1..5).
SuiteResult verify_maxwell_necessity(int sets = 100, std::uint64_t seed = 0, int trials = 2);

// Re-running representative computations with equal seeds yields
// byte-identical serialized output.
SuiteResult verify_determinism(std::uint64_t seed = 0);

// All nine suites above at acceptance scale, in order.
std::vector<SuiteResult> verify_all(std::uint64_t seed = 0);

// ---- helpers shared with the CLI ------------------------------------------

int connected_component_count(const Graph& g);

// Greedy independent edge set: shuffles g's edges by seed and keeps an edge
// whenever the rank oracle certifies the grown set stays independent. The
// result is always certified independent.
EdgeSubset sample_independent_set(const Graph& g, SparsityParams p, std::uint64_t seed,
                                  int trials = 2);

// Random d-sparse graph built from tight blocks (K_{d+2} minus one edge,
// random trees for d=1) glued along at most d-1 shared vertices. Designed so
// every critical component has at least d+2 vertices and there are at least
// two of them.
Graph random_qualifying_sparse_graph(SparsityParams p, std::uint64_t seed);

} // namespace rigidity
