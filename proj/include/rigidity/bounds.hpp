#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rigidity/rank.hpp"

namespace rigidity {

// One sampled maximal subgraph that came out SMALLER than the rank — which
// the theory says cannot happen for d <= 5. Kept for reproduction.
struct BoundViolation {
    std::uint64_t seed = 0;
    std::vector<Edge> order;
    int kept_size = 0;
};

struct BoundReport {
    int d = 0;
    RankResult rank;
    std::vector<int> sample_sizes;  // |F| per sampled maximal subgraph
    int min_size = 0;
    std::vector<BoundViolation> violations;

    bool pass() const { return violations.empty(); }
};

// Samples maximal d-sparse subgraphs under seeded random orders (plus the
// canonical order as sample zero) and checks rank <= |F| for each.
// Guaranteed only for d <= 5; larger d is exploration territory.
BoundReport upper_bound_check(const Graph& g, SparsityParams p, int samples,
                              std::uint64_t seed, int trials = 3);

struct SdEstimate {
    int value = 0;
    MaximalSubgraphResult witness;
    bool exact = false;
};

// Exact minimum size of a maximal d-sparse subgraph by branch and bound over
// edge subsets. Capability cap: |E| <= 20.
SdEstimate s_d_exhaustive(const Graph& g, SparsityParams p);

// Heuristic upper estimate: minimum over the canonical greedy order, the
// given preferred orders, and `samples` seeded random orders. The witness is
// re-verified to be a maximal d-sparse subgraph.
SdEstimate s_d_heuristic(const Graph& g, SparsityParams p, int samples, std::uint64_t seed,
                         std::span<const std::vector<Edge>> preferred_orders = {});

// Minimum heuristic s_d over supergraphs of g obtained by adding at most
// edge_budget non-edges (the empty augmentation included). Each candidate
// also gets one deterministic order that feeds the added edges first. The
// result can only drop below s_d(g), never below the rank; the rank bound is
// asserted (InternalInconsistencyError) for d <= 5.
struct SdStarResult {
    int value = 0;
    std::vector<Edge> added;
    MaximalSubgraphResult witness;
};
SdStarResult s_d_star_search(const Graph& g, SparsityParams p, int edge_budget,
                             int samples_per_candidate, std::uint64_t seed, int trials = 3);

// Adds sampled non-edges to the K5 flower and checks that the rank strictly
// grows from 89 to 90 every time.
struct GrowthCheck {
    Edge added;
    int rank = 0;
    bool pass = true;
};
struct GrowthReport {
    int base_rank = 0;
    std::vector<GrowthCheck> checks;
    bool pass = true;
};
GrowthReport flower_rank_growth_check(int sample_edges, std::uint64_t seed, int trials = 3);

// Random exploration for d in 6..8 where the upper bound is unproven: logs
// (never asserts) any graph whose 10-trial re-verified rank exceeds a sampled
// maximal subgraph size.
struct HuntCandidate {
    std::uint64_t graph_seed = 0;
    Graph graph;
    int first_rank = 0;
    int verified_rank = 0;  // 10 trials
    std::vector<int> sample_sizes;
};
struct HuntReport {
    int d = 0;
    int graphs_tested = 0;
    std::vector<HuntCandidate> candidates;
};
HuntReport counterexample_hunt(SparsityParams p, int n_max, int samples, std::uint64_t seed);

} // namespace rigidity
