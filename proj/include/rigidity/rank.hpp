#pragma once

#include <cstdint>
#include <vector>

#include "rigidity/fp61.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/sparsity.hpp"

namespace rigidity {

// A point per vertex with d coordinates drawn uniformly from GF(p).
struct CoordinateAssignment {
    std::uint64_t prime = fp61::prime;
    int dimension = 0;
    std::vector<std::uint64_t> coords;  // vertex-major: coords[v*dimension + axis]

    std::uint64_t at(int v, int axis) const {
        return coords[static_cast<std::size_t>(v) * dimension + axis];
    }
};

CoordinateAssignment random_coordinates(int vertex_count, SparsityParams p,
                                        std::uint64_t seed);

// Dense |rows| x d|V| matrix over GF(p), row-major.
struct FieldMatrix {
    int rows = 0;
    int cols = 0;
    std::uint64_t prime = fp61::prime;
    std::vector<std::uint64_t> entries;

    std::uint64_t& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    std::uint64_t at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

// One row per edge (u, v) in canonical order: p(u)-p(v) in u's coordinate
// block, p(v)-p(u) in v's block, zero elsewhere.
FieldMatrix build_rigidity_matrix(const Graph& g, SparsityParams p,
                                  const CoordinateAssignment& coords);
// Same, but with rows restricted to the given edges of g (in their order).
FieldMatrix build_rigidity_matrix(const Graph& g, const EdgeSubset& rows, SparsityParams p,
                                  const CoordinateAssignment& coords);

// Rank by Gaussian elimination over GF(p); pivots on the first nonzero entry
// of each column, so the result is deterministic for fixed entries.
int matrix_rank(FieldMatrix m);

struct RankTrial {
    std::uint64_t seed = 0;
    int rank = 0;
};

// Randomized generic rank: the maximum rank over independent coordinate
// trials. A specialization never exceeds the generic rank, so the result is
// always a certified lower bound; it equals the generic rank unless every
// trial hit a vanishing minor (probability <= rank/p per trial).
struct RankResult {
    int rank = 0;
    int d = 0;
    std::uint64_t prime = fp61::prime;
    std::vector<RankTrial> trials;
    bool trials_agree = true;
    bool certified_lower_bound = true;
};

RankResult generic_rank(const Graph& g, SparsityParams p, int trials = 3,
                        std::uint64_t seed = 0);
RankResult rank_of_edge_rows(const Graph& g, const EdgeSubset& rows, SparsityParams p,
                             int trials = 3, std::uint64_t seed = 0);

// Whether the rows of the given edges reach full rank |f| in some trial.
// The empty set is independent.
bool is_independent(const Graph& g, const EdgeSubset& f, SparsityParams p,
                    int trials = 3, std::uint64_t seed = 0);

// Rank criterion d|V| - d(d+1)/2 for |V| >= d+2; smaller graphs are rigid
// exactly when complete.
bool is_rigid(const Graph& g, SparsityParams p, int trials = 3, std::uint64_t seed = 0);

// Counting necessity: an independent edge set must span a d-sparse subgraph.
struct MaxwellReport {
    bool independent = false;
    SparsityVerdict sparsity;
    bool pass = true;  // independent implies sparse
};
MaxwellReport maxwell_check(const Graph& g, const EdgeSubset& f, SparsityParams p,
                            int trials = 3, std::uint64_t seed = 0);

} // namespace rigidity
