#include "rigidity/rank.hpp"

#include <algorithm>
#include <string>

#include "rigidity/errors.hpp"
#include "rigidity/rng.hpp"
#include "rigidity/util.hpp"

namespace rigidity {

CoordinateAssignment random_coordinates(int vertex_count, SparsityParams p,
                                        std::uint64_t seed) {
    CoordinateAssignment assignment;
    assignment.dimension = p.d;
    assignment.coords.resize(static_cast<std::size_t>(vertex_count) * p.d);
    Xoshiro256 rng(seed);
    for (auto& value : assignment.coords) {
        // The prime is a hair under 2^61, so a 61-bit draw almost never
        // rejects.
        for (;;) {
            const std::uint64_t candidate = rng.next() >> 3;
            if (candidate < fp61::prime) {
                value = candidate;
                break;
            }
        }
    }
    return assignment;
}

FieldMatrix build_rigidity_matrix(const Graph& g, const EdgeSubset& rows, SparsityParams p,
                                  const CoordinateAssignment& coords) {
    if (coords.dimension != p.d) {
        throw InputError("coordinate assignment dimension does not match d");
    }
    if (coords.coords.size() != static_cast<std::size_t>(g.vertex_count()) * p.d) {
        throw InputError("coordinate assignment size does not match the graph");
    }
    FieldMatrix matrix;
    matrix.rows = static_cast<int>(rows.size());
    matrix.cols = g.vertex_count() * p.d;
    matrix.entries.assign(static_cast<std::size_t>(matrix.rows) * matrix.cols, 0);
    for (int r = 0; r < matrix.rows; ++r) {
        const Edge& e = rows[r];
        if (!g.has_edge(e.u, e.v)) {
            throw InputError("row edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                             ") is not an edge of the graph");
        }
        for (int axis = 0; axis < p.d; ++axis) {
            const std::uint64_t diff = fp61::sub(coords.at(e.u, axis), coords.at(e.v, axis));
            matrix.at(r, e.u * p.d + axis) = diff;
            matrix.at(r, e.v * p.d + axis) = fp61::sub(0, diff);
        }
    }
    return matrix;
}

FieldMatrix build_rigidity_matrix(const Graph& g, SparsityParams p,
                                  const CoordinateAssignment& coords) {
    return build_rigidity_matrix(g, g.edges(), p, coords);
}

int matrix_rank(FieldMatrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        }
        const std::uint64_t scale = fp61::inv(m.at(rank, col));
        for (int c = col; c < m.cols; ++c) {
            m.at(rank, c) = fp61::mul(m.at(rank, c), scale);
        }
        for (int r = rank + 1; r < m.rows; ++r) {
            const std::uint64_t factor = m.at(r, col);
            if (factor == 0) continue;
            for (int c = col; c < m.cols; ++c) {
                m.at(r, c) = fp61::sub(m.at(r, c), fp61::mul(factor, m.at(rank, c)));
            }
        }
        ++rank;
    }
    return rank;
}

RankResult rank_of_edge_rows(const Graph& g, const EdgeSubset& rows, SparsityParams p,
                             int trials, std::uint64_t seed) {
    if (trials < 1) throw InputError("at least one rank trial is required");
    RankResult result;
    result.d = p.d;
    for (int t = 0; t < trials; ++t) {
        RankTrial trial;
        trial.seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        const CoordinateAssignment coords =
            random_coordinates(g.vertex_count(), p, trial.seed);
        trial.rank = matrix_rank(build_rigidity_matrix(g, rows, p, coords));
        result.rank = std::max(result.rank, trial.rank);
        result.trials.push_back(trial);
    }
    for (const RankTrial& trial : result.trials) {
        result.trials_agree = result.trials_agree && trial.rank == result.rank;
    }
    return result;
}

RankResult generic_rank(const Graph& g, SparsityParams p, int trials, std::uint64_t seed) {
    return rank_of_edge_rows(g, g.edges(), p, trials, seed);
}

bool is_independent(const Graph& g, const EdgeSubset& f, SparsityParams p,
                    int trials, std::uint64_t seed) {
    if (f.empty()) return true;
    const RankResult result = rank_of_edge_rows(g, f, p, trials, seed);
    return result.rank == static_cast<int>(f.size());
}

bool is_rigid(const Graph& g, SparsityParams p, int trials, std::uint64_t seed) {
    const int n = g.vertex_count();
    if (n <= p.d + 1) {
        return g.edge_count() == static_cast<int>(binomial(n, 2));
    }
    const RankResult result = generic_rank(g, p, trials, seed);
    return result.rank == p.bound(n);
}

MaxwellReport maxwell_check(const Graph& g, const EdgeSubset& f, SparsityParams p,
                            int trials, std::uint64_t seed) {
    MaxwellReport report;
    report.independent = is_independent(g, f, p, trials, seed);
    if (report.independent) {
        const Graph spanned = subgraph_with_edges(g, f);
        report.sparsity = is_d_sparse(spanned, p);
        report.pass = report.sparsity.is_sparse;
    }
    return report;
}

} // namespace rigidity
