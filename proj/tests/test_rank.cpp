#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <vector>

#include "rigidity/errors.hpp"
#include "rigidity/fp61.hpp"
#include "rigidity/rank.hpp"
#include "rigidity/rng.hpp"
#include "rigidity/util.hpp"

using namespace rigidity;

TEST_CASE("field arithmetic modulo 2^61 - 1") {
    using namespace fp61;
    CHECK(add(prime - 1, 1) == 0);
    CHECK(add(prime - 1, 2) == 1);
    CHECK(sub(0, 1) == prime - 1);
    CHECK(mul(prime - 1, prime - 1) == 1);  // (-1)*(-1)
    const std::uint64_t x = 123456789123456789ULL % prime;
    CHECK(mul(x, inv(x)) == 1);
    CHECK(pow(3, prime - 1) == 1);  // Fermat
}

TEST_CASE("random coordinates are deterministic, in range, and vertex-major") {
    const SparsityParams p3(3);
    const CoordinateAssignment a = random_coordinates(6, p3, 99);
    const CoordinateAssignment b = random_coordinates(6, p3, 99);
    CHECK(a.coords == b.coords);
    CHECK(a.dimension == 3);
    CHECK(a.coords.size() == 18);
    for (const std::uint64_t c : a.coords) CHECK(c < fp61::prime);
    CHECK(a.at(2, 1) == a.coords[2 * 3 + 1]);
    const CoordinateAssignment c = random_coordinates(6, p3, 100);
    CHECK(a.coords != c.coords);
}

TEST_CASE("rigidity matrix row structure for a single edge") {
    // one edge (2,5) on 7 vertices: the row holds p(2)-p(5) in vertex 2's
    // block, the negation in vertex 5's block, zero elsewhere
    const SparsityParams p2(2);
    const Graph g(7, {make_edge(2, 5)});
    const CoordinateAssignment coords = random_coordinates(7, p2, 7);
    const FieldMatrix m = build_rigidity_matrix(g, p2, coords);
    REQUIRE(m.rows == 1);
    REQUIRE(m.cols == 14);
    for (int axis = 0; axis < 2; ++axis) {
        const std::uint64_t diff = fp61::sub(coords.at(2, axis), coords.at(5, axis));
        CHECK(m.at(0, 2 * 2 + axis) == diff);
        CHECK(m.at(0, 5 * 2 + axis) == fp61::sub(0, diff));
    }
    for (int col = 0; col < 14; ++col) {
        if (col / 2 == 2 || col / 2 == 5) continue;
        CHECK(m.at(0, col) == 0);
    }
}

TEST_CASE("restricted-row matrix keeps the requested edges in order") {
    const SparsityParams p2(2);
    const Graph g = complete_graph(4);
    const EdgeSubset rows{make_edge(1, 3), make_edge(0, 2)};
    const FieldMatrix m = build_rigidity_matrix(g, rows, p2, random_coordinates(4, p2, 3));
    CHECK(m.rows == 2);
    CHECK(m.cols == 8);
    CHECK_THROWS_AS(
        build_rigidity_matrix(g, EdgeSubset{make_edge(0, 5)}, p2, random_coordinates(4, p2, 3)),
        InputError);
}

TEST_CASE("matrix_rank on hand-built matrices") {
    FieldMatrix id;
    id.rows = 3;
    id.cols = 3;
    id.entries = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    CHECK(matrix_rank(id) == 3);

    FieldMatrix dep;
    dep.rows = 3;
    dep.cols = 3;
    // third row = first + second
    dep.entries = {1, 2, 3, 4, 5, 6, 5, 7, 9};
    CHECK(matrix_rank(dep) == 2);

    FieldMatrix zero;
    zero.rows = 2;
    zero.cols = 4;
    zero.entries.assign(8, 0);
    CHECK(matrix_rank(zero) == 0);

    // wraparound: a row of (p-1) entries is -1 * ones
    FieldMatrix wrap;
    wrap.rows = 2;
    wrap.cols = 2;
    wrap.entries = {1, 1, fp61::prime - 1, fp61::prime - 1};
    CHECK(matrix_rank(wrap) == 1);
}

TEST_CASE("generic ranks of the named examples") {
    const SparsityParams p3(3);
    CHECK(generic_rank(complete_graph(5), p3).rank == 9);
    CHECK(generic_rank(example_double_k5().graph, p3).rank == 17);
    CHECK(generic_rank(example_double_k5_plus(), p3).rank == 17);  // adding (0,1) adds nothing
    CHECK(generic_rank(example_k5_flower(), p3).rank == 89);
}

TEST_CASE("complete graphs: K_{d+1} is independent, K_{d+2} is one short") {
    for (int d = 1; d <= 5; ++d) {
        SparsityParams p(d);
        CHECK(generic_rank(complete_graph(d + 1), p).rank == binomial(d + 1, 2));
        CHECK(generic_rank(complete_graph(d + 2), p).rank == binomial(d + 2, 2) - 1);
        CHECK(is_independent(complete_graph(d + 1), complete_graph(d + 1).edges(), p));
        CHECK_FALSE(is_independent(complete_graph(d + 2), complete_graph(d + 2).edges(), p));
    }
}

TEST_CASE("every single-edge deletion of the circuit K_{d+2} is independent") {
    for (int d = 1; d <= 4; ++d) {
        SparsityParams p(d);
        const Graph circuit = complete_graph(d + 2);
        for (std::size_t skip = 0; skip < circuit.edges().size(); ++skip) {
            EdgeSubset rows;
            for (std::size_t i = 0; i < circuit.edges().size(); ++i) {
                if (i != skip) rows.push_back(circuit.edges()[i]);
            }
            CHECK(is_independent(circuit, rows, p, 3,
                                 9000 + static_cast<std::uint64_t>(d) * 100 + skip));
        }
    }
}

TEST_CASE("rank never decreases when an edge is added") {
    for (int i = 0; i < 15; ++i) {
        const int d = 1 + i % 4;
        SparsityParams p(d);
        const Graph g = random_graph(7, 0.5, 1000 + static_cast<std::uint64_t>(i));
        if (non_edges(g).empty()) continue;
        const int before = generic_rank(g, p, 3, 5).rank;
        const Graph bigger = g.with_edge(non_edges(g)[0]);
        const int after = generic_rank(bigger, p, 3, 5).rank;
        CHECK(after >= before);
        CHECK(after <= before + 1);
    }
}

TEST_CASE("rank is invariant under vertex relabeling") {
    for (int i = 0; i < 10; ++i) {
        const int d = 2 + i % 3;
        SparsityParams p(d);
        const Graph g = random_graph(8, 0.5, 2000 + static_cast<std::uint64_t>(i));
        std::vector<int> perm(8);
        for (int v = 0; v < 8; ++v) perm[v] = v;
        Xoshiro256 rng(3000 + static_cast<std::uint64_t>(i));
        for (int v = 7; v > 0; --v) {
            std::swap(perm[v], perm[rng.next() % (v + 1)]);
        }
        std::vector<Edge> relabeled;
        for (const Edge& e : g.edges()) relabeled.push_back(make_edge(perm[e.u], perm[e.v]));
        const Graph h(8, relabeled);
        CHECK(generic_rank(g, p, 3, 11).rank == generic_rank(h, p, 3, 17).rank);
    }
}

TEST_CASE("rank is stable across seeds") {
    const Graph g = random_graph(9, 0.6, 77);
    const SparsityParams p3(3);
    const int reference = generic_rank(g, p3, 3, 0).rank;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        CHECK(generic_rank(g, p3, 3, seed).rank == reference);
    }
}

TEST_CASE("rank results are deterministic and carry per-trial seeds") {
    const Graph g = example_double_k5().graph;
    const SparsityParams p3(3);
    const RankResult a = generic_rank(g, p3, 4, 123);
    const RankResult b = generic_rank(g, p3, 4, 123);
    REQUIRE(a.trials.size() == 4);
    CHECK(a.d == 3);
    CHECK(a.prime == fp61::prime);
    CHECK(a.certified_lower_bound);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(a.trials[i].seed == b.trials[i].seed);
        CHECK(a.trials[i].rank == b.trials[i].rank);
        CHECK(a.trials[i].rank <= a.rank);
    }
    CHECK(a.trials_agree == std::all_of(a.trials.begin(), a.trials.end(), [&](const RankTrial& t) {
              return t.rank == a.rank;
          }));
    CHECK_THROWS_AS(generic_rank(g, p3, 0, 1), InputError);
}

TEST_CASE("rank_of_edge_rows restricts to the chosen rows") {
    const SparsityParams p3(3);
    const Graph k5 = complete_graph(5);
    CHECK(rank_of_edge_rows(k5, {}, p3).rank == 0);
    CHECK(rank_of_edge_rows(k5, k5.edges(), p3).rank == 9);
    EdgeSubset nine(k5.edges().begin(), k5.edges().begin() + 9);
    CHECK(rank_of_edge_rows(k5, nine, p3).rank == 9);
}

TEST_CASE("is_independent conventions") {
    const SparsityParams p3(3);
    const Graph k5 = complete_graph(5);
    CHECK(is_independent(k5, {}, p3));  // empty set
    EdgeSubset nine(k5.edges().begin(), k5.edges().begin() + 9);
    CHECK(is_independent(k5, nine, p3));
    CHECK_FALSE(is_independent(k5, k5.edges(), p3));
}

TEST_CASE("is_rigid conventions") {
    const SparsityParams p3(3);
    // fewer than d+2 vertices: rigid exactly when complete
    CHECK(is_rigid(complete_graph(3), p3));
    CHECK(is_rigid(complete_graph(4), p3));
    CHECK_FALSE(is_rigid(path_graph(4), p3));
    // d+2 and beyond: rank must reach d|V| - d(d+1)/2
    CHECK(is_rigid(complete_graph(5), p3));
    CHECK(is_rigid(complete_graph(6), p3));
    CHECK_FALSE(is_rigid(example_double_k5().graph, p3));  // rank 17 < 18
    CHECK_FALSE(is_rigid(path_graph(6), p3));
    CHECK(is_rigid(complete_graph(4), SparsityParams(2)));
}

TEST_CASE("maxwell_check: independence implies a sparse span") {
    const SparsityParams p3(3);
    const Graph dk5 = example_double_k5().graph;

    // double-K5 is a rigidity circuit: the full edge set is dependent
    // (rank 17 on 18 rows), and pass holds vacuously
    const MaxwellReport circuit = maxwell_check(dk5, dk5.edges(), p3);
    CHECK_FALSE(circuit.independent);
    CHECK(circuit.pass);

    // ... so every single-edge deletion is independent and spans sparsely
    EdgeSubset seventeen(dk5.edges().begin(), dk5.edges().end() - 1);
    const MaxwellReport del = maxwell_check(dk5, seventeen, p3);
    CHECK(del.independent);
    CHECK(del.sparsity.is_sparse);
    CHECK(del.pass);

    const Graph k5 = complete_graph(5);
    const MaxwellReport dep = maxwell_check(k5, k5.edges(), p3);
    CHECK_FALSE(dep.independent);
    CHECK(dep.pass);

    for (int i = 0; i < 10; ++i) {
        const int d = 1 + i % 5;
        SparsityParams p(d);
        const Graph g = random_graph(d + 4, 0.7, 5000 + static_cast<std::uint64_t>(i));
        const MaxwellReport rep = maxwell_check(g, g.edges(), p, 3,
                                                static_cast<std::uint64_t>(i));
        CHECK(rep.pass);
    }
}

TEST_CASE("rank agrees between the full and row-restricted builders") {
    for (int i = 0; i < 8; ++i) {
        const int d = 1 + i % 4;
        SparsityParams p(d);
        const Graph g = random_graph(7, 0.6, 6000 + static_cast<std::uint64_t>(i));
        CHECK(generic_rank(g, p, 3, 42).rank == rank_of_edge_rows(g, g.edges(), p, 3, 42).rank);
    }
}
