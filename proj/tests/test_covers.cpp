#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "rigidity/covers.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/util.hpp"
#include "rigidity/verify.hpp"

using namespace rigidity;

namespace {

// Two K5-minus-an-edge blocks sharing the edge (0,1): the 17-edge maximal
// d=3-sparse subgraph of double-K5-plus under a shared-pair-first order.
Graph two_block_fixture() {
    const Graph plus = example_double_k5_plus();
    std::vector<Edge> order{make_edge(0, 1)};
    for (const Edge& e : plus.edges()) {
        if (e != make_edge(0, 1)) order.push_back(e);
    }
    const SparsityParams p3(3);
    return subgraph_with_edges(plus, maximal_sparse_subgraph(plus, p3, order).kept);
}

const CheckLine* find_check(const CoverReport& rep, const std::string& name) {
    for (const CheckLine& line : rep.checks) {
        if (line.name == name) return &line;
    }
    return nullptr;
}

bool has_check_prefix(const CoverReport& rep, const std::string& prefix) {
    for (const CheckLine& line : rep.checks) {
        if (line.name.rfind(prefix, 0) == 0) return true;
    }
    return false;
}

} // namespace

TEST_CASE("critical cover of the two-block fixture") {
    const SparsityParams p3(3);
    const Graph h = two_block_fixture();
    const Cover c = critical_cover_of_sparse(h, p3);

    REQUIRE(c.sets.size() == 2);
    CHECK(c.sets[0].size() == 5);
    CHECK(c.sets[1].size() == 5);
    CHECK(set_intersection(c.sets[0], c.sets[1]) == VertexSet{0, 1});
    CHECK(cover_thinness(c) == 2);
    CHECK(covers_graph(c, h));
    REQUIRE(c.set_edges.size() == 2);
    CHECK(c.set_edges[0].size() == 9);
    CHECK(c.set_edges[1].size() == 9);
}

TEST_CASE("hinges of the two-block fixture") {
    const SparsityParams p3(3);
    const Cover c = critical_cover_of_sparse(two_block_fixture(), p3);

    const auto h1 = hinges(c, 1);
    REQUIRE(h1.size() == 2);
    CHECK(h1[0].vertices == VertexSet{0});
    CHECK(h1[1].vertices == VertexSet{1});
    CHECK(h1[0].multiplicity == 2);
    CHECK(h1[0].closed);  // singletons are trivially complete

    const auto h2 = hinges(c, 2);
    REQUIRE(h2.size() == 1);
    CHECK(h2[0].vertices == VertexSet{0, 1});
    CHECK(h2[0].multiplicity == 2);
    CHECK(h2[0].closed);  // the shared pair is an edge of the host

    CHECK(hinges(c, 3).empty());
    CHECK_THROWS_AS(hinges(c, 0), InputError);
}

TEST_CASE("aggregates of the two-block fixture") {
    const SparsityParams p3(3);
    const Cover c = critical_cover_of_sparse(two_block_fixture(), p3);
    const HingeAggregates agg = aggregates(c, p3);

    CHECK_FALSE(agg.degenerate);
    CHECK(agg.a == std::vector<long long>{1, 2, 1, 0});
    REQUIRE(agg.theta.size() == 2);
    CHECK(agg.theta[0] == std::vector<int>{1, 2, 1, 0});
    CHECK(agg.theta[1] == std::vector<int>{1, 2, 1, 0});
}

TEST_CASE("a single-component cover is degenerate and hinge-free") {
    const SparsityParams p3(3);
    const Cover c = critical_cover_of_sparse(example_double_k5().graph, p3);
    REQUIRE(c.sets.size() == 1);
    CHECK(cover_thinness(c) == 0);
    const HingeAggregates agg = aggregates(c, p3);
    CHECK(agg.degenerate);
    CHECK(agg.a == std::vector<long long>{0, 0, 0, 0});
    CHECK(hinges(c, 1).empty());
}

TEST_CASE("prefixedhinge lines on the two-block fixture") {
    const SparsityParams p3(3);
    const CoverReport rep = check_prefixedhinge(two_block_fixture(), p3);
    CHECK(rep.applicable);
    CHECK(rep.pass);
    CHECK(rep.exempt.empty());

    // W = {} (k=0): 3*2 - 1 < C(4,2)*1
    const CheckLine* empty_hinge = find_check(rep, "prefixedhinge[k=0,W={}]");
    REQUIRE(empty_hinge != nullptr);
    CHECK(empty_hinge->lhs == 5);
    CHECK(empty_hinge->rhs == 6);

    // W = {0} (k=1): 2*1 - 0 < C(3,2)*1
    const CheckLine* v0 = find_check(rep, "prefixedhinge[k=1,W={0}]");
    REQUIRE(v0 != nullptr);
    CHECK(v0->lhs == 2);
    CHECK(v0->rhs == 3);

    // W = {0,1} (k=2): 0 < C(2,2)*1
    const CheckLine* pair = find_check(rep, "prefixedhinge[k=2,W={0,1}]");
    REQUIRE(pair != nullptr);
    CHECK(pair->lhs == 0);
    CHECK(pair->rhs == 1);

    CHECK(rep.checks.size() == 4);  // {}, {0}, {1}, {0,1}
}

TEST_CASE("fixedhinge lines on the two-block fixture") {
    const SparsityParams p3(3);
    const CoverReport rep = check_fixedhinge(two_block_fixture(), p3);
    CHECK(rep.applicable);
    CHECK(rep.pass);

    struct Expected {
        const char* name;
        long long lhs;
        long long rhs;
    };
    const Expected table[] = {
        {"fixedhinge(a)[k=0]", 5, 6},  {"fixedhinge(a)[k=1]", 4, 6},
        {"fixedhinge(b)[k=0]", 5, 6},  {"fixedhinge(b)[k=1]", 2, 4},
        {"fixedhinge(c)[k=0]", 18, 24}, {"fixedhinge(c)[k=1]", 6, 12},
    };
    for (const Expected& want : table) {
        const CheckLine* line = find_check(rep, want.name);
        REQUIRE_MESSAGE(line != nullptr, want.name);
        CHECK_MESSAGE(line->lhs == want.lhs, want.name);
        CHECK_MESSAGE(line->rhs == want.rhs, want.name);
        CHECK(line->pass);
    }
    CHECK(rep.checks.size() == 6);
}

TEST_CASE("boundedhinges lines on the two-block fixture") {
    const SparsityParams p3(3);
    const CoverReport rep = check_boundedhinges(two_block_fixture(), p3);
    CHECK(rep.applicable);
    CHECK(rep.pass);
    CHECK_FALSE(rep.vacuous);

    const CheckLine* t1 = find_check(rep, "boundedhinges(theta1)");
    REQUIRE(t1 != nullptr);
    CHECK(t1->lhs == 2);  // min_i theta_1
    CHECK(t1->rhs == 5);  // 2d-1

    const CheckLine* t2 = find_check(rep, "boundedhinges(theta2)");
    REQUIRE(t2 != nullptr);
    CHECK(t2->lhs == 1);
    CHECK(t2->rhs == 3);  // (d-2)(d+1)-1

    const CheckLine* td = find_check(rep, "boundedhinges(theta_dminus1)");
    REQUIRE(td != nullptr);
    CHECK(td->lhs == 1);
    CHECK(td->rhs == 3);  // d
}

TEST_CASE("fixedhinge(a) lines appear only for hinge levels that exist") {
    // Two K6-minus-an-edge blocks sharing a single vertex at d=4: the only
    // hinge is that vertex, so a = [1,1,0,0,0] and level k=2 of (a) has no
    // content (0 < 0 would be falsely strict).
    const SparsityParams p4(4);
    std::vector<Edge> edges;
    const auto add_block = [&edges](const std::vector<int>& verts) {
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                // omit the edge between the last two vertices of the block
                if (i + 2 == verts.size() && j + 1 == verts.size()) continue;
                edges.push_back(make_edge(verts[i], verts[j]));
            }
        }
    };
    add_block({0, 1, 2, 3, 4, 5});
    add_block({5, 6, 7, 8, 9, 10});
    std::sort(edges.begin(), edges.end());
    const Graph h(11, edges);
    REQUIRE(is_d_sparse(h, p4).is_sparse);

    const Cover c = critical_cover_of_sparse(h, p4);
    REQUIRE(c.sets.size() == 2);
    const HingeAggregates agg = aggregates(c, p4);
    CHECK(agg.a == std::vector<long long>{1, 1, 0, 0, 0});

    const CoverReport rep = check_fixedhinge(h, p4);
    CHECK(rep.applicable);
    CHECK(rep.pass);
    CHECK(find_check(rep, "fixedhinge(a)[k=0]") != nullptr);
    CHECK(find_check(rep, "fixedhinge(a)[k=1]") != nullptr);
    CHECK(find_check(rep, "fixedhinge(a)[k=2]") == nullptr);  // a_2 = 0
    CHECK(find_check(rep, "fixedhinge(b)[k=2]") != nullptr);  // (b),(c) stay
    CHECK(find_check(rep, "fixedhinge(c)[k=2]") != nullptr);
}

TEST_CASE("two-vertex components exempt their hinges and mark boundedhinges vacuous") {
    // d=2: a K4-minus-an-edge block {0,1,2,3} plus the pendant edge 3-4.
    // The pendant is a two-vertex component; vertex 3 is a hinge contained in
    // it, so prefixedhinge skips (exempts) that hinge.
    const SparsityParams p2(2);
    const Graph h(5, {make_edge(0, 1), make_edge(0, 2), make_edge(0, 3), make_edge(1, 2),
                      make_edge(1, 3), make_edge(3, 4)});
    REQUIRE(is_d_sparse(h, p2).is_sparse);
    const Cover c = critical_cover_of_sparse(h, p2);
    REQUIRE(c.sets.size() == 2);

    // both hinges are exempt: the empty hinge lies in every set, {3} in the
    // pendant, and the pendant component has only two vertices
    const CoverReport pre = check_prefixedhinge(h, p2);
    REQUIRE(pre.exempt.size() == 2);
    CHECK(pre.exempt[0] == VertexSet{});
    CHECK(pre.exempt[1] == VertexSet{3});
    CHECK(pre.checks.empty());
    CHECK(pre.pass);

    const CoverReport fix = check_fixedhinge(h, p2);
    CHECK_FALSE(fix.applicable);  // a component smaller than d+2 exists
    CHECK(fix.checks.empty());
    CHECK(fix.pass);  // not-applicable reports never fail

    const CoverReport bnd = check_boundedhinges(h, p2);
    CHECK(bnd.vacuous);
    CHECK(bnd.pass);
}

TEST_CASE("two_hinge_edges finds the shared edge of the two-block fixture") {
    const SparsityParams p3(3);
    const Cover c = critical_cover_of_sparse(two_block_fixture(), p3);
    CHECK(two_hinge_edges(c, 0) == EdgeSubset{make_edge(0, 1)});
    CHECK(two_hinge_edges(c, 1) == EdgeSubset{make_edge(0, 1)});
    CHECK_THROWS_AS(two_hinge_edges(c, 2), InputError);
}

TEST_CASE("critical_cover validates the pair (g, h)") {
    const SparsityParams p3(3);
    const Graph g = example_double_k5().graph;

    // kept edge that is not an edge of g
    MaximalSubgraphResult fake;
    fake.kept = {make_edge(0, 1)};
    CHECK_THROWS_AS(critical_cover(g, fake, p3), InputError);

    // kept set that is not d-sparse
    const Graph k5 = complete_graph(5);
    MaximalSubgraphResult nonsparse;
    nonsparse.kept = k5.edges();
    CHECK_THROWS_AS(critical_cover(k5, nonsparse, p3), PreconditionError);

    // the real thing: cover of g judged against g itself
    const MaximalSubgraphResult h = maximal_sparse_subgraph(g, p3);
    const Cover c = critical_cover(g, h, p3);
    CHECK(covers_graph(c, g));
}

TEST_CASE("closedness is judged in the host graph of the cover") {
    // double-K5-plus: the 17-edge subgraph drops one edge inside each block,
    // so some pair of vertices is complete in g but not in h. Build both
    // covers and check they agree here (the shared 2-hinge {0,1} is an edge
    // of both hosts); then check a cover against a host missing that edge.
    const SparsityParams p3(3);
    const Graph plus = example_double_k5_plus();
    std::vector<Edge> order{make_edge(0, 1)};
    for (const Edge& e : plus.edges()) {
        if (e != make_edge(0, 1)) order.push_back(e);
    }
    const MaximalSubgraphResult h = maximal_sparse_subgraph(plus, p3, order);
    const Cover in_g = critical_cover(plus, h, p3);
    CHECK(in_g.graph.edge_count() == 19);
    const auto h2 = hinges(in_g, 2);
    REQUIRE(h2.size() == 1);
    CHECK(h2[0].closed);
}

TEST_CASE("multiplicity bookkeeping is consistent across hinge levels") {
    // For every k: sum over set pairs of C(|Xi \cap Xj|, k) equals
    // sum over k-hinges of C(multiplicity, 2).
    for (int i = 0; i < 12; ++i) {
        const int d = 1 + i % 5;
        SparsityParams p(d);
        const Graph h = random_qualifying_sparse_graph(p, 70000 + static_cast<std::uint64_t>(i));
        const Cover c = critical_cover_of_sparse(h, p);
        for (int k = 1; k <= d; ++k) {
            long long pairs_count = 0;
            for (std::size_t a = 0; a < c.sets.size(); ++a) {
                for (std::size_t b = a + 1; b < c.sets.size(); ++b) {
                    const auto shared = set_intersection(c.sets[a], c.sets[b]);
                    pairs_count += binomial(static_cast<int>(shared.size()), k);
                }
            }
            long long hinge_count = 0;
            for (const Hinge& w : hinges(c, k)) {
                hinge_count += binomial(w.multiplicity, 2);
            }
            CHECK(pairs_count == hinge_count);
        }
    }
}

TEST_CASE("generated qualifying covers satisfy every inequality family") {
    for (int i = 0; i < 10; ++i) {
        const int d = 1 + i % 5;
        SparsityParams p(d);
        const Graph h = random_qualifying_sparse_graph(p, 80000 + static_cast<std::uint64_t>(i));
        REQUIRE(is_d_sparse(h, p).is_sparse);
        const Cover c = critical_cover_of_sparse(h, p);
        REQUIRE(c.sets.size() >= 2);
        for (const VertexSet& s : c.sets) {
            CHECK(static_cast<int>(s.size()) >= d + 2);
        }
        CHECK(cover_thinness(c) <= d - 1);
        CHECK(hinges(c, d).empty());
        if (d >= 2) {
            for (const Hinge& w : hinges(c, d - 1)) CHECK(w.closed);
        }
        const CoverReport pre = check_prefixedhinge(h, p);
        CHECK(pre.applicable);
        CHECK(pre.pass);
        CHECK(pre.exempt.empty());
        const CoverReport fix = check_fixedhinge(h, p);
        CHECK(fix.applicable);
        CHECK(fix.pass);
        const CoverReport bnd = check_boundedhinges(h, p);
        CHECK(bnd.applicable);
        CHECK(bnd.pass);
        if (d == 1) {
            // no levels k <= d-2 exist: (b)/(c) families are empty at d=1
            CHECK_FALSE(has_check_prefix(fix, "fixedhinge(b)"));
        }
    }
}
