#include "rigidity/json_io.hpp"

namespace rigidity {

OrderedJson json_of_edge(const Edge& e) { return OrderedJson::array({e.u, e.v}); }

OrderedJson json_of_edges(const std::vector<Edge>& es) {
    OrderedJson out = OrderedJson::array();
    for (const Edge& e : es) out.push_back(json_of_edge(e));
    return out;
}

OrderedJson json_of_graph(const Graph& g) {
    OrderedJson out;
    out["n"] = g.vertex_count();
    out["edges"] = json_of_edges(g.edges());
    return out;
}

OrderedJson json_of_verdict(const SparsityVerdict& v) {
    OrderedJson out;
    out["sparse"] = v.is_sparse;
    out["witness"] = v.witness ? OrderedJson(*v.witness) : OrderedJson(nullptr);
    return out;
}

OrderedJson json_of_maximal(const MaximalSubgraphResult& r) {
    OrderedJson out;
    out["kept"] = json_of_edges(r.kept);
    out["rejected"] = json_of_edges(r.rejected);
    out["order"] = json_of_edges(r.insertion_order);
    out["kept_count"] = static_cast<int>(r.kept.size());
    return out;
}

OrderedJson json_of_components(const std::vector<CriticalComponent>& cs) {
    OrderedJson list = OrderedJson::array();
    for (const CriticalComponent& c : cs) {
        OrderedJson item;
        item["vertices"] = c.vertices;
        item["edges"] = static_cast<int>(c.edges.size());
        list.push_back(std::move(item));
    }
    OrderedJson out;
    out["components"] = std::move(list);
    return out;
}

OrderedJson json_of_intersections(const IntersectionReport& r) {
    OrderedJson pairs = OrderedJson::array();
    for (const IntersectionCheck& c : r.pairs) {
        OrderedJson item;
        item["first"] = c.first;
        item["second"] = c.second;
        item["intersection"] = c.intersection;
        item["induced"] = c.induced;
        item["pass"] = c.pass;
        pairs.push_back(std::move(item));
    }
    OrderedJson out;
    out["pairs"] = std::move(pairs);
    out["pass"] = r.pass;
    return out;
}

OrderedJson json_of_cover_report(const Cover& cover, SparsityParams p,
                                 const std::vector<CoverReport>& reports) {
    OrderedJson out;
    bool pass = true;
    out["thin"] = cover_thinness(cover);
    OrderedJson hinge_list = OrderedJson::array();
    for (int k = 1; k <= p.d; ++k) {
        for (const Hinge& h : hinges(cover, k)) {
            OrderedJson item;
            item["k"] = k;
            item["vertices"] = h.vertices;
            item["mult"] = h.multiplicity;
            item["closed"] = h.closed;
            hinge_list.push_back(std::move(item));
        }
    }
    out["hinges"] = std::move(hinge_list);
    const HingeAggregates agg = aggregates(cover, p);
    out["a"] = agg.a;
    out["theta"] = agg.theta;
    OrderedJson checks = OrderedJson::array();
    OrderedJson exempt = OrderedJson::array();
    bool applicable = true;
    bool vacuous = false;
    for (const CoverReport& r : reports) {
        for (const CheckLine& line : r.checks) {
            OrderedJson item;
            item["name"] = line.name;
            item["lhs"] = line.lhs;
            item["rhs"] = line.rhs;
            item["pass"] = line.pass;
            checks.push_back(std::move(item));
        }
        for (const VertexSet& w : r.exempt) exempt.push_back(w);
        applicable = applicable && r.applicable;
        vacuous = vacuous || r.vacuous;
        pass = pass && r.pass;
    }
    out["checks"] = std::move(checks);

    OrderedJson sets = OrderedJson::array();
    for (const VertexSet& s : cover.sets) sets.push_back(s);
    out["sets"] = std::move(sets);
    out["exempt"] = std::move(exempt);
    out["applicable"] = applicable;
    out["vacuous"] = vacuous;
    out["pass"] = pass;
    return out;
}

OrderedJson json_of_rank(const RankResult& r) {
    OrderedJson out;
    out["rank"] = r.rank;
    out["d"] = r.d;
    out["prime"] = std::to_string(r.prime);
    OrderedJson trials = OrderedJson::array();
    for (const RankTrial& t : r.trials) {
        OrderedJson item;
        item["seed"] = t.seed;
        item["rank"] = t.rank;
        trials.push_back(std::move(item));
    }
    out["trials"] = std::move(trials);
    return out;
}

OrderedJson json_of_bounds(const BoundReport& r) {
    OrderedJson out;
    out["rank"] = r.rank.rank;
    out["samples"] = r.sample_sizes;
    out["min"] = r.min_size;
    OrderedJson violations = OrderedJson::array();
    for (const BoundViolation& v : r.violations) {
        OrderedJson item;
        item["seed"] = v.seed;
        item["order"] = json_of_edges(v.order);
        violations.push_back(std::move(item));
    }
    out["violations"] = std::move(violations);
    return out;
}

OrderedJson json_of_maxwell(const MaxwellReport& r) {
    OrderedJson out;
    out["independent"] = r.independent;
    out["sparse"] = r.sparsity.is_sparse;
    out["witness"] =
        r.sparsity.witness ? OrderedJson(*r.sparsity.witness) : OrderedJson(nullptr);
    out["pass"] = r.pass;
    return out;
}

OrderedJson json_of_sd(const SdEstimate& e) {
    OrderedJson out;
    out["value"] = e.value;
    out["exact"] = e.exact;
    out["kept"] = json_of_edges(e.witness.kept);
    out["order"] = json_of_edges(e.witness.insertion_order);
    return out;
}

OrderedJson json_of_sdstar(const SdStarResult& r) {
    OrderedJson out;
    out["value"] = r.value;
    out["added"] = json_of_edges(r.added);
    out["kept"] = json_of_edges(r.witness.kept);
    return out;
}

OrderedJson json_of_growth(const GrowthReport& r) {
    OrderedJson out;
    out["base_rank"] = r.base_rank;
    OrderedJson checks = OrderedJson::array();
    for (const GrowthCheck& c : r.checks) {
        OrderedJson item;
        item["added"] = json_of_edge(c.added);
        item["rank"] = c.rank;
        item["pass"] = c.pass;
        checks.push_back(std::move(item));
    }
    out["checks"] = std::move(checks);
    out["pass"] = r.pass;
    return out;
}

OrderedJson json_of_hunt(const HuntReport& r) {
    OrderedJson out;
    out["d"] = r.d;
    out["graphs_tested"] = r.graphs_tested;
    OrderedJson candidates = OrderedJson::array();
    for (const HuntCandidate& c : r.candidates) {
        OrderedJson item;
        item["graph_seed"] = c.graph_seed;
        item["graph"] = json_of_graph(c.graph);
        item["first_rank"] = c.first_rank;
        item["verified_rank"] = c.verified_rank;
        item["sample_sizes"] = c.sample_sizes;
        candidates.push_back(std::move(item));
    }
    out["candidates"] = std::move(candidates);
    return out;
}

std::string dump_json_line(const OrderedJson& j) { return j.dump() + "\n"; }
std::string dump_json_pretty(const OrderedJson& j) { return j.dump(2) + "\n"; }

} // namespace rigidity
