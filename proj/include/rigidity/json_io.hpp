#pragma once

#include <string>

#include "json.hpp"

#include "rigidity/bounds.hpp"
#include "rigidity/covers.hpp"

namespace rigidity {

using OrderedJson = nlohmann::ordered_json;

// Every emitter keeps a fixed key order (insertion order of an ordered
// document), so a fixed seed reproduces byte-identical output.

OrderedJson json_of_edge(const Edge& e);                 // [u, v]
OrderedJson json_of_edges(const std::vector<Edge>& es);  // [[u, v], ...]
OrderedJson json_of_graph(const Graph& g);               // {"n":..., "edges":[...]}

// {"sparse": bool, "witness": [ints] | null}
OrderedJson json_of_verdict(const SparsityVerdict& v);

// {"kept": [...], "rejected": [...], "order": [...], "kept_count": int}
OrderedJson json_of_maximal(const MaximalSubgraphResult& r);

// {"components": [{"vertices": [...], "edges": m}]} with m an edge count
OrderedJson json_of_components(const std::vector<CriticalComponent>& cs);

// {"pairs": [{"first","second","intersection","induced","pass"}], "pass": bool}
OrderedJson json_of_intersections(const IntersectionReport& r);

// Pinned keys first (thin, hinges, a, theta, checks), then the documented
// extras (sets, exempt, applicable, vacuous, pass). Structural fields come
// from the cover itself (hinge closedness judged in cover.graph); the check
// lines of every supplied report are merged in order.
OrderedJson json_of_cover_report(const Cover& cover, SparsityParams p,
                                 const std::vector<CoverReport>& reports);

// {"rank":int,"d":int,"prime":str,"trials":[{"seed":int,"rank":int}]}
OrderedJson json_of_rank(const RankResult& r);

// {"rank":int,"samples":[int],"min":int,"violations":[{"seed":int,"order":[...]}]}
OrderedJson json_of_bounds(const BoundReport& r);

// {"independent": bool, "sparse": bool, "witness": ..., "pass": bool}
OrderedJson json_of_maxwell(const MaxwellReport& r);

// {"value": int, "exact": bool, "kept": [...], "order": [...]}
OrderedJson json_of_sd(const SdEstimate& e);

// {"value": int, "added": [...], "kept": [...]}
OrderedJson json_of_sdstar(const SdStarResult& r);

// {"base_rank": int, "checks": [{"added":[u,v],"rank":int,"pass":bool}], "pass": bool}
OrderedJson json_of_growth(const GrowthReport& r);

// {"d": int, "graphs_tested": int, "candidates": [...]}
OrderedJson json_of_hunt(const HuntReport& r);

// json: single line + newline. text: pretty-printed, 2-space indent + newline.
std::string dump_json_line(const OrderedJson& j);
std::string dump_json_pretty(const OrderedJson& j);

} // namespace rigidity
