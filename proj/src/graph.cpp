#include "rigidity/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "rigidity/errors.hpp"
#include "rigidity/rng.hpp"

namespace rigidity {

Edge make_edge(int u, int v) {
    if (u == v) {
        throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         "): self-loops are not allowed");
    }
    if (u > v) std::swap(u, v);
    return Edge{u, v};
}

Graph::Graph(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw InputError("vertex count must be nonnegative");
    adjacency_.resize(vertex_count);
}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : Graph(vertex_count) {
    for (const Edge& e : edges) {
        if (e.u >= e.v) {
            throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                             "): endpoints must satisfy u < v");
        }
        if (e.u < 0 || e.v >= vertex_count) {
            throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                             "): endpoint out of range for " + std::to_string(vertex_count) +
                             " vertices");
        }
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1]) {
            throw InputError("edge (" + std::to_string(edges[i].u) + ", " +
                             std::to_string(edges[i].v) + "): duplicate edge");
        }
    }
    edges_ = std::move(edges);
    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count_) throw InputError("vertex index out of range");
    return adjacency_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) return false;
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

Graph Graph::with_edge(Edge e) const {
    if (has_edge(e.u, e.v)) {
        throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         "): already present");
    }
    std::vector<Edge> edges = edges_;
    edges.push_back(make_edge(e.u, e.v));
    return Graph(vertex_count_, std::move(edges));
}

void validate_vertex_set(const Graph& g, const VertexSet& x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0 || x[i] >= g.vertex_count()) {
            throw InputError("vertex set entry " + std::to_string(x[i]) + " out of range");
        }
        if (i > 0 && x[i] <= x[i - 1]) {
            throw InputError("vertex set must be sorted and duplicate-free");
        }
    }
}

long long induced_edge_count(const Graph& g, const VertexSet& x) {
    validate_vertex_set(g, x);
    std::vector<char> in_set(g.vertex_count(), 0);
    for (int v : x) in_set[v] = 1;
    long long count = 0;
    for (const Edge& e : g.edges()) {
        if (in_set[e.u] && in_set[e.v]) ++count;
    }
    return count;
}

VertexSet all_vertices(const Graph& g) {
    VertexSet everything(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) everything[v] = v;
    return everything;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset_of(const VertexSet& small, const VertexSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Graph subgraph_with_edges(const Graph& g, const EdgeSubset& keep) {
    for (const Edge& e : keep) {
        if (!g.has_edge(e.u, e.v)) {
            throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                             "): not an edge of the host graph");
        }
    }
    return Graph(g.vertex_count(), keep);
}

EdgeSubset non_edges(const Graph& g) {
    EdgeSubset out;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.has_edge(u, v)) out.push_back(Edge{u, v});
        }
    }
    return out;
}

Graph complete_graph(int n) {
    if (n < 1) throw InputError("complete graph needs at least one vertex");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
    }
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    if (n < 1) throw InputError("path graph needs at least one vertex");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1});
    return Graph(n, std::move(edges));
}

Graph parallel_connection(const Graph& g1, const Graph& g2,
                          std::pair<int, int> e1, std::pair<int, int> e2) {
    if (!g1.has_edge(e1.first, e1.second)) {
        throw InputError("parallel connection: first pair is not an edge of the first graph");
    }
    if (!g2.has_edge(e2.first, e2.second)) {
        throw InputError("parallel connection: second pair is not an edge of the second graph");
    }
    // Vertices of g2 are renumbered: e2.first -> e1.first, e2.second ->
    // e1.second, everything else appended after g1's vertices in increasing
    // order.
    std::vector<int> remap(g2.vertex_count(), -1);
    remap[e2.first] = e1.first;
    remap[e2.second] = e1.second;
    int next = g1.vertex_count();
    for (int v = 0; v < g2.vertex_count(); ++v) {
        if (remap[v] < 0) remap[v] = next++;
    }
    std::vector<Edge> edges = g1.edges();
    for (const Edge& e : g2.edges()) {
        Edge mapped = make_edge(remap[e.u], remap[e.v]);
        if (mapped == make_edge(e1.first, e1.second)) continue;  // shared edge kept once
        edges.push_back(mapped);
    }
    return Graph(next, std::move(edges));
}

DoubleK5 example_double_k5() {
    // Block A = {0,1,2,3,4}, block B = {0,1,5,6,7}; the pair {0,1} is shared
    // by both blocks and its edge is removed.
    std::vector<Edge> edges;
    auto add_block = [&edges](const int (&block)[5]) {
        for (int i = 0; i < 5; ++i) {
            for (int j = i + 1; j < 5; ++j) {
                Edge e = make_edge(block[i], block[j]);
                if (e == Edge{0, 1}) continue;  // the deleted shared pair
                edges.push_back(e);
            }
        }
    };
    add_block({0, 1, 2, 3, 4});
    add_block({0, 1, 5, 6, 7});
    return DoubleK5{Graph(8, std::move(edges)), Edge{0, 1}};
}

Graph example_double_k5_plus() {
    return example_double_k5().graph.with_edge(Edge{0, 1});
}

Graph example_k5_flower() {
    // Central K5 on {0..4}; each of its 10 edges carries a K5 block made of
    // that edge plus three fresh vertices.
    std::vector<Edge> edges;
    const Graph core = complete_graph(5);
    for (const Edge& e : core.edges()) edges.push_back(e);
    int next = 5;
    for (const Edge& e : core.edges()) {
        const int block[5] = {e.u, e.v, next, next + 1, next + 2};
        next += 3;
        for (int i = 0; i < 5; ++i) {
            for (int j = i + 1; j < 5; ++j) {
                Edge candidate = make_edge(block[i], block[j]);
                if (candidate == e) continue;  // shared with the core
                edges.push_back(candidate);
            }
        }
    }
    return Graph(next, std::move(edges));
}

Graph random_graph(int n, double density, std::uint64_t seed) {
    if (n < 0) throw InputError("random graph needs a nonnegative vertex count");
    if (density < 0.0 || density > 1.0) throw InputError("density must lie in [0, 1]");
    Xoshiro256 rng(seed);
    // Threshold comparison on the raw 64-bit stream keeps the draw exact and
    // platform-independent.
    const double scaled = density * 18446744073709551616.0;  // 2^64
    const std::uint64_t threshold =
        scaled >= 18446744073709551615.0 ? ~std::uint64_t{0}
                                         : static_cast<std::uint64_t>(scaled);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.next() < threshold) edges.push_back(Edge{u, v});
        }
    }
    return Graph(n, std::move(edges));
}

// ---- serialization -------------------------------------------------------

namespace {

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_number = 0;

    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++line_number;
            if (!line.empty() && line.back() == '\r') {
                throw InputError("line " + std::to_string(line_number) +
                                 ": carriage return found; LF line endings required");
            }
            return true;
        }
        if (required) throw InputError("line " + std::to_string(line_number + 1) + ": unexpected end of input");
        return false;
    };

    next_line(true);
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m)) {
        throw InputError("line 1: expected header \"n m\"");
    }
    std::string trailing;
    if (header >> trailing) {
        throw InputError("line 1: trailing content after header");
    }
    if (n < 0 || m < 0) throw InputError("line 1: counts must be nonnegative");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        next_line(true);
        std::istringstream row(line);
        long long u = 0, v = 0;
        if (!(row >> u >> v)) {
            throw InputError("line " + std::to_string(line_number) + ": expected \"u v\"");
        }
        if (row >> trailing) {
            throw InputError("line " + std::to_string(line_number) + ": trailing content after edge");
        }
        if (u < 0 || v >= n || u >= v) {
            throw InputError("line " + std::to_string(line_number) + ": edge (" +
                             std::to_string(u) + ", " + std::to_string(v) +
                             ") must satisfy 0 <= u < v < n");
        }
        edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v)});
    }
    while (next_line(false)) {
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                throw InputError("line " + std::to_string(line_number) + ": content after last edge");
            }
        }
    }
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const InputError& err) {
        throw InputError(std::string("edge list: ") + err.what());
    }
}

Graph parse_json_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw InputError(std::string("json: ") + err.what());
    }
    if (!doc.is_object()) throw InputError("json: top level must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        throw InputError("json: field \"n\" must be an integer");
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw InputError("json: field \"edges\" must be an array");
    }
    const long long n = doc["n"].get<long long>();
    if (n < 0) throw InputError("json: field \"n\" must be nonnegative");
    std::vector<Edge> edges;
    std::size_t index = 0;
    for (const auto& entry : doc["edges"]) {
        const std::string where = "json: edges[" + std::to_string(index) + "]";
        if (!entry.is_array() || entry.size() != 2 ||
            !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
            throw InputError(where + ": expected a pair [u, v]");
        }
        const long long u = entry[0].get<long long>();
        const long long v = entry[1].get<long long>();
        if (u < 0 || v >= n || u >= v) {
            throw InputError(where + ": edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") must satisfy 0 <= u < v < n");
        }
        edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v)});
        ++index;
    }
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const InputError& err) {
        throw InputError(std::string("json: ") + err.what());
    }
}

} // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::edge_list: return parse_edge_list(text);
        case GraphFormat::json: return parse_json_graph(text);
        case GraphFormat::dot: throw InputError("dot is an output-only format");
    }
    throw InputError("unknown graph format");
}

Graph parse_graph(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return parse_graph(text, c == '{' ? GraphFormat::json : GraphFormat::edge_list);
    }
    throw InputError("empty graph input");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    switch (format) {
        case GraphFormat::edge_list: {
            out << g.vertex_count() << ' ' << g.edge_count() << '\n';
            for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
            return out.str();
        }
        case GraphFormat::json: {
            nlohmann::ordered_json doc;
            doc["n"] = g.vertex_count();
            doc["edges"] = nlohmann::ordered_json::array();
            for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v});
            return doc.dump() + "\n";
        }
        case GraphFormat::dot: {
            out << "graph g {\n";
            for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
            for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
            out << "}\n";
            return out.str();
        }
    }
    throw InputError("unknown graph format");
}

} // namespace rigidity
