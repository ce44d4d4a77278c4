#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rigidity/errors.hpp"
#include "rigidity/json_io.hpp"
#include "rigidity/rng.hpp"
#include "rigidity/verify.hpp"

namespace {

using namespace rigidity;

std::string read_input_text(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw InputError("cannot open input file: " + path);
        buffer << file.rdbuf();
    }
    return buffer.str();
}

Graph load_graph(const std::string& path) { return parse_graph(read_input_text(path)); }

Backend backend_from(const std::string& name) {
    if (name == "brute") return Backend::brute;
    if (name == "flow") return Backend::flow;
    if (name == "both") return Backend::both;
    throw InputError("unknown backend: " + name);
}

void warn_dimension(int dim) {
    if (dim >= 6) {
        std::cerr << "warning: dimension " << dim
                  << " is beyond the proven range (d <= 5); rank upper bounds are"
                     " exploratory there\n";
    }
}

void emit_payload(const OrderedJson& payload, const std::string& format) {
    if (format == "json") {
        std::cout << dump_json_line(payload);
    } else if (format == "text") {
        std::cout << dump_json_pretty(payload);
    } else {
        throw InputError("format 'dot' applies to graph output only");
    }
}

void emit_graph(const Graph& g, const std::string& format) {
    if (format == "json") {
        std::cout << serialize_graph(g, GraphFormat::json);
    } else if (format == "text") {
        std::cout << serialize_graph(g, GraphFormat::edge_list);
    } else {
        std::cout << serialize_graph(g, GraphFormat::dot);
    }
}

OrderedJson json_of_suites(const std::vector<SuiteResult>& suites) {
    OrderedJson list = OrderedJson::array();
    bool pass = true;
    for (const SuiteResult& s : suites) {
        OrderedJson item;
        item["name"] = s.name;
        item["checks"] = s.checks;
        item["failures"] = s.failures;
        item["notes"] = s.notes;
        item["pass"] = s.pass();
        list.push_back(std::move(item));
        pass = pass && s.pass();
    }
    OrderedJson out;
    out["suites"] = std::move(list);
    out["pass"] = pass;
    return out;
}

EdgeSubset parse_edges_argument(const std::string& text, const Graph& g) {
    EdgeSubset out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        const auto dash = token.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == token.size()) {
            throw InputError("edge token '" + token + "' must look like u-v");
        }
        int u = 0;
        int v = 0;
        try {
            u = std::stoi(token.substr(0, dash));
            v = std::stoi(token.substr(dash + 1));
        } catch (const std::exception&) {
            throw InputError("edge token '" + token + "' must look like u-v");
        }
        const Edge e = make_edge(u, v);
        if (!g.has_edge(e.u, e.v)) {
            throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                             " is not in the graph");
        }
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw InputError("duplicate edge in --edges");
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"d-sparse subgraph structure and generic rigidity ranks over GF(2^61-1)"};
    app.require_subcommand(1);

    std::string input = "-";
    int dim = 3;
    std::uint64_t seed = 0;
    int trials = 3;
    std::string backend = "flow";
    std::string format = "json";
    int threads = 1;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input) {
            cmd->add_option("--input,-i", input, "graph file, or - for standard input");
        }
        cmd->add_option("--dim,-d", dim, "dimension d in 1..8 (default 3)");
        cmd->add_option("--seed", seed, "64-bit seed (default 0)");
        cmd->add_option("--trials", trials, "independent rank trials (default 3)");
        cmd->add_option("--backend", backend, "sparsity backend (default flow)")
            ->check(CLI::IsMember({"brute", "flow", "both"}));
        cmd->add_option("--format", format, "output format (default json)")
            ->check(CLI::IsMember({"json", "text", "dot"}));
        cmd->add_option("--threads", threads, "worker cap; output is thread-count independent")
            ->envname("RIGCTL_THREADS");
    };

    std::string gen_kind;
    int gen_n = 5;
    double gen_density = 0.5;
    CLI::App* gen = app.add_subcommand("gen", "generate a named graph");
    gen->add_option("kind", gen_kind,
                    "complete | path | double-k5 | double-k5-plus | k5-flower | random")
        ->required();
    gen->add_option("--n", gen_n, "vertex count for complete/path/random (default 5)");
    gen->add_option("--density", gen_density, "edge probability for random (default 0.5)");
    add_common(gen, false);

    CLI::App* sparse = app.add_subcommand("sparse", "d-sparsity verdict with witness");
    add_common(sparse, true);

    CLI::App* maximal = app.add_subcommand("maximal", "greedy maximal d-sparse subgraph");
    add_common(maximal, true);

    CLI::App* components = app.add_subcommand("components",
                                              "d-critical components of a d-sparse graph");
    add_common(components, true);

    CLI::App* cover = app.add_subcommand("cover",
                                         "critical cover and hinge inequality report");
    add_common(cover, true);

    CLI::App* rank = app.add_subcommand("rank", "randomized generic rigidity-matrix rank");
    add_common(rank, true);

    std::string indep_edges;
    CLI::App* independent =
        app.add_subcommand("independent", "rank independence plus the sparsity consequence");
    independent->add_option("--edges", indep_edges,
                            "comma-separated edge list like 0-1,2-3 (default: all edges)");
    add_common(independent, true);

    bool sd_exact = false;
    int sd_samples = 100;
    CLI::App* sd = app.add_subcommand("sd", "minimum size of a maximal d-sparse subgraph");
    sd->add_flag("--exact", sd_exact, "exact branch-and-bound (caps at 20 edges)");
    sd->add_option("--samples", sd_samples, "heuristic random orders (default 100)");
    add_common(sd, true);

    int sdstar_budget = 1;
    int sdstar_samples = 20;
    CLI::App* sdstar = app.add_subcommand("sdstar",
                                          "minimum of sd over supergraphs within an edge budget");
    sdstar->add_option("--budget", sdstar_budget, "maximum added edges, 0..3 (default 1)");
    sdstar->add_option("--samples", sdstar_samples, "random orders per candidate (default 20)");
    add_common(sdstar, true);

    std::string verify_suite;
    int verify_samples = -1;
    int hunt_nmax = 0;
    CLI::App* verify = app.add_subcommand("verify", "property suites");
    verify->add_option("suite", verify_suite,
                       "theorem4 | lemmas | maxwell | laman | hunt | examples | circuit |"
                       " corpus | oracles | anchors | covers | determinism | all")
        ->required();
    verify->add_option("--samples", verify_samples, "suite-specific sample count");
    verify->add_option("--nmax", hunt_nmax, "hunt: largest vertex count (default dim+4)");
    add_common(verify, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (threads < 1) throw InputError("--threads must be at least 1");

        if (app.got_subcommand(gen)) {
            Graph g = [&] {
                if (gen_kind == "complete") return complete_graph(gen_n);
                if (gen_kind == "path") return path_graph(gen_n);
                if (gen_kind == "double-k5") return example_double_k5().graph;
                if (gen_kind == "double-k5-plus") return example_double_k5_plus();
                if (gen_kind == "k5-flower") return example_k5_flower();
                if (gen_kind == "random") {
                    std::cerr << "random graph: n=" << gen_n << " density=" << gen_density
                              << " seed=" << seed << "\n";
                    return random_graph(gen_n, gen_density, seed);
                }
                throw InputError("unknown generator kind: " + gen_kind);
            }();
            emit_graph(g, format);
            return 0;
        }

        if (app.got_subcommand(sparse)) {
            warn_dimension(dim);
            SparsityParams p(dim);
            const Graph g = load_graph(input);
            const SparsityVerdict v = is_d_sparse(g, p, backend_from(backend));
            emit_payload(json_of_verdict(v), format);
            return v.is_sparse ? 0 : 1;
        }

        if (app.got_subcommand(maximal)) {
            warn_dimension(dim);
            SparsityParams p(dim);
            const Graph g = load_graph(input);
            OrderedJson payload = json_of_maximal(maximal_sparse_subgraph(g, p, seed));
            payload["seed"] = seed;
            emit_payload(payload, format);
            return 0;
        }

        if (app.got_subcommand(components)) {
            warn_dimension(dim);
            SparsityParams p(dim);
            const Graph g = load_graph(input);
            emit_payload(json_of_components(critical_components(g, p, backend_from(backend))),
                         format);
            return 0;
        }

        if (app.got_subcommand(cover)) {
            warn_dimension(dim);
            SparsityParams p(dim);
            const Graph g = load_graph(input);
            const MaximalSubgraphResult h = maximal_sparse_subgraph(g, p, seed);
            const Cover c = critical_cover(g, h, p);
            const Graph hg = subgraph_with_edges(g, h.kept);
            const std::vector<CoverReport> reports{
                check_prefixedhinge(hg, p), check_fixedhinge(hg, p), check_boundedhinges(hg, p)};
            bool pass = true;
            for (const CoverReport& r : reports) pass = pass && r.pass;
            OrderedJson payload = json_of_cover_report(c, p, reports);
            payload["seed"] = seed;
            emit_payload(payload, format);
            return pass ? 0 : 1;
        }

        if (app.got_subcommand(rank)) {
            warn_dimension(dim);
            SparsityParams p(dim);
            const Graph g = load_graph(input);
            emit_payload(json_of_rank(generic_rank(g, p, trials, seed)), format);
            return 0;
        }

        if (app.got_subcommand(independent)) {
            warn_dimension(dim);
            SparsityParams p(dim);
            const Graph g = load_graph(input);
            const EdgeSubset f =
                indep_edges.empty() ? g.edges() : parse_edges_argument(indep_edges, g);
            const MaxwellReport rep = maxwell_check(g, f, p, trials, seed);
            emit_payload(json_of_maxwell(rep), format);
            return rep.independent && rep.pass ? 0 : 1;
        }

        if (app.got_subcommand(sd)) {
            warn_dimension(dim);
            SparsityParams p(dim);
            const Graph g = load_graph(input);
            const SdEstimate est =
                sd_exact ? s_d_exhaustive(g, p) : s_d_heuristic(g, p, sd_samples, seed);
            OrderedJson payload = json_of_sd(est);
            if (!sd_exact) payload["seed"] = seed;
            emit_payload(payload, format);
            return 0;
        }

        if (app.got_subcommand(sdstar)) {
            warn_dimension(dim);
            SparsityParams p(dim);
            const Graph g = load_graph(input);
            const SdStarResult result =
                s_d_star_search(g, p, sdstar_budget, sdstar_samples, seed, trials);
            OrderedJson payload = json_of_sdstar(result);
            payload["seed"] = seed;
            emit_payload(payload, format);
            return 0;
        }

        if (app.got_subcommand(verify)) {
            auto samples_or = [&](int fallback) {
                return verify_samples > 0 ? verify_samples : fallback;
            };

            if (verify_suite == "theorem4") {
                warn_dimension(dim);
                SparsityParams p(dim);
                const Graph g = load_graph(input);
                const BoundReport rep =
                    upper_bound_check(g, p, samples_or(5), seed, trials);
                emit_payload(json_of_bounds(rep), format);
                return rep.pass() ? 0 : 1;
            }

            if (verify_suite == "lemmas") {
                warn_dimension(dim);
                SparsityParams p(dim);
                const Graph g = load_graph(input);
                const MaximalSubgraphResult h = maximal_sparse_subgraph(g, p, seed);
                const Cover c = critical_cover(g, h, p);
                const Graph hg = subgraph_with_edges(g, h.kept);
                const IntersectionReport ir =
                    check_component_intersections(critical_components(hg, p), hg, p);
                const bool thin_ok = cover_thinness(c) <= p.d - 1;
                bool closed_ok = true;
                if (p.d >= 2) {
                    for (const Hinge& hinge : hinges(c, p.d - 1)) {
                        closed_ok = closed_ok && hinge.closed;
                    }
                }
                const bool no_d_hinges = hinges(c, p.d).empty();
                const bool pass = ir.pass && thin_ok && closed_ok && no_d_hinges;
                OrderedJson payload;
                payload["cover"] = json_of_cover_report(c, p, {});
                payload["intersections"] = json_of_intersections(ir);
                payload["thin_ok"] = thin_ok;
                payload["closed_hinges_ok"] = closed_ok;
                payload["no_d_hinges"] = no_d_hinges;
                payload["pass"] = pass;
                emit_payload(payload, format);
                return pass ? 0 : 1;
            }

            if (verify_suite == "maxwell") {
                warn_dimension(dim);
                SparsityParams p(dim);
                const Graph g = load_graph(input);
                const int count = samples_or(10);
                OrderedJson sets = OrderedJson::array();
                bool pass = true;
                for (int i = 0; i < count; ++i) {
                    const EdgeSubset f = sample_independent_set(
                        g, p, derive_seed(seed, static_cast<std::uint64_t>(i)), trials);
                    const MaxwellReport rep = maxwell_check(
                        g, f, p, trials, derive_seed(seed, 1000 + static_cast<std::uint64_t>(i)));
                    OrderedJson item;
                    item["edges"] = json_of_edges(f);
                    item["independent"] = rep.independent;
                    item["sparse"] = rep.sparsity.is_sparse;
                    item["pass"] = rep.pass;
                    sets.push_back(std::move(item));
                    pass = pass && rep.pass && rep.independent;
                }
                OrderedJson payload;
                payload["sets"] = std::move(sets);
                payload["pass"] = pass;
                emit_payload(payload, format);
                return pass ? 0 : 1;
            }

            if (verify_suite == "laman") {
                SparsityParams p2(2);
                const Graph g = load_graph(input);
                const int r2 = generic_rank(g, p2, trials, seed).rank;
                std::vector<int> sizes;
                sizes.push_back(static_cast<int>(maximal_sparse_subgraph(g, p2).kept.size()));
                const int count = samples_or(5);
                for (int i = 0; i < count; ++i) {
                    sizes.push_back(static_cast<int>(
                        maximal_sparse_subgraph(g, p2,
                                                derive_seed(seed, static_cast<std::uint64_t>(i)))
                            .kept.size()));
                }
                bool pass = true;
                for (int size : sizes) pass = pass && size == r2;
                OrderedJson payload;
                payload["rank"] = r2;
                payload["sizes"] = sizes;
                payload["pass"] = pass;
                emit_payload(payload, format);
                return pass ? 0 : 1;
            }

            if (verify_suite == "hunt") {
                warn_dimension(dim);
                SparsityParams p(dim);
                const int nmax = hunt_nmax > 0 ? hunt_nmax : dim + 4;
                const HuntReport rep = counterexample_hunt(p, nmax, samples_or(20), seed);
                emit_payload(json_of_hunt(rep), format);
                return 0;  // exploratory: candidates are reported, never asserted
            }

            std::vector<SuiteResult> suites;
            if (verify_suite == "examples") {
                suites.push_back(verify_double_k5_example(seed, trials));
                suites.push_back(verify_flower_example(200, 5, seed, trials));
            } else if (verify_suite == "circuit") {
                suites.push_back(verify_circuit_facts(seed, trials));
            } else if (verify_suite == "corpus") {
                suites.push_back(verify_rank_upper_bound_corpus(300, 5, seed, trials));
            } else if (verify_suite == "oracles") {
                suites.push_back(verify_backend_equivalence(200, 100, seed));
            } else if (verify_suite == "anchors") {
                suites.push_back(verify_exactness_anchors(100, 3, seed, trials));
            } else if (verify_suite == "covers") {
                suites.push_back(verify_cover_inequalities(20, seed));
            } else if (verify_suite == "determinism") {
                suites.push_back(verify_determinism(seed));
            } else if (verify_suite == "all") {
                suites = verify_all(seed);
            } else {
                throw InputError("unknown verify suite: " + verify_suite);
            }
            bool pass = true;
            for (const SuiteResult& s : suites) pass = pass && s.pass();
            emit_payload(json_of_suites(suites), format);
            return pass ? 0 : 1;
        }

        throw InputError("no subcommand selected");
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CapabilityError& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 1;
    } catch (const InternalInconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
