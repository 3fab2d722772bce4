// Command-line front end: families, invariants, embeddings and the exact
// search, with text or JSON output. Inputs are file paths or named specs
// (matching:NU, lpath:ELL, star:ELL, f3:T for hypergraphs; lpath-graph:ELL,
// star-graph:ELL, sec4tree:D,C for graphs; tight-path:Q for growth
// sequences).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "turan/constructions.hpp"
#include "turan/core.hpp"
#include "turan/embed.hpp"
#include "turan/growth.hpp"
#include "turan/io.hpp"
#include "turan/kernel_graph.hpp"
#include "turan/search.hpp"
#include "turan/verify.hpp"

namespace {

using turan::Forest;
using turan::Graph;
using turan::GrowthSequence;
using turan::Hypergraph;
using turan::VertexSet;

struct Spec {
    std::string head;
    std::vector<int> args;
};

// "name:1,2" -> {"name", {1, 2}}; a plain string keeps empty args.
Spec parse_spec(const std::string& s) {
    Spec out;
    const std::size_t colon = s.find(':');
    out.head = s.substr(0, colon);
    if (colon == std::string::npos) return out;
    std::istringstream rest(s.substr(colon + 1));
    std::string tok;
    while (std::getline(rest, tok, ','))
        out.args.push_back(std::stoi(tok));
    return out;
}

void need_args(const Spec& sp, std::size_t count) {
    if (sp.args.size() != count)
        throw std::invalid_argument("spec '" + sp.head + "' takes " + std::to_string(count) +
                                    " parameter(s)");
}

int need_k(int k, const std::string& what) {
    if (k < 2) throw std::invalid_argument("spec '" + what + "' needs -k");
    return k;
}

Graph resolve_graph(const std::string& arg) {
    const Spec sp = parse_spec(arg);
    if (sp.head == "lpath-graph") {
        need_args(sp, 1);
        return turan::path_graph(sp.args[0]);
    }
    if (sp.head == "star-graph") {
        need_args(sp, 1);
        return turan::star_graph(sp.args[0]);
    }
    if (sp.head == "sec4tree") {
        need_args(sp, 2);
        return turan::example_tree_sec4(sp.args[0], sp.args[1]).graph();
    }
    return turan::load_graph(arg);
}

Hypergraph resolve_hypergraph(const std::string& arg, int k) {
    const Spec sp = parse_spec(arg);
    if (sp.head == "matching") {
        need_args(sp, 1);
        return turan::matching_family(need_k(k, sp.head), sp.args[0]);
    }
    if (sp.head == "lpath") {
        need_args(sp, 1);
        return turan::linear_path(need_k(k, sp.head), sp.args[0]);
    }
    if (sp.head == "star") {
        need_args(sp, 1);
        return turan::linear_star(need_k(k, sp.head), sp.args[0]);
    }
    if (sp.head == "f3") {
        need_args(sp, 1);
        return turan::counterexample_f3(sp.args[0]);
    }
    return turan::load_hypergraph(arg);
}

GrowthSequence resolve_growth(const std::string& arg, int k) {
    const Spec sp = parse_spec(arg);
    if (sp.head == "tight-path") {
        need_args(sp, 1);
        return turan::tight_path_growth(need_k(k, sp.head), sp.args[0]);
    }
    return turan::load_growth(arg);
}

// Where the primary output goes; config echoes ride along as '#' comments in
// text mode and a "config" object in JSON mode.
struct Output {
    std::string format = "text";
    std::string path;
    std::ofstream file;

    std::ostream& stream() {
        if (!path.empty() && !file.is_open()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot write " + path);
        }
        return file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
    }

    bool json() const { return format == "json"; }
};

using ConfigEntry = std::pair<std::string, std::string>;

void echo_config(Output& out, const std::vector<ConfigEntry>& entries) {
    if (out.json()) return;  // folded into the JSON document instead
    for (const auto& [key, value] : entries)
        out.stream() << "# " << key << "=" << value << "\n";
}

nlohmann::json config_json(const std::vector<ConfigEntry>& entries) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [key, value] : entries) out[key] = value;
    return out;
}

std::string set_to_csv(VertexSet s) {
    std::string out;
    for (const int v : s) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    }
    return out;
}

nlohmann::json hypergraph_json(const Hypergraph& h) {
    nlohmann::json edges = nlohmann::json::array();
    for (const VertexSet e : h.edges()) edges.push_back(e.to_vector());
    return {{"k", h.k()}, {"n", h.n()}, {"edges", edges}};
}

nlohmann::json embedding_json(const turan::Embedding& emb) {
    return {{"vertex_map", emb.vertex_map}, {"edge_map", emb.edge_map}};
}

int default_threads() {
    if (const char* env = std::getenv("TURAN_THREADS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            return 1;
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear forests in uniform hypergraphs: families, invariants and exact search"};
    app.require_subcommand(1);

    Output out;
    int threads = default_threads();
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("-o,--output", out.path, "write the result to a file");
    app.add_option("--threads", threads, "worker threads (default from TURAN_THREADS)");

    std::string input1, input2;
    int k = -1, n = -1, s = -1, threshold = -1, ell = -1, v = -1, head_size = -1;
    std::string tree_spec;
    std::vector<int> kernel_set;

    auto* sigma_cmd = app.add_subcommand("sigma", "sigma of a forest (file or spec)");
    sigma_cmd->add_option("forest", input1)->required();

    auto* expand_cmd = app.add_subcommand("expand", "k-expansion of a graph");
    expand_cmd->add_option("graph", input1)->required();
    expand_cmd->add_option("-k", k, "uniformity")->required();

    auto* tau1_cmd = app.add_subcommand("tau1", "minimum 1-cross-cut of a hypergraph");
    tau1_cmd->add_option("hypergraph", input1)->required();
    tau1_cmd->add_option("-k", k, "uniformity for named specs");

    auto* kg_cmd = app.add_subcommand("kernel-graph", "pairs supporting sunflowers of size s");
    kg_cmd->add_option("hypergraph", input1)->required();
    kg_cmd->add_option("-s", s, "sunflower size threshold")->required();
    kg_cmd->add_option("-k", k, "uniformity for named specs");

    auto* kd_cmd = app.add_subcommand("kernel-degree", "largest sunflower with a given kernel");
    kd_cmd->add_option("hypergraph", input1)->required();
    kd_cmd->add_option("--set", kernel_set, "kernel vertices")->required()->delimiter(',');
    kd_cmd->add_option("-k", k, "uniformity for named specs");

    auto* contains_cmd = app.add_subcommand("contains", "search a pattern inside a host");
    contains_cmd->add_option("host", input1)->required();
    contains_cmd->add_option("pattern", input2)->required();
    contains_cmd->add_option("-k", k, "uniformity for named specs");

    auto* peel_cmd = app.add_subcommand("peel", "remove low-degree (k-1)-shadow edges");
    peel_cmd->add_option("hypergraph", input1)->required();
    peel_cmd->add_option("--threshold", threshold, "peel degree threshold")->required();
    peel_cmd->add_option("-k", k, "uniformity for named specs");

    auto* embed_cmd = app.add_subcommand("embed-forest", "embed a tight forest via peeling");
    embed_cmd->add_option("hypergraph", input1)->required();
    embed_cmd->add_option("growth", input2)->required();
    embed_cmd->add_option("-k", k, "uniformity for named growth specs");

    auto* construct_cmd = app.add_subcommand("construct", "build a named family");
    construct_cmd->add_option("family", input1)->required();
    construct_cmd->add_option("-n", n, "universe size");
    construct_cmd->add_option("-k", k, "uniformity");
    construct_cmd->add_option("--tree", tree_spec, "forest for lowerbound (file or spec)");
    construct_cmd->add_option("--ell", ell, "path length for pathext");
    construct_cmd->add_option("--s", head_size, "head size for matchingext");
    construct_cmd->add_option("--v", v, "forbidden tree size for kalai");

    std::vector<std::string> forbid;
    long long ceiling = 100;
    long long max_nodes = -1;
    double max_seconds = -1.0;
    bool allow_partial = false, no_symmetry = false, no_clique = false;
    int split_depth = 10;
    auto* search_cmd = app.add_subcommand("search", "exact extremal size with certificate");
    search_cmd->add_option("-n", n)->required();
    search_cmd->add_option("-k", k)->required();
    search_cmd->add_option("--forbid", forbid, "forbidden pattern (file or spec), repeatable")
        ->required();
    search_cmd->add_option("--ceiling", ceiling, "largest admissible C(n,k)");
    search_cmd->add_option("--max-nodes", max_nodes, "node budget, -1 unlimited");
    search_cmd->add_option("--max-seconds", max_seconds, "time budget, -1 unlimited");
    search_cmd->add_option("--split-depth", split_depth, "work-split depth for threads");
    search_cmd->add_flag("--allow-partial", allow_partial,
                         "exit 0 even when the budget cut the search short");
    search_cmd->add_flag("--no-symmetry", no_symmetry, "disable the first-edge anchor");
    search_cmd->add_flag("--no-clique", no_clique, "disable the two-edge clique reduction");

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "paper-suite or a formula suite name")->required();

    // let --format/--output/--threads appear after the subcommand too
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sigma_cmd) {
            const Forest t(resolve_graph(input1));
            const turan::SigmaResult res = turan::sigma(t);
            const std::vector<ConfigEntry> cfg = {{"subcommand", "sigma"}, {"forest", input1}};
            echo_config(out, cfg);
            if (out.json()) {
                out.stream() << nlohmann::json{{"config", config_json(cfg)},
                                               {"sigma", res.value},
                                               {"witness", res.witness.to_vector()}}
                                    .dump(2)
                             << "\n";
            } else {
                out.stream() << res.value << "\n";
                out.stream() << "# witness X=" << res.witness.to_string()
                             << " surviving-edges=" << res.value - res.witness.size() << "\n";
            }
        } else if (*expand_cmd) {
            const turan::ExpandedForest ex = turan::expand(resolve_graph(input1), k);
            const std::vector<ConfigEntry> cfg = {
                {"subcommand", "expand"}, {"graph", input1}, {"k", std::to_string(k)}};
            echo_config(out, cfg);
            if (out.json()) {
                out.stream() << nlohmann::json{{"config", config_json(cfg)},
                                               {"hypergraph", hypergraph_json(ex.result)}}
                                    .dump(2)
                             << "\n";
            } else {
                turan::write_hypergraph(out.stream(), ex.result);
            }
        } else if (*tau1_cmd) {
            const Hypergraph f = resolve_hypergraph(input1, k);
            const turan::CrossCutResult res = turan::one_cross_cut_number(f);
            const std::vector<ConfigEntry> cfg = {{"subcommand", "tau1"}, {"hypergraph", input1}};
            echo_config(out, cfg);
            if (out.json()) {
                nlohmann::json j{{"config", config_json(cfg)}};
                if (res.value) {
                    j["tau1"] = *res.value;
                    j["witness"] = res.witness.to_vector();
                } else {
                    j["tau1"] = nullptr;
                }
                out.stream() << j.dump(2) << "\n";
            } else if (res.value) {
                out.stream() << *res.value << "\n# witness Y=" << res.witness.to_string() << "\n";
            } else {
                out.stream() << "none\n";
            }
        } else if (*kg_cmd) {
            const Hypergraph f = resolve_hypergraph(input1, k);
            const turan::KernelGraph kg = turan::kernel_graph(f, s);
            const std::vector<ConfigEntry> cfg = {
                {"subcommand", "kernel-graph"}, {"hypergraph", input1}, {"s", std::to_string(s)}};
            echo_config(out, cfg);
            if (out.json()) {
                nlohmann::json pairs = nlohmann::json::array();
                for (const auto& [u, v] : kg.graph().edges()) pairs.push_back({u, v});
                out.stream() << nlohmann::json{{"config", config_json(cfg)},
                                               {"s", kg.s()},
                                               {"n", kg.graph().n()},
                                               {"pairs", pairs}}
                                    .dump(2)
                             << "\n";
            } else {
                turan::write_kernel_graph(out.stream(), kg);
            }
        } else if (*kd_cmd) {
            const Hypergraph f = resolve_hypergraph(input1, k);
            VertexSet w;
            for (const int x : kernel_set) w.add(x);
            const turan::KernelDegreeResult res = turan::kernel_degree(f, w);
            const std::vector<ConfigEntry> cfg = {
                {"subcommand", "kernel-degree"}, {"hypergraph", input1}, {"set", set_to_csv(w)}};
            echo_config(out, cfg);
            if (out.json()) {
                nlohmann::json petals = nlohmann::json::array();
                for (const VertexSet petal : res.witness.petals) petals.push_back(petal.to_vector());
                out.stream() << nlohmann::json{{"config", config_json(cfg)},
                                               {"degree", res.value},
                                               {"petals", petals}}
                                    .dump(2)
                             << "\n";
            } else {
                out.stream() << res.value << "\n";
                for (const VertexSet petal : res.witness.petals)
                    out.stream() << "# petal " << petal.to_string() << "\n";
            }
        } else if (*contains_cmd) {
            const Hypergraph host = resolve_hypergraph(input1, k);
            const Hypergraph pattern = resolve_hypergraph(input2, host.k());
            const auto emb = turan::contains(host, pattern);
            const std::vector<ConfigEntry> cfg = {
                {"subcommand", "contains"}, {"host", input1}, {"pattern", input2}};
            echo_config(out, cfg);
            if (out.json()) {
                nlohmann::json j{{"config", config_json(cfg)}, {"contains", emb.has_value()}};
                if (emb) j["embedding"] = embedding_json(*emb);
                out.stream() << j.dump(2) << "\n";
            } else if (emb) {
                out.stream() << "yes\n";
                turan::write_embedding(out.stream(), *emb);
            } else {
                out.stream() << "no\n";
            }
        } else if (*peel_cmd) {
            const Hypergraph f = resolve_hypergraph(input1, k);
            const turan::ShadowPeel peel = turan::peel_shadow(f, threshold);
            const std::vector<ConfigEntry> cfg = {{"subcommand", "peel"},
                                                  {"hypergraph", input1},
                                                  {"threshold", std::to_string(threshold)}};
            echo_config(out, cfg);
            if (out.json()) {
                nlohmann::json log = nlohmann::json::array();
                for (const turan::PeelLogEntry& e : peel.log) {
                    nlohmann::json removed = nlohmann::json::array();
                    for (const VertexSet r : e.removed) removed.push_back(r.to_vector());
                    log.push_back({{"x", e.x.to_vector()}, {"removed", removed}});
                }
                out.stream() << nlohmann::json{{"config", config_json(cfg)},
                                               {"log", log},
                                               {"residue", hypergraph_json(peel.residue)}}
                                    .dump(2)
                             << "\n";
            } else {
                for (const turan::PeelLogEntry& e : peel.log)
                    out.stream() << "# removed " << e.removed.size() << " edge(s) at "
                                 << e.x.to_string() << "\n";
                turan::write_hypergraph(out.stream(), peel.residue);
            }
        } else if (*embed_cmd) {
            const Hypergraph f = resolve_hypergraph(input1, k);
            const GrowthSequence t = resolve_growth(input2, f.k());
            const auto emb = turan::embed_tight_forest(f, t);
            const std::vector<ConfigEntry> cfg = {
                {"subcommand", "embed-forest"}, {"hypergraph", input1}, {"growth", input2}};
            echo_config(out, cfg);
            if (out.json()) {
                nlohmann::json j{{"config", config_json(cfg)}, {"embedded", emb.has_value()}};
                if (emb) j["embedding"] = embedding_json(*emb);
                out.stream() << j.dump(2) << "\n";
            } else if (emb) {
                out.stream() << "yes\n";
                turan::write_embedding(out.stream(), *emb);
            } else {
                out.stream() << "no\n";
            }
        } else if (*construct_cmd) {
            const Spec sp = parse_spec(input1);
            std::optional<Hypergraph> fam;
            if (sp.head == "lowerbound") {
                if (tree_spec.empty())
                    throw std::invalid_argument("lowerbound needs --tree");
                fam = turan::lower_bound_family(n, k, Forest(resolve_graph(tree_spec)));
            } else if (sp.head == "pathext") {
                if (ell < 1) throw std::invalid_argument("pathext needs --ell");
                fam = turan::path_extremal_family(n, k, ell);
            } else if (sp.head == "matchingext") {
                if (head_size < 0) throw std::invalid_argument("matchingext needs --s");
                fam = turan::matching_extremal_family(n, k, head_size);
            } else if (sp.head == "kalai") {
                if (v < 1) throw std::invalid_argument("kalai needs --v");
                fam = turan::kalai_packing_family(n, k, v);
            } else {
                fam = resolve_hypergraph(input1, k);
            }
            std::vector<ConfigEntry> cfg = {{"subcommand", "construct"}, {"family", input1}};
            if (n >= 0) cfg.emplace_back("n", std::to_string(n));
            if (k >= 0) cfg.emplace_back("k", std::to_string(k));
            echo_config(out, cfg);
            if (out.json()) {
                out.stream() << nlohmann::json{{"config", config_json(cfg)},
                                               {"hypergraph", hypergraph_json(*fam)}}
                                    .dump(2)
                             << "\n";
            } else {
                turan::write_hypergraph(out.stream(), *fam);
            }
        } else if (*search_cmd) {
            turan::SearchOptions opt;
            opt.ceiling = ceiling;
            opt.symmetry = !no_symmetry;
            opt.clique_fastpath = !no_clique;
            opt.threads = threads;
            opt.split_depth = split_depth;
            opt.budget.max_nodes = max_nodes;
            opt.budget.max_seconds = max_seconds;
            std::vector<Hypergraph> patterns;
            for (const std::string& f : forbid) patterns.push_back(resolve_hypergraph(f, k));
            turan::SearchCertificate cert = turan::turan_exact(n, k, patterns, opt);
            cert.pattern_names = forbid;  // paths and specs as given
            std::vector<ConfigEntry> cfg = {{"subcommand", "search"},
                                            {"n", std::to_string(n)},
                                            {"k", std::to_string(k)},
                                            {"ceiling", std::to_string(ceiling)},
                                            {"threads", std::to_string(threads)},
                                            {"symmetry", opt.symmetry ? "on" : "off"},
                                            {"clique", opt.clique_fastpath ? "on" : "off"}};
            nlohmann::json doc = turan::certificate_to_json(cert);
            doc["config"] = config_json(cfg);
            if (out.json() || !out.path.empty()) {
                out.stream() << doc.dump(2) << "\n";
                if (!out.path.empty() && !out.json()) {
                    // file got the JSON; give the terminal a short summary
                    std::cout << "size " << cert.size
                              << (cert.exhaustive ? " (exhaustive)" : " (budget hit)") << "\n";
                }
            } else {
                echo_config(out, cfg);
                out.stream() << cert.size << "\n";
                turan::write_hypergraph(out.stream(), cert.witness);
                out.stream() << "# exhaustive=" << (cert.exhaustive ? "yes" : "no")
                             << " nodes=" << cert.stats.nodes << " seconds=" << cert.stats.seconds
                             << "\n";
            }
            if (!cert.exhaustive && !allow_partial) return 2;
        } else if (*verify_cmd) {
            const std::vector<ConfigEntry> cfg = {{"subcommand", "verify"},
                                                  {"suite", suite},
                                                  {"threads", std::to_string(threads)}};
            echo_config(out, cfg);
            if (suite == "paper-suite") {
                const auto results = turan::run_verification_suite(threads);
                bool all = true;
                if (out.json()) {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& r : results) {
                        arr.push_back({{"id", r.id},
                                       {"name", r.name},
                                       {"pass", r.pass},
                                       {"seconds", r.seconds},
                                       {"detail", r.detail}});
                        all = all && r.pass;
                    }
                    out.stream() << nlohmann::json{{"config", config_json(cfg)},
                                                   {"criteria", arr},
                                                   {"all_pass", all}}
                                        .dump(2)
                                 << "\n";
                } else {
                    for (const auto& r : results) {
                        turan::print_criterion(out.stream(), r);
                        all = all && r.pass;
                    }
                    out.stream() << (all ? "ALL PASS" : "FAILURES PRESENT") << "\n";
                }
                if (!all) return 1;
            } else {
                turan::SearchOptions opt;
                opt.threads = threads;
                const auto rows = turan::run_formula_suite(suite, opt);
                if (out.json()) {
                    out.stream() << nlohmann::json{{"config", config_json(cfg)},
                                                   {"rows", turan::verify_rows_to_json(rows)}}
                                        .dump(2)
                                 << "\n";
                } else {
                    for (const auto& row : rows) {
                        out.stream() << row.formula << " ";
                        for (const auto& [pname, pval] : row.params)
                            out.stream() << pname << "=" << pval << " ";
                        out.stream() << "search=" << row.search_value << " " << row.relation
                                     << " reference=" << row.reference_value << " "
                                     << (row.ok ? "ok" : "DIFFERS")
                                     << (row.exhaustive ? "" : " (budget hit)") << "\n";
                    }
                }
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
