// hamlink: exact Hamiltonian-linkage decisions, path covers, structural
// deciders, hardness gadgets, and L(2,1) labelling numbers for graphs of
// small independence number.
//
// Prints a JSON report on stdout; human diagnostics go to stderr. Exit
// codes: 0 completed decision (yes or no), 2 usage or input error, 3 promise
// violation, 4 size-guard refusal, 1 internal error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hamlink/construct.hpp"
#include "hamlink/labelling.hpp"
#include "hamlink/reductions.hpp"
#include "hamlink/structural.hpp"

using json = nlohmann::ordered_json;
using namespace hamlink;

namespace {

struct CommonOptions {
    std::string input = "-";
    int k = 0;
    bool no_verify_promise = false;
    bool witness = false;
    int max_oracle_n = 14;
    int max_alpha_n = 30;
    int max_lambda_n = 10;
    int threads = 0;  // 0: take HAMLINK_THREADS or 1
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("-i,--input", opt.input, "graph file (edge list or DIMACS), - for stdin");
    cmd->add_option("--k", opt.k,
                    "independence bound promise (alpha < k); computed exactly when omitted");
    cmd->add_flag("--no-verify-promise", opt.no_verify_promise, "trust --k without checking it");
    cmd->add_flag("--witness", opt.witness, "emit a witness when one exists");
    cmd->add_option("--max-oracle-n", opt.max_oracle_n, "size guard for exhaustive searches");
    cmd->add_option("--max-alpha-n", opt.max_alpha_n,
                    "size guard for exact independence-number computation");
    cmd->add_option("--max-lambda-n", opt.max_lambda_n,
                    "size guard for the exhaustive labelling search");
    cmd->add_option("--threads", opt.threads,
                    "parallelism hint (default: HAMLINK_THREADS or 1; answers are "
                    "deterministic either way)");
}

SolverConfig to_config(const CommonOptions& opt) {
    SolverConfig cfg;
    cfg.k = opt.k;
    cfg.verify_promise = !opt.no_verify_promise;
    cfg.max_alpha_n = opt.max_alpha_n;
    cfg.oracle.max_backtrack_n = opt.max_oracle_n;
    cfg.oracle.max_lambda_n = opt.max_lambda_n;
    cfg.threads = opt.threads;
    if (cfg.threads <= 0) {
        const char* env = std::getenv("HAMLINK_THREADS");
        cfg.threads = env ? std::max(1, std::atoi(env)) : 1;
    }
    return cfg;
}

Graph load_graph(const std::string& path) {
    std::ostringstream text;
    if (path == "-") {
        text << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open '" + path + "'");
        text << in.rdbuf();
    }
    return parse_graph(text.str());
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& spec) {
    std::vector<std::pair<int, int>> pairs;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw PreconditionError("--pairs expects s1:t1,s2:t2,... , got '" + item + "'");
        try {
            pairs.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
        } catch (const std::exception&) {
            throw PreconditionError("--pairs: '" + item + "' is not a pair of integers");
        }
    }
    if (pairs.empty()) throw PreconditionError("--pairs lists no pairs");
    return pairs;
}

struct Reporter {
    json report;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Reporter(const std::vector<std::string>& command) {
        report["command"] = command;
        report["answer"] = nullptr;
    }

    void stats(const SolverStats& s, const SolverConfig& cfg, PromiseOutcome outcome) {
        report["promise_check"] = outcome == PromiseOutcome::verified  ? "verified"
                                  : outcome == PromiseOutcome::trusted ? "trusted"
                                                                       : "computed";
        report["k"] = cfg.k;
        report["threads"] = cfg.threads;
        report["stats"] = {{"recursion_nodes", s.recursion_nodes},
                           {"collections_tried", s.collections_tried},
                           {"max_cut_size", s.max_cut_size},
                           {"max_depth", s.max_depth}};
    }

    void witness_paths(const Linkage& l) {
        json paths = json::array();
        for (const auto& p : l.paths) paths.push_back(p);
        report["witness"] = {{"paths", paths}};
        for (const auto& p : l.paths) {
            for (std::size_t i = 0; i < p.size(); ++i) std::cerr << (i ? " " : "") << p[i];
            std::cerr << "\n";
        }
    }

    void witness_labels(const Labelling& lab) {
        report["witness"] = {{"labels", lab.labels}};
        for (std::size_t v = 0; v < lab.labels.size(); ++v)
            std::cerr << v << " " << lab.labels[v] << "\n";
    }

    int finish() {
        auto elapsed = std::chrono::steady_clock::now() - start;
        report["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        std::cout << report.dump(2) << "\n";
        return 0;
    }
};

json defect_to_json(const Defect& d) {
    if (d.is_infinite()) return "infinite";
    return d.value();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hamiltonian linkage toolkit for graphs of bounded independence number"};
    app.require_subcommand(1);
    std::vector<std::string> command(argv + 1, argv + argc);

    CommonOptions opt;

    auto* decide = app.add_subcommand("decide", "whole-graph Hamiltonicity decisions");
    decide->require_subcommand(1);
    std::string decide_kind;
    for (const char* kind : {"ham-path", "ham-cycle", "ham-connected"}) {
        auto* sub = decide->add_subcommand(kind);
        add_common(sub, opt);
        sub->callback([&decide_kind, kind] { decide_kind = kind; });
    }

    std::string pairs_spec;
    auto* linkage_cmd = app.add_subcommand("linkage", "Hamiltonian linkage for given pairs");
    linkage_cmd->add_option("--pairs", pairs_spec, "terminal pairs s1:t1,s2:t2,...")->required();
    add_common(linkage_cmd, opt);

    int ell = 1;
    auto* linkedness_cmd =
        app.add_subcommand("linkedness", "is every terminal selection Hamiltonian linked?");
    linkedness_cmd->add_option("--ell", ell, "number of pairs")->required();
    add_common(linkedness_cmd, opt);

    auto* path_cover_cmd =
        app.add_subcommand("path-cover", "can the graph be covered by exactly ell paths?");
    path_cover_cmd->add_option("--ell", ell, "number of paths")->required();
    add_common(path_cover_cmd, opt);

    auto* pc_number_cmd = app.add_subcommand("pc-number", "exact path cover number");
    add_common(pc_number_cmd, opt);

    auto* min_defect_cmd =
        app.add_subcommand("min-defect", "minimum uncovered vertices over all linkages");
    min_defect_cmd->add_option("--pairs", pairs_spec, "terminal pairs s1:t1,...")->required();
    add_common(min_defect_cmd, opt);

    auto* structural_cmd =
        app.add_subcommand("structural", "direct small-independence-number deciders");
    std::string query;
    int uarg = -1, varg = -1;
    bool validate = false;
    structural_cmd
        ->add_option("--query", query,
                     "hp | hp-from | hp-between | pc2 | pc-uv (availability depends on --k)")
        ->required();
    structural_cmd->add_option("-u", uarg, "first vertex");
    structural_cmd->add_option("-v", varg, "second vertex");
    structural_cmd->add_flag("--validate", validate,
                             "cross-check reconstructed deciders against the oracle");
    add_common(structural_cmd, opt);

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground-truth solvers");
    oracle_cmd->require_subcommand(1);
    bool oracle_ham = false, injective = false;
    auto* o_linkage = oracle_cmd->add_subcommand("linkage");
    o_linkage->add_option("--pairs", pairs_spec)->required();
    o_linkage->add_flag("--hamiltonian", oracle_ham, "require full coverage");
    add_common(o_linkage, opt);
    auto* o_defect = oracle_cmd->add_subcommand("min-defect");
    o_defect->add_option("--pairs", pairs_spec)->required();
    add_common(o_defect, opt);
    auto* o_pc = oracle_cmd->add_subcommand("pc-number");
    add_common(o_pc, opt);
    auto* o_linked = oracle_cmd->add_subcommand("ham-linked");
    o_linked->add_option("--ell", ell)->required();
    add_common(o_linked, opt);
    auto* o_lambda = oracle_cmd->add_subcommand("lambda");
    o_lambda->add_flag("--injective", injective);
    add_common(o_lambda, opt);

    auto* gadget_cmd = app.add_subcommand("gadget", "NP-hardness instance transformers");
    gadget_cmd->require_subcommand(1);
    std::string out_path;
    std::string gadget_kind;
    for (const char* kind : {"linkage", "path-cover", "linkedness"}) {
        auto* sub = gadget_cmd->add_subcommand(kind);
        sub->add_option("--ell", ell)->required();
        sub->add_option("-o,--output", out_path, "also write the graph to this file");
        add_common(sub, opt);
        sub->callback([&gadget_kind, kind] { gadget_kind = kind; });
    }

    auto* gen_cmd = app.add_subcommand("gen", "seeded instance generators");
    gen_cmd->require_subcommand(1);
    auto* gen_kk1 = gen_cmd->add_subcommand("kk1free", "clique partition plus random edges");
    int gen_k = 3, gen_n = 10;
    double gen_p = 0.5;
    std::uint64_t seed = 0;
    gen_kk1->add_option("--k", gen_k)->required();
    gen_kk1->add_option("--n", gen_n)->required();
    gen_kk1->add_option("--p", gen_p, "inter-clique edge probability");
    gen_kk1->add_option("--seed", seed);
    gen_kk1->add_option("-o,--output", out_path, "also write the graph to this file");

    auto* lambda_cmd = app.add_subcommand("lambda", "L(2,1) labelling number via path covers");
    bool resolve_exact = false;
    lambda_cmd->add_flag("--injective", injective);
    lambda_cmd->add_flag("--resolve-exact", resolve_exact,
                         "resolve the upper-bound branch with the exhaustive oracle");
    add_common(lambda_cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Reporter reporter(command);
    try {
        SolverConfig cfg = to_config(opt);
        SolverStats stats;

        auto run_decided = [&](const Graph& g, auto&& decision) -> int {
            PromiseOutcome outcome = resolve_promise(g, cfg);
            decision();
            reporter.stats(stats, cfg, outcome);
            return reporter.finish();
        };

        if (decide->parsed()) {
            Graph g = load_graph(opt.input);
            return run_decided(g, [&] {
                bool ans = decide_kind == "ham-path"    ? ham_path(g, cfg, &stats)
                           : decide_kind == "ham-cycle" ? ham_cycle(g, cfg, &stats)
                                                        : ham_connected(g, cfg, &stats);
                reporter.report["answer"] = ans;
            });
        }
        if (linkage_cmd->parsed()) {
            Graph g = load_graph(opt.input);
            LinkageInstance inst{g, parse_pairs(pairs_spec)};
            return run_decided(g, [&] {
                bool ans = ham_linkage(inst, cfg, &stats);
                reporter.report["answer"] = ans;
                if (ans && opt.witness) {
                    auto w = construct_ham_linkage(inst, cfg, &stats);
                    if (!w) throw InvariantViolation("decision true but no witness constructed");
                    reporter.witness_paths(*w);
                }
            });
        }
        if (linkedness_cmd->parsed()) {
            Graph g = load_graph(opt.input);
            if (g.vertex_count() < 2 * ell)
                std::cerr << "note: fewer than 2*ell vertices; not linked by definition\n";
            return run_decided(
                g, [&] { reporter.report["answer"] = ham_linkedness(g, ell, cfg, &stats); });
        }
        if (path_cover_cmd->parsed()) {
            Graph g = load_graph(opt.input);
            return run_decided(
                g, [&] { reporter.report["answer"] = path_cover_exists(g, ell, cfg, &stats); });
        }
        if (pc_number_cmd->parsed()) {
            Graph g = load_graph(opt.input);
            return run_decided(
                g, [&] { reporter.report["answer"] = path_cover_number(g, cfg, &stats); });
        }
        if (min_defect_cmd->parsed()) {
            Graph g = load_graph(opt.input);
            LinkageInstance inst{g, parse_pairs(pairs_spec)};
            return run_decided(g, [&] {
                reporter.report["answer"] = defect_to_json(min_defect(inst, cfg, &stats));
            });
        }
        if (structural_cmd->parsed()) {
            Graph g = load_graph(opt.input);
            StructuralOptions sopt;
            sopt.validate = validate;
            int k = opt.k;
            auto need = [&](int v, const char* name) {
                if (v < 0) throw PreconditionError(std::string("query requires ") + name);
                return v;
            };
            bool ans;
            if (query == "hp" && k == 4) {
                auto r = ham_path_4k1(g, sopt);
                ans = r.has_ham_path;
                reporter.report["pc2_guarantee"] = r.pc2_guarantee;
            } else if (query == "hp" && k == 5) {
                ans = ham_path_5k1(g, sopt);
            } else if (query == "hp-from" && k == 3) {
                ans = ham_path_from_3k1(g, need(uarg, "-u"), sopt);
            } else if (query == "hp-from" && k == 4) {
                ans = ham_path_from_4k1(g, need(uarg, "-u"), sopt);
            } else if (query == "hp-between" && k == 3) {
                ans = ham_path_between_3k1(g, need(uarg, "-u"), need(varg, "-v"), sopt);
            } else if (query == "pc2" && k == 3) {
                ans = pc2_from_pair_3k1(g, need(uarg, "-u"), need(varg, "-v"), sopt);
            } else if (query == "pc-uv" && k == 4) {
                ans = pc_uv_4k1(g, need(uarg, "-u"), need(varg, "-v"), sopt);
            } else {
                throw PreconditionError(
                    "unsupported --query/--k combination; see README for the matrix");
            }
            reporter.report["answer"] = ans;
            reporter.report["promise_check"] = "verified";
            reporter.report["k"] = k;
            return reporter.finish();
        }
        if (oracle_cmd->parsed()) {
            Graph g = load_graph(opt.input);
            OracleLimits limits = cfg.oracle;
            if (o_linkage->parsed()) {
                LinkageInstance inst{g, parse_pairs(pairs_spec)};
                auto w = oracle_linkage(inst, oracle_ham, limits);
                reporter.report["answer"] = w.has_value();
                if (w && opt.witness) reporter.witness_paths(*w);
            } else if (o_defect->parsed()) {
                LinkageInstance inst{g, parse_pairs(pairs_spec)};
                reporter.report["answer"] = defect_to_json(oracle_min_defect(inst, limits));
            } else if (o_pc->parsed()) {
                reporter.report["answer"] = oracle_path_cover_number(g, limits);
            } else if (o_linked->parsed()) {
                reporter.report["answer"] = oracle_is_ham_linked(g, ell, limits);
            } else {
                reporter.report["answer"] = oracle_lambda(g, injective, limits);
            }
            return reporter.finish();
        }
        if (gadget_cmd->parsed()) {
            Graph g = load_graph(opt.input);
            Graph out;
            std::vector<std::string> comments;
            if (gadget_kind == "linkage") {
                auto inst = gadget_linkage(g, ell);
                out = inst.graph;
                std::string t = "terminal pairs:";
                json jp = json::array();
                for (auto [s, tt] : inst.pairs) {
                    t += " " + std::to_string(s) + ":" + std::to_string(tt);
                    jp.push_back({s, tt});
                }
                comments.push_back(t);
                reporter.report["pairs"] = jp;
            } else if (gadget_kind == "path-cover") {
                auto pg = gadget_path_cover(g, ell);
                out = pg.graph;
                comments.push_back("gadget vertices: a=" + std::to_string(pg.a) +
                                   " b=" + std::to_string(pg.b) + " c=" + std::to_string(pg.c) +
                                   " d=" + std::to_string(pg.d.front()) + ".." +
                                   std::to_string(pg.d.back()));
                reporter.report["gadget"] = {{"a", pg.a}, {"b", pg.b}, {"c", pg.c}, {"d", pg.d}};
            } else {
                auto lg = gadget_linkedness(g, ell);
                out = lg.graph;
                comments.push_back("universal vertices: " + std::to_string(lg.added.front()) +
                                   ".." + std::to_string(lg.added.back()));
                reporter.report["added"] = lg.added;
            }
            std::string text = format_edge_list(out, comments);
            reporter.report["answer"] = {{"n", out.vertex_count()}, {"m", out.edge_count()}};
            reporter.report["graph_text"] = text;
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                f << text;
            }
            return reporter.finish();
        }
        if (gen_cmd->parsed()) {
            Graph out = random_kk1_free(gen_k, gen_n, gen_p, seed);
            std::string text = format_edge_list(
                out, {"kk1free k=" + std::to_string(gen_k) + " n=" + std::to_string(gen_n) +
                      " p=" + std::to_string(gen_p) + " seed=" + std::to_string(seed)});
            reporter.report["answer"] = {{"n", out.vertex_count()}, {"m", out.edge_count()}};
            reporter.report["graph_text"] = text;
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                f << text;
            }
            return reporter.finish();
        }
        if (lambda_cmd->parsed()) {
            Graph g = load_graph(opt.input);
            LambdaResult r = injective ? lambda_prime_via_pc(g, cfg) : lambda_via_pc(g, cfg);
            if (!r.exact && resolve_exact) {
                reporter.report["answer"] = oracle_lambda(g, false, cfg.oracle);
                reporter.report["resolved_by"] = "oracle";
            } else if (r.exact) {
                reporter.report["answer"] = r.value;
            } else {
                reporter.report["answer"] = {{"upper_bound", r.value}};
            }
            if (r.has_witness && opt.witness) reporter.witness_labels(r.witness);
            return reporter.finish();
        }
        throw PreconditionError("no subcommand selected");
    } catch (const PromiseError& e) {
        std::cerr << "promise violation: " << e.what() << "\n";
        return 3;
    } catch (const SizeGuardError& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
