// spectree: spectral conditions for bounded-degree and bounded-leaf spanning
// trees. Subcommands: spectra, closure, oracle, construct, check, sweep,
// verify. Graphs travel as graph6 lines; machine output is JSON lines on
// stdout, diagnostics go to stderr. Exit codes: 0 success, 1 counterexample
// found (verify) or refuted soundness (check --sound), 2 usage errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spectree/spectree.hpp"

namespace st = spectree;
using ordered_json = nlohmann::ordered_json;

namespace {

enum class Format { Json, Human, Csv };

struct InputOpts {
    std::string file;
    std::vector<std::string> inline_graphs;
};

void add_input_opts(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("file", in.file, "graph6 input file, '-' for standard input (default)");
    cmd->add_option("-g,--graph", in.inline_graphs, "inline graph6 string (repeatable)");
}

void add_format_opt(CLI::App* cmd, Format& fmt, bool with_csv = false) {
    std::vector<std::pair<std::string, Format>> map = {{"json", Format::Json},
                                                       {"human", Format::Human}};
    if (with_csv) map.emplace_back("csv", Format::Csv);
    cmd->add_option("--format", fmt, "output format")
        ->transform(CLI::CheckedTransformer(map, CLI::ignore_case));
}

std::vector<st::Graph> load_graphs(const InputOpts& in) {
    std::vector<st::Graph> graphs;
    if (!in.inline_graphs.empty()) {
        if (!in.file.empty())
            throw CLI::ValidationError("input", "give either a file or --graph, not both");
        for (const auto& s : in.inline_graphs) graphs.push_back(st::decode_graph6(s));
        return graphs;
    }
    std::ifstream fs;
    std::istream* is = &std::cin;
    if (!in.file.empty() && in.file != "-") {
        fs.open(in.file);
        if (!fs) throw CLI::ValidationError("input", "cannot open " + in.file);
        is = &fs;
    }
    while (auto g = st::read_graph6_line(*is)) graphs.push_back(*g);
    return graphs;
}

ordered_json rat_json(const st::Rat& r) {
    if (r.den() == 1) return ordered_json(r.num());
    return ordered_json(r.str());
}

ordered_json rat_entry_json(const st::RatEntry& e) {
    return ordered_json{{"applicable", e.applicable}, {"value", rat_json(e.value)}};
}

ordered_json spectral_entry_json(const st::SpectralEntry& e) {
    if (!e.applicable) return ordered_json{{"applicable", false}};
    return ordered_json{{"applicable", true}, {"value", e.value}, {"tolerance", e.tolerance}};
}

ordered_json bound_entry_json(const st::BoundEntry& e) {
    if (!e.applicable) return ordered_json{{"applicable", false}};
    return ordered_json{{"applicable", true}, {"value", e.value}, {"equality", e.equality}};
}

ordered_json edges_json(const std::vector<std::pair<int, int>>& edges) {
    ordered_json arr = ordered_json::array();
    for (auto [u, v] : edges) arr.push_back(ordered_json::array({u, v}));
    return arr;
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

// ---- spectra --------------------------------------------------------------

struct SpectraOpts {
    InputOpts in;
    double tol = st::kSpectralTol;
    double margin = st::kDecisionMargin;
    int floor_t = 1;
    bool bounds = false;
    Format fmt = Format::Json;
};

int run_spectra(const SpectraOpts& o) {
    bool csv_header = false;
    for (const st::Graph& g : load_graphs(o.in)) {
        st::SpectralSummary s = st::spectral_summary(g, o.tol);
        if (o.fmt == Format::Human) {
            std::cout << st::encode_graph6(g) << ": n=" << g.order() << " e=" << g.edge_count()
                      << " rho=" << s.rho << " q=" << s.q << "\n";
            continue;
        }
        if (o.fmt == Format::Csv) {
            if (!csv_header) {
                std::cout << "graph6,n,edges,rho,q\n";
                csv_header = true;
            }
            std::cout << st::encode_graph6(g) << "," << g.order() << "," << g.edge_count() << ","
                      << ordered_json(s.rho).dump() << "," << ordered_json(s.q).dump() << "\n";
            continue;
        }
        ordered_json j{{"graph6", st::encode_graph6(g)},
                       {"n", g.order()},
                       {"edges", g.edge_count()},
                       {"rho", s.rho},
                       {"q", s.q},
                       {"tolerance", s.tolerance},
                       {"iterations", s.iterations_used}};
        if (o.bounds) {
            st::BoundReport r = st::classical_bounds(g, o.floor_t, o.tol, o.margin);
            j["bounds"] = ordered_json{{"degreeFloor", o.floor_t},
                                       {"connected", r.connected},
                                       {"regular", r.regular},
                                       {"semiRegular", r.semi_regular},
                                       {"hongUpper", bound_entry_json(r.hong_upper)},
                                       {"degreeSquareLower", bound_entry_json(r.degree_square_lower)},
                                       {"edgeGeomLower", bound_entry_json(r.edge_geom_lower)},
                                       {"qUpper", bound_entry_json(r.q_upper)},
                                       {"qLower", bound_entry_json(r.q_lower)},
                                       {"equalityMargin", o.margin}};
        }
        emit(j);
    }
    return 0;
}

// ---- closure --------------------------------------------------------------

struct ClosureOpts {
    InputOpts in;
    std::string kind = "ktree";
    int k = 2, t = 1, level = -1;
    Format fmt = Format::Json;
};

int run_closure(const ClosureOpts& o) {
    for (const st::Graph& g : load_graphs(o.in)) {
        ordered_json j{{"graph6", st::encode_graph6(g)}, {"kind", o.kind}};
        try {
            st::ClosureTrace tr;
            if (o.kind == "raw") {
                if (o.level < 0) throw std::invalid_argument("raw closure needs --level");
                tr = st::l_closure(g, o.level);
            } else if (o.kind == "ktree") {
                tr = st::ktree_closure(g, o.k, o.t);
                j["k"] = o.k;
                j["t"] = o.t;
            } else {
                tr = st::kended_closure(g);
            }
            j["level"] = tr.l;
            j["addedEdges"] = edges_json(tr.added_edges);
            j["result"] = st::encode_graph6(tr.result);
            if (o.fmt == Format::Human) {
                std::cout << st::encode_graph6(g) << " -> " << st::encode_graph6(tr.result)
                          << " (level " << tr.l << ", +" << tr.added_edges.size() << " edges)\n";
                continue;
            }
        } catch (const std::exception& e) {
            j["error"] = e.what();
            if (o.fmt == Format::Human) {
                std::cout << st::encode_graph6(g) << " -> error: " << e.what() << "\n";
                continue;
            }
        }
        emit(j);
    }
    return 0;
}

// ---- oracle ---------------------------------------------------------------

struct OracleOpts {
    InputOpts in;
    long long budget = st::kDefaultNodeBudget;
    bool witness = false;
    Format fmt = Format::Json;
};

int run_oracle(const OracleOpts& o) {
    for (const st::Graph& g : load_graphs(o.in)) {
        ordered_json j{{"graph6", st::encode_graph6(g)}, {"n", g.order()}};
        bool connected = g.order() > 0 && st::is_connected(g);
        j["connected"] = connected;
        if (!connected || g.order() < 2) {
            j["hamiltonPath"] = g.order() == 1;
            j["minMaxDegree"] = nullptr;
            j["minLeaves"] = nullptr;
        } else {
            try {
                auto [dstar, dcert] = st::min_max_degree_spanning_tree(g, o.budget);
                auto [lstar, lcert] = st::min_leaf_spanning_tree(g, o.budget);
                j["hamiltonPath"] = st::has_hamilton_path(g);
                j["minMaxDegree"] = dstar;
                j["minLeaves"] = lstar;
                if (o.witness) {
                    j["minMaxDegreeTree"] = edges_json(dcert.edges);
                    j["minLeavesTree"] = edges_json(lcert.edges);
                }
            } catch (const st::OracleBudgetError& e) {
                j["error"] = e.what();
            }
        }
        j["budget"] = o.budget;
        if (o.fmt == Format::Human) {
            std::cout << st::encode_graph6(g) << ": connected=" << j["connected"].dump()
                      << " hamiltonPath=" << j.value("hamiltonPath", ordered_json()).dump()
                      << " minMaxDegree=" << j["minMaxDegree"].dump()
                      << " minLeaves=" << j["minLeaves"].dump() << "\n";
        } else {
            emit(j);
        }
    }
    return 0;
}

// ---- construct ------------------------------------------------------------

struct ConstructOpts {
    std::string family;
    int n = 0, k = 0, t = 0, r = 0, d = 0;
    std::string seed_graph;
};

int run_construct(const ConstructOpts& o) {
    st::Graph g;
    if (o.family == "complete") g = st::complete(o.n);
    else if (o.family == "empty") g = st::empty_graph(o.n);
    else if (o.family == "path") g = st::path_graph(o.n);
    else if (o.family == "cycle") g = st::cycle_graph(o.n);
    else if (o.family == "star") g = st::star(o.n - 1);  // --n is the order
    else if (o.family == "complete-bipartite") g = st::complete_bipartite(o.r, o.n - o.r);
    else {
        auto id = st::family_from_name(o.family);
        if (!id) throw CLI::ValidationError("--family", "unknown family " + o.family);
        st::FamilySpec spec{*id, o.n, o.k, o.t, o.r, o.d};
        if (!o.seed_graph.empty()) spec.seed = st::decode_graph6(o.seed_graph);
        g = st::construct_family(spec);
    }
    std::cout << st::encode_graph6(g) << "\n";
    return 0;
}

// ---- check ----------------------------------------------------------------

struct CheckOpts {
    InputOpts in;
    std::string theorem;
    int k = 2, t = 1;
    bool sound = false;
    long long budget = st::kDefaultNodeBudget;
    double tol = st::kSpectralTol;
    double margin = st::kDecisionMargin;
    Format fmt = Format::Json;
};

int run_check(const CheckOpts& o) {
    auto id = st::theorem_from_name(o.theorem);
    if (!id) throw CLI::ValidationError("--theorem", "unknown theorem " + o.theorem);
    bool refuted = false;
    for (const st::Graph& g : load_graphs(o.in)) {
        st::TheoremVerdict v = st::evaluate(*id, g, o.k, o.t, {o.tol, o.margin});
        ordered_json pres = ordered_json::array();
        for (const auto& p : v.preconditions)
            pres.push_back(ordered_json{{"name", p.name},
                                        {"required", p.required},
                                        {"actual", p.actual},
                                        {"pass", p.pass}});
        ordered_json j{{"graph6", st::encode_graph6(g)},
                       {"theorem", st::theorem_name(*id)},
                       {"k", o.k},
                       {"t", o.t},
                       {"conclusion", st::conclusion_name(v.conclusion)},
                       {"preconditions", pres}};
        if (!v.exception_detail.empty()) j["exceptionDetail"] = v.exception_detail;
        if (v.comparison.evaluated)
            j["comparison"] = ordered_json{{"quantity", v.comparison.quantity},
                                           {"relation", v.comparison.relation},
                                           {"measured", v.comparison.measured},
                                           {"threshold", v.comparison.threshold},
                                           {"margin", v.comparison.margin}};
        if (o.sound) {
            try {
                bool sound = st::soundness_check(v, g, o.budget);
                j["sound"] = sound;
                refuted = refuted || !sound;
            } catch (const st::OracleBudgetError& e) {
                j["sound"] = nullptr;
                j["error"] = e.what();
            }
        }
        j["tolerance"] = o.tol;
        j["margin"] = o.margin;
        if (o.fmt == Format::Human) {
            std::cout << st::encode_graph6(g) << ": " << st::conclusion_name(v.conclusion);
            if (!v.exception_detail.empty()) std::cout << " (" << v.exception_detail << ")";
            if (o.sound && j.contains("sound")) std::cout << " sound=" << j["sound"].dump();
            std::cout << "\n";
        } else {
            emit(j);
        }
    }
    return refuted ? 1 : 0;
}

// ---- sweep ----------------------------------------------------------------

struct SweepOpts {
    int k = 2, t = 1, n_from = 0, n_to = 0;
    bool spectral = false;
    double tol = st::kSpectralTol;
    Format fmt = Format::Json;
};

int run_sweep(const SweepOpts& o) {
    int from = o.n_from, to = o.n_to > 0 ? o.n_to : o.n_from;
    if (from <= 0) throw CLI::ValidationError("--n-from", "need a positive starting order");
    bool csv_header = false;
    for (int n = from; n <= to; ++n) {
        st::ThresholdTable tb = st::thresholds(n, o.k, o.t, o.spectral, o.tol);
        if (o.fmt == Format::Csv) {
            if (!csv_header) {
                std::cout << "n,k,t,edgeThresholdKTree,edgeThresholdKEnded,fValue,fSqrt,"
                             "ktreeSmallRhoBound,ktreeQBound,kendedRhoBound,rhoAnchor,qAnchor";
                if (o.spectral) std::cout << ",rhoHStar,qHStar,qGStar";
                std::cout << "\n";
                csv_header = true;
            }
            std::cout << n << "," << o.k << "," << o.t << "," << tb.edge_threshold_ktree.value.str()
                      << "," << tb.edge_threshold_kended.value.str() << ","
                      << tb.f_value.value.str() << ","
                      << (tb.f_value.applicable ? ordered_json(tb.f_sqrt).dump() : "") << ","
                      << ordered_json(tb.ktree_small_rho_bound).dump() << ","
                      << tb.ktree_q_bound.str() << ","
                      << (tb.kended_rho_bound_sq.applicable
                              ? ordered_json(tb.kended_rho_bound).dump()
                              : "")
                      << "," << ordered_json(tb.rho_anchor).dump() << ","
                      << ordered_json(tb.q_anchor).dump();
            if (o.spectral)
                std::cout << ","
                          << (tb.rho_h_star.applicable ? ordered_json(tb.rho_h_star.value).dump()
                                                       : "")
                          << ","
                          << (tb.q_h_star.applicable ? ordered_json(tb.q_h_star.value).dump() : "")
                          << ","
                          << (tb.q_g_star.applicable ? ordered_json(tb.q_g_star.value).dump() : "");
            std::cout << "\n";
            continue;
        }
        ordered_json j{{"n", n},
                       {"k", o.k},
                       {"t", o.t},
                       {"edgeThresholdKTree", rat_entry_json(tb.edge_threshold_ktree)},
                       {"edgeThresholdKEnded", rat_entry_json(tb.edge_threshold_kended)},
                       {"nMinKTreeRho", rat_json(tb.n_min_ktree_rho)},
                       {"nMinKTreeQ", rat_json(tb.n_min_ktree_q)},
                       {"nMinKTreeRhoPrior", rat_json(tb.n_min_ktree_rho_prior)},
                       {"improvementGap", rat_json(tb.improvement_gap)},
                       {"nMinKTreeCompRho", rat_json(tb.n_min_ktree_comp_rho)},
                       {"nMinKTreeSmall", rat_json(tb.n_min_ktree_small)},
                       {"nMinKEndedQ", rat_json(tb.n_min_kended_q)},
                       {"nMinKEndedCompRho", rat_json(tb.n_min_kended_comp_rho)},
                       {"nMinKEndedCompRhoT1", rat_json(tb.n_min_kended_comp_rho_t1)},
                       {"fValue", rat_entry_json(tb.f_value)},
                       {"ktreeSmallRhoBoundSq", rat_json(tb.ktree_small_rho_bound_sq)},
                       {"ktreeSmallRhoBound", tb.ktree_small_rho_bound},
                       {"ktreeQBound", rat_json(tb.ktree_q_bound)},
                       {"kendedRhoBoundSq", rat_entry_json(tb.kended_rho_bound_sq)},
                       {"rhoAnchor", tb.rho_anchor},
                       {"qAnchor", tb.q_anchor},
                       {"tolerance", o.tol}};
        if (tb.f_value.applicable) j["fSqrt"] = tb.f_sqrt;
        if (tb.kended_rho_bound_sq.applicable) j["kendedRhoBound"] = tb.kended_rho_bound;
        if (o.spectral) {
            j["rhoHStar"] = spectral_entry_json(tb.rho_h_star);
            j["qHStar"] = spectral_entry_json(tb.q_h_star);
            j["qGStar"] = spectral_entry_json(tb.q_g_star);
        }
        if (o.fmt == Format::Human) {
            std::cout << "n=" << n << " edge thresholds " << tb.edge_threshold_ktree.value.str()
                      << "/" << tb.edge_threshold_kended.value.str() << " f="
                      << tb.f_value.value.str() << "\n";
        } else {
            emit(j);
        }
    }
    return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOpts {
    std::string suite;
    st::SuiteParams params;
    std::string theorem;
    Format fmt = Format::Json;
};

int run_verify(VerifyOpts o) {
    auto id = st::suite_from_name(o.suite);
    if (!id) throw CLI::ValidationError("--suite", "unknown suite " + o.suite);
    if (!o.theorem.empty()) {
        auto th = st::theorem_from_name(o.theorem);
        if (!th) throw CLI::ValidationError("--theorem", "unknown theorem " + o.theorem);
        o.params.theorem = *th;
    }
    st::VerificationReport rep = st::run_suite(*id, o.params);
    ordered_json ces = ordered_json::array();
    for (const auto& ce : rep.counterexamples)
        ces.push_back(ordered_json{{"graph6", ce.graph6}, {"detail", ce.detail}});
    ordered_json stats = ordered_json::object();
    for (const auto& [key, val] : rep.stats) stats[key] = std::stoll(val);
    ordered_json j{{"suite", rep.suite},
                   {"domain", rep.domain},
                   {"graphsChecked", rep.graphs_checked},
                   {"budgetExhausted", rep.budget_exhausted},
                   {"counterexamples", ces},
                   {"stats", stats},
                   {"seed", o.params.seed},
                   {"tolerance", o.params.tol},
                   {"margin", o.params.margin}};
    if (o.fmt == Format::Human) {
        std::cout << rep.suite << ": " << rep.graphs_checked << " graphs, "
                  << rep.counterexamples.size() << " counterexamples, " << rep.budget_exhausted
                  << " budget-exhausted\n";
        for (const auto& ce : rep.counterexamples)
            std::cout << "  " << ce.graph6 << "  " << ce.detail << "\n";
    } else {
        emit(j);
    }
    std::cerr << rep.suite << ": " << rep.graphs_checked << " graphs in " << rep.wall_seconds
              << "s with " << o.params.jobs << " jobs\n";
    return rep.counterexamples.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral conditions for spanning trees with bounded degree or leaf count"};
    app.require_subcommand(1);

    SpectraOpts spectra;
    auto* c_spectra = app.add_subcommand("spectra", "adjacency and signless-Laplacian spectral radii");
    add_input_opts(c_spectra, spectra.in);
    c_spectra->add_option("--tol", spectra.tol, "power-iteration tolerance");
    c_spectra->add_option("--margin", spectra.margin, "equality margin for bound reports");
    c_spectra->add_flag("--bounds", spectra.bounds, "include the classical bound report");
    c_spectra->add_option("--floor", spectra.floor_t, "degree floor for the upper bound on rho");
    add_format_opt(c_spectra, spectra.fmt, /*with_csv=*/true);

    ClosureOpts closure;
    auto* c_closure = app.add_subcommand("closure", "degree-sum closures");
    add_input_opts(c_closure, closure.in);
    c_closure->add_option("--kind", closure.kind, "ktree | kended | raw")
        ->check(CLI::IsMember({"ktree", "kended", "raw"}));
    c_closure->add_option("-k,--k", closure.k, "degree cap for the ktree closure level");
    c_closure->add_option("-t,--t", closure.t, "connectivity parameter");
    c_closure->add_option("--level", closure.level, "explicit level for --kind raw");
    add_format_opt(c_closure, closure.fmt);

    OracleOpts oracle;
    auto* c_oracle = app.add_subcommand("oracle", "exact spanning-tree invariants");
    add_input_opts(c_oracle, oracle.in);
    c_oracle->add_option("--budget", oracle.budget, "search node budget");
    c_oracle->add_flag("--witness", oracle.witness, "include witness trees");
    add_format_opt(c_oracle, oracle.fmt);

    ConstructOpts construct;
    auto* c_construct = app.add_subcommand("construct", "build a named graph family member");
    c_construct->add_option("--family", construct.family, "family name")->required();
    c_construct->add_option("-n,--n", construct.n, "order");
    c_construct->add_option("-k,--k", construct.k, "degree/leaf parameter");
    c_construct->add_option("-t,--t", construct.t, "connectivity parameter");
    c_construct->add_option("-r,--r", construct.r, "arbitrary-block size");
    c_construct->add_option("-d,--d", construct.d, "regularity degree");
    c_construct->add_option("--seed-graph", construct.seed_graph,
                            "graph6 for the arbitrary block (default: clique)");

    CheckOpts check;
    auto* c_check = app.add_subcommand("check", "evaluate a spectral sufficient condition");
    add_input_opts(c_check, check.in);
    c_check->add_option("--theorem", check.theorem, "condition identifier")->required();
    c_check->add_option("-k,--k", check.k, "degree/leaf parameter");
    c_check->add_option("-t,--t", check.t, "connectivity parameter");
    c_check->add_flag("--sound", check.sound, "cross-check the verdict against the oracle");
    c_check->add_option("--budget", check.budget, "oracle node budget");
    c_check->add_option("--tol", check.tol, "spectral tolerance");
    c_check->add_option("--margin", check.margin, "tie margin for threshold comparisons");
    add_format_opt(c_check, check.fmt);

    SweepOpts sweep;
    auto* c_sweep = app.add_subcommand("sweep", "threshold tables over a range of orders");
    c_sweep->add_option("-k,--k", sweep.k, "degree/leaf parameter");
    c_sweep->add_option("-t,--t", sweep.t, "connectivity parameter");
    c_sweep->add_option("--n-from", sweep.n_from, "first order")->required();
    c_sweep->add_option("--n-to", sweep.n_to, "last order (default: first)");
    c_sweep->add_flag("--spectral", sweep.spectral, "include computed family spectra");
    c_sweep->add_option("--tol", sweep.tol, "spectral tolerance");
    add_format_opt(c_sweep, sweep.fmt, /*with_csv=*/true);

    VerifyOpts verify;
    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("--suite", verify.suite, "suite identifier")->required();
    c_verify->add_option("--n-max", verify.params.n_max, "order cap (0 = suite default)");
    c_verify->add_option("-k,--k", verify.params.k, "restrict to one k (0 = suite grid)");
    c_verify->add_option("-t,--t", verify.params.t, "restrict to one t (0 = suite grid)");
    c_verify->add_option("--seed", verify.params.seed, "random seed");
    c_verify->add_option("--samples", verify.params.samples, "samples per result");
    c_verify->add_option("--jobs", verify.params.jobs, "worker threads")
        ->envname("SPECTREE_JOBS");
    c_verify->add_option("--budget", verify.params.budget, "oracle node budget");
    c_verify->add_option("--theorem", verify.theorem, "restrict the soundness hunt");
    c_verify->add_option("--tol", verify.params.tol, "spectral tolerance");
    c_verify->add_option("--margin", verify.params.margin, "tie margin");
    add_format_opt(c_verify, verify.fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_spectra) return run_spectra(spectra);
        if (*c_closure) return run_closure(closure);
        if (*c_oracle) return run_oracle(oracle);
        if (*c_construct) return run_construct(construct);
        if (*c_check) return run_check(check);
        if (*c_sweep) return run_sweep(sweep);
        if (*c_verify) return run_verify(verify);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
