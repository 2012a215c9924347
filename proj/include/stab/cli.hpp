#pragma once

#include "stab/dimacs.hpp"
#include "stab/json_io.hpp"
#include "stab/laws.hpp"
#include "stab/reductions.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace stab {

namespace cli_detail {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

inline Budget budget_from_env()
{
    Budget b;
    if (const char* s = std::getenv("STAB_NODE_BUDGET"))
        b.max_nodes = std::atol(s);
    if (const char* s = std::getenv("STAB_TIME_BUDGET_S"))
        b.max_seconds = std::atof(s);
    return b;
}

inline Graph load_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open graph file: " + path);
    return parse_dimacs(in);
}

inline CnfFormula load_cnf(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open CNF file: " + path);
    return parse_dimacs_cnf(in);
}

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
    out << text;
}

// "all", "a-b,c-d", or "@listfile" (one a-b pair per line)
inline std::vector<Edge> parse_edge_selector(const std::string& sel,
    const Graph& g)
{
    if (sel == "all")
        return g.edges();
    std::vector<std::string> items;
    if (!sel.empty() && sel[0] == '@') {
        std::ifstream in(sel.substr(1));
        if (!in)
            throw std::runtime_error(
                "cannot open edge list file: " + sel.substr(1));
        std::string line;
        while (std::getline(in, line))
            if (!line.empty())
                items.push_back(line);
    } else {
        std::stringstream ss(sel);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                items.push_back(item);
    }
    std::vector<Edge> out;
    for (const auto& item : items) {
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw std::runtime_error("bad edge selector item: " + item);
        int a = std::stoi(item.substr(0, dash));
        int b = std::stoi(item.substr(dash + 1));
        out.push_back(make_edge(a, b));
    }
    return out;
}

inline void print_report_human(std::ostream& out, const StabilityReport& r)
{
    out << "xi = " << to_string(r.xi) << "\n";
    out << "value = " << r.value << "\n";
    auto dump = [&](const char* title,
                    const std::vector<ElementStatus>& list) {
        out << title << ":\n";
        for (const auto& s : list)
            out << "  " << s.element.to_string() << ": " << s.status_word()
                << " (delta " << s.delta << ")\n";
    };
    dump("edges", r.edge_statuses);
    dump("vertices", r.vertex_statuses);
    dump("nonedges", r.nonedge_statuses);
    const Verdicts& v = r.verdicts;
    out << "verdicts: stable=" << v.stable
        << " vertex-stable=" << v.vertex_stable << " unfrozen=" << v.unfrozen
        << " vertex-unfrozen=" << v.vertex_unfrozen
        << " two-way-stable=" << v.two_way_stable
        << " vertex-two-way-stable=" << v.vertex_two_way_stable << "\n";
    if (v.k)
        out << "k = " << *v.k << ": k-stable=" << v.k_stable
            << " k-vertex-stable=" << v.k_vertex_stable
            << " k-unfrozen=" << v.k_unfrozen
            << " k-two-way-stable=" << v.k_two_way_stable << "\n";
}

inline bool verdict_by_name(const StabilityReport& r, const std::string& name)
{
    const Verdicts& v = r.verdicts;
    if (name == "stable")
        return v.stable;
    if (name == "vertex-stable")
        return v.vertex_stable;
    if (name == "unfrozen")
        return v.unfrozen;
    if (name == "vertex-unfrozen")
        return v.vertex_unfrozen;
    if (name == "two-way-stable")
        return v.two_way_stable;
    if (name == "vertex-two-way-stable")
        return v.vertex_two_way_stable;
    if (name == "k-stable")
        return v.k_stable;
    if (name == "k-vertex-stable")
        return v.k_vertex_stable;
    if (name == "k-unfrozen")
        return v.k_unfrozen;
    if (name == "k-two-way-stable")
        return v.k_two_way_stable;
    throw std::runtime_error("unknown verdict name: " + name);
}

inline void emit_construction(const std::string& out_path,
    const ConstructionResult& r, std::ostream& out)
{
    if (out_path.empty()) {
        out << write_dimacs(r.graph);
    } else {
        write_file(out_path, write_dimacs(r.graph));
        write_file(out_path + ".provenance.json",
            provenance_to_json(r).dump(2) + "\n");
    }
}

} // namespace cli_detail

// The `stab` command line: analyze / gadget / reduce / formula / verify.
inline int run_cli(std::vector<std::string> args,
    std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    using namespace cli_detail;
    CLI::App app{"graph number stability toolkit"};
    app.require_subcommand(1);

    // ---- analyze ----
    auto* analyze_cmd
        = app.add_subcommand("analyze", "per-element stability report");
    std::string an_xi = "chi", an_path, an_expect;
    int an_k = -1;
    bool an_json = false;
    analyze_cmd->add_option("--xi", an_xi, "graph number")
        ->check(CLI::IsMember({"alpha", "beta", "chi", "omega"}));
    analyze_cmd->add_option("--k", an_k, "requested k for k-verdicts");
    analyze_cmd->add_flag("--json", an_json, "JSON output");
    analyze_cmd->add_option(
        "--expect", an_expect, "exit 1 unless this verdict holds");
    analyze_cmd->add_option("graph", an_path, "DIMACS graph file")
        ->required();

    // ---- gadget ----
    auto* gadget_cmd
        = app.add_subcommand("gadget", "apply a gadget construction");
    std::string gd_name, gd_edges = "all", gd_out, gd_path;
    gadget_cmd
        ->add_option("name", gd_name,
            "one of: beta-stabilize, chi-stabilize, two-way")
        ->required()
        ->check(
            CLI::IsMember({"beta-stabilize", "chi-stabilize", "two-way"}));
    gadget_cmd->add_option(
        "--edges", gd_edges, "edge selector: all, a-b,c-d, or @file");
    gadget_cmd->add_option("--out", gd_out,
        "output DIMACS path (provenance JSON goes to <out>.provenance.json)");
    gadget_cmd->add_option("graph", gd_path, "DIMACS graph file")->required();

    // ---- reduce ----
    auto* reduce_cmd
        = app.add_subcommand("reduce", "run a reduction pipeline");
    std::string rd_name, rd_out;
    std::vector<std::string> rd_inputs;
    bool rd_verify = false;
    std::string rd_phis, rd_psis;
    reduce_cmd
        ->add_option("pipeline", rd_name,
            "one of: cai-meyer, stable3cnf-to-vstab, vstab-to-stab, "
            "union-double, unfrozen-to-twoway, beta-stability-compare, "
            "beta-unfrozenness-compare, beta-twoway, gjs-3col, "
            "chi-unfrozenness-compare, compare-colorability")
        ->required();
    reduce_cmd->add_option("inputs", rd_inputs, "input files");
    reduce_cmd->add_option("--out", rd_out, "output path");
    reduce_cmd->add_option(
        "--phis", rd_phis, "comma-separated CNF files (first list)");
    reduce_cmd->add_option(
        "--psis", rd_psis, "comma-separated CNF files (second list)");
    reduce_cmd->add_flag("--verify", rd_verify,
        "re-derive the pipeline's biconditional with exact solvers; exit 1 "
        "on mismatch");

    // ---- formula ----
    auto* formula_cmd
        = app.add_subcommand("formula", "CNF constructions and queries");
    std::string fm_name, fm_out;
    std::vector<std::string> fm_inputs;
    int fm_vars = 3, fm_clauses = 4;
    uint64_t fm_seed = 1;
    formula_cmd
        ->add_option("construction", fm_name,
            "one of: to3cnf, unsat-padding, sat-to-stable, or2, random, "
            "sat, stability")
        ->required();
    formula_cmd->add_option("inputs", fm_inputs, "input CNF files");
    formula_cmd->add_option("--out", fm_out, "output path");
    formula_cmd->add_option("--vars", fm_vars, "random: variable count");
    formula_cmd->add_option("--clauses", fm_clauses, "random: clause count");
    formula_cmd->add_option("--seed", fm_seed, "random: seed");

    // ---- verify ----
    auto* verify_cmd
        = app.add_subcommand("verify", "run registered laws");
    std::string vf_law = "all";
    LawConfig vf_cfg;
    bool vf_json = false, vf_list = false;
    int vf_maxn = -1, vf_samples = -1;
    verify_cmd->add_option("law", vf_law, "law id or 'all'");
    verify_cmd->add_option("--seed", vf_cfg.seed, "generator seed");
    verify_cmd->add_option("--max-n", vf_maxn, "instance size override");
    verify_cmd->add_option("--samples", vf_samples, "sample count override");
    verify_cmd->add_flag("--json", vf_json, "JSON output");
    verify_cmd->add_flag("--list", vf_list, "list law ids and exit");

    std::vector<const char*> argv;
    std::string prog = "stab";
    argv.push_back(prog.c_str());
    for (auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kExitOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    Solver solver(budget_from_env());

    try {
        if (*analyze_cmd) {
            Graph g = load_graph(an_path);
            std::optional<int> k;
            if (an_k >= 0)
                k = an_k;
            StabilityReport r
                = analyze(g, parse_graph_number(an_xi), solver, k);
            if (an_json)
                out << report_to_json(r).dump(2) << "\n";
            else
                print_report_human(out, r);
            if (!an_expect.empty() && !verdict_by_name(r, an_expect)) {
                err << "expectation failed: not " << an_expect << "\n";
                return kExitViolation;
            }
            return kExitOk;
        }

        if (*gadget_cmd) {
            Graph g = load_graph(gd_path);
            auto edges = parse_edge_selector(gd_edges, g);
            ConstructionResult r;
            if (gd_name == "beta-stabilize")
                r = beta_stabilize_edges(g, edges);
            else if (gd_name == "chi-stabilize")
                r = chi_stabilize_edges(g, edges);
            else {
                Graph cur = g;
                int shift = 0;
                for (auto e : edges) {
                    auto step = two_way_gadget_edge(cur, e);
                    cur = step.graph;
                    shift += step.value_shift;
                }
                r.graph = cur;
                r.value_shift = shift;
                r.notes = "two-way gadget on selected edges";
                detail::tag_against_input(r, g, Origin::Gadget);
            }
            emit_construction(gd_out, r, out);
            return kExitOk;
        }

        if (*reduce_cmd) {
            auto need = [&](size_t n) {
                if (rd_inputs.size() != n)
                    throw CLI::ValidationError("reduce",
                        rd_name + " needs " + std::to_string(n)
                            + " input file(s)");
            };
            bool verified = true;
            std::string verify_note;
            auto check = [&](bool lhs, bool rhs, const std::string& what) {
                if (lhs != rhs) {
                    verified = false;
                    verify_note = what;
                }
            };
            if (rd_name == "cai-meyer") {
                need(1);
                CnfFormula f = load_cnf(rd_inputs[0]);
                CaiMeyerGraph cm = cai_meyer_graph(f);
                if (rd_verify) {
                    int chi = solver.value(cm.graph, GraphNumber::Chi);
                    check(chi == 3, is_satisfiable(f),
                        "chi(G_Phi) = 3 <-> satisfiable");
                }
                ConstructionResult r;
                r.graph = cm.graph;
                r.notes = "clause-tracking 3-colorability graph";
                detail::tag_against_input(r, Graph(0), Origin::Gadget);
                emit_construction(rd_out, r, out);
            } else if (rd_name == "stable3cnf-to-vstab") {
                need(1);
                CnfFormula f = load_cnf(rd_inputs[0]);
                Graph g = stable3cnf_to_vertex_stability(f);
                if (rd_verify)
                    check(is_vertex_stable(g, GraphNumber::Chi, solver),
                        formula_stability(f).stable,
                        "vertex-stable <-> formula stable");
                ConstructionResult r;
                r.graph = g;
                r.notes = "formula stability to chi vertex-stability";
                detail::tag_against_input(r, Graph(0), Origin::Gadget);
                emit_construction(rd_out, r, out);
            } else if (rd_name == "vstab-to-stab") {
                need(1);
                Graph g = load_graph(rd_inputs[0]);
                Graph o = vstab_to_stab(g);
                if (rd_verify)
                    check(is_stable(o, GraphNumber::Chi, solver),
                        is_vertex_stable(g, GraphNumber::Chi, solver),
                        "stable(G+G) <-> vertex-stable(G)");
                ConstructionResult r;
                r.graph = o;
                r.notes = "self-join";
                detail::tag_against_input(r, g, Origin::Join);
                emit_construction(rd_out, r, out);
            } else if (rd_name == "union-double") {
                need(1);
                Graph g = load_graph(rd_inputs[0]);
                Graph o = union_double(g);
                if (rd_verify) {
                    check(is_stable(o, GraphNumber::Chi, solver), true,
                        "G u G stable");
                    check(is_vertex_stable(o, GraphNumber::Chi, solver), true,
                        "G u G vertex-stable");
                    check(solver.value(o, GraphNumber::Chi)
                            == solver.value(g, GraphNumber::Chi),
                        true, "chi preserved");
                }
                ConstructionResult r;
                r.graph = o;
                r.notes = "disjoint self-union";
                detail::tag_against_input(r, g, Origin::Padding);
                emit_construction(rd_out, r, out);
            } else if (rd_name == "unfrozen-to-twoway") {
                need(1);
                Graph g = load_graph(rd_inputs[0]);
                Graph o = unfrozenness_to_two_way(g);
                if (rd_verify)
                    check(is_two_way_stable(o, GraphNumber::Chi, solver),
                        is_unfrozen(g, GraphNumber::Chi, solver),
                        "two-way(out) <-> unfrozen(G)");
                ConstructionResult r;
                r.graph = o;
                r.notes = "unfrozenness to two-way stability";
                detail::tag_against_input(r, g, Origin::Padding);
                emit_construction(rd_out, r, out);
            } else if (rd_name == "beta-stability-compare") {
                need(2);
                Graph g = load_graph(rd_inputs[0]);
                Graph h = load_graph(rd_inputs[1]);
                ConstructionResult r = compare_vc_to_beta_stability(g, h);
                if (rd_verify)
                    check(is_stable(r.graph, GraphNumber::Beta, solver),
                        solver.value(g, GraphNumber::Beta)
                            > solver.value(h, GraphNumber::Beta),
                        "beta-stable(S) <-> beta(G) > beta(H)");
                emit_construction(rd_out, r, out);
            } else if (rd_name == "beta-unfrozenness-compare") {
                need(2);
                Graph g = load_graph(rd_inputs[0]);
                Graph h = load_graph(rd_inputs[1]);
                ConstructionResult r = compare_vc_to_beta_unfrozenness(g, h);
                if (rd_verify)
                    check(is_unfrozen(r.graph, GraphNumber::Beta, solver),
                        solver.value(g, GraphNumber::Beta)
                            <= solver.value(h, GraphNumber::Beta),
                        "beta-unfrozen(J) <-> beta(G) <= beta(H)");
                emit_construction(rd_out, r, out);
            } else if (rd_name == "beta-twoway") {
                need(1);
                Graph g = load_graph(rd_inputs[0]);
                ConstructionResult r = beta_unfrozen_to_beta_twoway(g);
                if (rd_verify)
                    check(
                        is_two_way_stable(r.graph, GraphNumber::Beta, solver),
                        is_unfrozen(g, GraphNumber::Beta, solver),
                        "beta-two-way(out) <-> beta-unfrozen(G)");
                emit_construction(rd_out, r, out);
            } else if (rd_name == "gjs-3col") {
                need(1);
                CnfFormula f = load_cnf(rd_inputs[0]);
                Graph g = gjs_3col(f);
                if (rd_verify) {
                    int chi = solver.value(g, GraphNumber::Chi);
                    check(chi == 3, is_satisfiable(f),
                        "chi = 3 <-> satisfiable");
                }
                ConstructionResult r;
                r.graph = g;
                r.notes = "3SAT to 3-colorability";
                detail::tag_against_input(r, Graph(0), Origin::Gadget);
                emit_construction(rd_out, r, out);
            } else if (rd_name == "chi-unfrozenness-compare") {
                need(2);
                Graph g = load_graph(rd_inputs[0]);
                Graph h = load_graph(rd_inputs[1]);
                Unfreezer u = exact_clique_unfreezer(solver);
                Graph o = conditional_unfrozenness_reduction(g, h, u);
                if (rd_verify)
                    check(is_unfrozen(o, GraphNumber::Chi, solver),
                        solver.value(g, GraphNumber::Chi)
                            <= solver.value(h, GraphNumber::Chi),
                        "unfrozen(U) <-> chi(G) <= chi(H)");
                ConstructionResult r;
                r.graph = o;
                r.notes
                    = "conditional chi-unfrozenness comparison (test-only "
                      "exact unfreezer)";
                detail::tag_against_input(r, g, Origin::Padding);
                emit_construction(rd_out, r, out);
            } else if (rd_name == "compare-colorability") {
                auto split = [](const std::string& s) {
                    std::vector<CnfFormula> fs;
                    std::stringstream ss(s);
                    std::string item;
                    while (std::getline(ss, item, ','))
                        if (!item.empty())
                            fs.push_back(load_cnf(item));
                    return fs;
                };
                auto phis = split(rd_phis);
                auto psis = split(rd_psis);
                auto [g, h] = compare_colorability_instance(phis, psis);
                if (rd_verify) {
                    auto count_unsat = [&](const std::vector<CnfFormula>& fs) {
                        int c = 0;
                        for (const auto& f : fs)
                            if (!is_satisfiable(f))
                                ++c;
                        return c;
                    };
                    check(solver.value(g, GraphNumber::Chi)
                            == 3 * int(phis.size()) + count_unsat(phis),
                        true, "chi identity on first join");
                    check(solver.value(h, GraphNumber::Chi)
                            == 3 * int(psis.size()) + count_unsat(psis),
                        true, "chi identity on second join");
                }
                if (rd_out.empty()) {
                    out << write_dimacs(g) << "---\n" << write_dimacs(h);
                } else {
                    write_file(rd_out + ".G.dimacs", write_dimacs(g));
                    write_file(rd_out + ".H.dimacs", write_dimacs(h));
                }
            } else {
                err << "unknown pipeline: " << rd_name << "\n";
                return kExitUsage;
            }
            if (rd_verify && !verified) {
                err << "verification failed: " << verify_note << "\n";
                return kExitViolation;
            }
            if (rd_verify)
                out << "verified\n";
            return kExitOk;
        }

        if (*formula_cmd) {
            auto need = [&](size_t n) {
                if (fm_inputs.size() != n)
                    throw CLI::ValidationError("formula",
                        fm_name + " needs " + std::to_string(n)
                            + " input file(s)");
            };
            auto emit = [&](const CnfFormula& f) {
                if (fm_out.empty())
                    out << write_dimacs_cnf(f);
                else
                    write_file(fm_out, write_dimacs_cnf(f));
            };
            if (fm_name == "to3cnf") {
                need(1);
                emit(to_exact_3cnf(load_cnf(fm_inputs[0])));
            } else if (fm_name == "unsat-padding") {
                need(1);
                emit(unsat_padding(load_cnf(fm_inputs[0])));
            } else if (fm_name == "sat-to-stable") {
                need(1);
                emit(sat_to_stable_cnf(load_cnf(fm_inputs[0])));
            } else if (fm_name == "or2") {
                need(2);
                emit(or2_combine(
                    load_cnf(fm_inputs[0]), load_cnf(fm_inputs[1])));
            } else if (fm_name == "random") {
                emit(random_3cnf(fm_vars, fm_clauses, fm_seed));
            } else if (fm_name == "sat") {
                need(1);
                out << (is_satisfiable(load_cnf(fm_inputs[0])) ? "sat"
                                                               : "unsat")
                    << "\n";
            } else if (fm_name == "stability") {
                need(1);
                auto r = formula_stability(load_cnf(fm_inputs[0]));
                out << (r.satisfiable ? "satisfiable" : "unsatisfiable")
                    << ", " << (r.stable ? "stable" : "not stable") << "\n";
                for (auto& [idx, sat] : r.per_clause)
                    out << "  without clause " << idx << ": "
                        << (sat ? "satisfiable" : "unsatisfiable") << "\n";
            } else {
                err << "unknown formula construction: " << fm_name << "\n";
                return kExitUsage;
            }
            return kExitOk;
        }

        if (*verify_cmd) {
            const auto& reg = LawRegistry::instance();
            if (vf_list) {
                for (const auto& id : reg.ids())
                    out << id << "\n";
                return kExitOk;
            }
            if (vf_maxn >= 0)
                vf_cfg.max_n = vf_maxn;
            if (vf_samples >= 0)
                vf_cfg.samples = vf_samples;
            vf_cfg.budget = solver.budget();
            std::vector<std::string> ids;
            if (vf_law == "all")
                ids = reg.ids();
            else {
                if (!reg.find(vf_law)) {
                    err << "unknown law id: " << vf_law << "\n";
                    return kExitUsage;
                }
                ids.push_back(vf_law);
            }
            bool all_ok = true;
            nlohmann::json jreports = nlohmann::json::array();
            for (const auto& id : ids) {
                LawReport r = reg.run(id, vf_cfg);
                all_ok = all_ok && r.passed();
                if (vf_json) {
                    jreports.push_back(law_report_to_json(r));
                } else {
                    out << (r.passed() ? "[pass] " : "[FAIL] ") << r.id
                        << "  (" << r.instances << " instances, "
                        << r.elapsed_seconds << "s)\n";
                    for (const auto& v : r.violations)
                        out << "    violation: " << v.detail << "\n"
                            << v.instance;
                }
            }
            if (vf_json)
                out << jreports.dump(2) << "\n";
            return all_ok ? kExitOk : kExitViolation;
        }
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseErrorCnf& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace stab
