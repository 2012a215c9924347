#pragma once

#include "stab/cnf.hpp"
#include "stab/dimacs.hpp"
#include "stab/enumerate.hpp"
#include "stab/gadgets.hpp"
#include "stab/oracle.hpp"
#include "stab/reductions.hpp"
#include "stab/solver.hpp"
#include "stab/stability.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stab {

struct LawConfig {
    uint64_t seed = 1;
    std::optional<int> max_n;   // override instance size where meaningful
    std::optional<int> samples; // override sample count where meaningful
    Budget budget;
};

struct Violation {
    std::string instance; // re-runnable payload (DIMACS / DIMACS CNF text)
    std::string detail;
};

struct LawReport {
    std::string id;
    long instances = 0;
    std::vector<Violation> violations;
    double elapsed_seconds = 0.0;
    bool passed() const { return violations.empty(); }
};

// Collects instances tried and violations; laws call check() per property.
class LawContext {
public:
    LawContext(const LawConfig& cfg, LawReport& report)
        : cfg_(cfg), report_(report), solver_(cfg.budget)
    {
    }

    const LawConfig& config() const { return cfg_; }
    const Solver& solver() const { return solver_; }
    int max_n(int fallback) const { return cfg_.max_n.value_or(fallback); }
    int samples(int fallback) const
    {
        return cfg_.samples.value_or(fallback);
    }
    uint64_t seed() const { return cfg_.seed; }

    void count_instance() { ++report_.instances; }

    void check(bool ok, const std::string& instance, const std::string& what)
    {
        if (!ok)
            report_.violations.push_back({instance, what});
    }

private:
    const LawConfig& cfg_;
    LawReport& report_;
    Solver solver_;
};

struct Law {
    std::string id;
    std::string paper_ref;
    std::string generator;
    std::function<void(LawContext&)> run;
};

namespace laws_detail {

inline std::string show(const Graph& g) { return write_dimacs(g); }
inline std::string show2(const Graph& g, const Graph& h)
{
    return write_dimacs(g) + "---\n" + write_dimacs(h);
}
inline std::string show(const CnfFormula& f) { return write_dimacs_cnf(f); }

// the acceptance tuple family
inline std::vector<std::pair<std::string, Graph>> and_family()
{
    return {{"K1", complete(1)}, {"K2", complete(2)}, {"P3", path(3)},
        {"C4", cycle(4)}, {"C5", cycle(5)},
        {"K3uK3", disjoint_union(complete(3), complete(3))}};
}

// the eight graphs on at most 3 vertices, up to isomorphism
inline std::vector<std::pair<std::string, Graph>> small_family()
{
    Graph k1k2(3, {{0, 1}});
    return {{"K0", empty_graph(0)}, {"K1", complete(1)},
        {"I2", empty_graph(2)}, {"K2", complete(2)}, {"I3", empty_graph(3)},
        {"K1uK2", k1k2}, {"P3", path(3)}, {"K3", complete(3)}};
}

inline CnfFormula eight_block()
{
    return CnfFormula(3, full_block(1, 2, 3));
}

// Satisfiability / stability via the DPLL path, cross-checked against the
// exhaustive-assignment oracle whenever the variable count permits.
inline bool checked_sat(LawContext& ctx, const CnfFormula& f,
    const std::string& inst)
{
    bool dpll = is_satisfiable(f, ctx.config().budget);
    if (f.num_vars() <= 20)
        ctx.check(dpll == oracle::satisfiable(f), inst,
            "DPLL satisfiability disagrees with brute force");
    return dpll;
}

inline bool checked_stable(LawContext& ctx, const CnfFormula& f,
    const std::string& inst)
{
    bool dpll = formula_stability(f, ctx.config().budget).stable;
    if (f.num_vars() <= 20)
        ctx.check(dpll == oracle::formula_stable(f), inst,
            "DPLL stability disagrees with brute force");
    return dpll;
}

// random exact-3CNF corpus for the formula laws
inline std::vector<CnfFormula> formula_corpus(LawContext& ctx, int count,
    int max_vars, int max_clauses)
{
    std::mt19937_64 rng(ctx.seed() * 7919 + 13);
    std::vector<CnfFormula> out;
    for (int i = 0; i < count; ++i) {
        int nv = 3 + int(rng() % uint64_t(std::max(1, max_vars - 2)));
        int m = 1 + int(rng() % uint64_t(max_clauses));
        out.push_back(random_3cnf(nv, m, rng()));
    }
    return out;
}

} // namespace laws_detail

inline std::vector<Law> build_law_registry()
{
    using namespace laws_detail;
    std::vector<Law> laws;

    laws.push_back({"obs1",
        "deleting an edge or vertex drops chi by exactly one or not at all",
        "all labeled graphs n <= max_n (default 5)", [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            for (int n = 0; n <= ctx.max_n(5); ++n)
                for_each_graph(n, [&](const Graph& g) {
                    ctx.count_instance();
                    int chi = sv.value(g, GraphNumber::Chi);
                    ctx.check(chi == oracle::chromatic_number(g), show(g),
                        "solver chi disagrees with brute-force oracle");
                    for (auto e : g.edges()) {
                        int d = sv.value(delete_edge(g, e.first, e.second),
                                    GraphNumber::Chi)
                            - chi;
                        ctx.check(d == 0 || d == -1, show(g),
                            "edge deletion delta outside {-1,0}");
                    }
                    for (int v = 0; v < n; ++v) {
                        int d = sv.value(delete_vertex(g, v), GraphNumber::Chi)
                            - chi;
                        ctx.check(d == 0 || d == -1, show(g),
                            "vertex deletion delta outside {-1,0}");
                    }
                });
        }});

    laws.push_back({"obs2", "endpoints of a chi-critical edge are critical",
        "all labeled graphs n <= max_n (default 5)", [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            for (int n = 2; n <= ctx.max_n(5); ++n)
                for_each_graph(n, [&](const Graph& g) {
                    ctx.count_instance();
                    for (auto e : g.edges()) {
                        if (edge_status(g, e, GraphNumber::Chi, sv)
                                .unchanged())
                            continue;
                        bool u_crit = !vertex_status(
                            g, e.first, GraphNumber::Chi, sv)
                                           .unchanged();
                        bool v_crit = !vertex_status(
                            g, e.second, GraphNumber::Chi, sv)
                                           .unchanged();
                        ctx.check(u_crit && v_crit, show(g),
                            "critical edge with a stable endpoint");
                    }
                });
        }});

    laws.push_back({"obs3",
        "every edge incident to a chi-stable vertex is chi-stable",
        "all labeled graphs n <= max_n (default 5)", [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            for (int n = 2; n <= ctx.max_n(5); ++n)
                for_each_graph(n, [&](const Graph& g) {
                    ctx.count_instance();
                    for (int v = 0; v < n; ++v) {
                        if (!vertex_status(g, v, GraphNumber::Chi, sv)
                                 .unchanged())
                            continue;
                        bool all = true;
                        g.neighbors(v).for_each([&](int u) {
                            if (!edge_status(g, make_edge(u, v),
                                    GraphNumber::Chi, sv)
                                     .unchanged())
                                all = false;
                        });
                        ctx.check(all, show(g),
                            "stable vertex with a critical incident edge");
                    }
                });
        }});

    laws.push_back({"obs4",
        "a vertex is chi-critical iff some optimal coloring gives it a "
        "unique color",
        "all labeled graphs n <= max_n (default 5)", [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            for (int n = 1; n <= ctx.max_n(5); ++n)
                for_each_graph(n, [&](const Graph& g) {
                    ctx.count_instance();
                    auto colorings = oracle::all_optimal_colorings(g);
                    for (int v = 0; v < n; ++v) {
                        bool critical = !vertex_status(
                            g, v, GraphNumber::Chi, sv)
                                             .unchanged();
                        bool unique = false;
                        for (const auto& col : colorings) {
                            bool mine = true;
                            for (int u = 0; u < n && mine; ++u)
                                if (u != v && col[u] == col[v])
                                    mine = false;
                            if (mine) {
                                unique = true;
                                break;
                            }
                        }
                        ctx.check(critical == unique, show(g),
                            "critical <-> unique-color characterization "
                            "failed at vertex "
                                + std::to_string(v));
                    }
                });
        }});

    laws.push_back({"prop1.edgewise",
        "beta- and alpha-statuses coincide elementwise and match omega on "
        "the complement with stability and unfrozenness swapped",
        "all labeled graphs n <= max_n (default 4) plus `samples` random "
        "graphs n <= 6",
        [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            auto check_graph = [&](const Graph& g) {
                ctx.count_instance();
                Graph co = complement(g);
                for (auto e : g.edges()) {
                    bool beta_stable
                        = edge_status(g, e, GraphNumber::Beta, sv).unchanged();
                    bool alpha_stable = edge_status(g, e, GraphNumber::Alpha,
                        sv)
                                            .unchanged();
                    bool omega_unfrozen
                        = nonedge_status(co, e, GraphNumber::Omega, sv)
                              .unchanged();
                    ctx.check(beta_stable == alpha_stable, show(g),
                        "beta/alpha edge status mismatch");
                    ctx.check(beta_stable == omega_unfrozen, show(g),
                        "beta stability vs omega unfrozenness on complement "
                        "mismatch");
                }
                for (auto e : g.nonedges()) {
                    bool beta_unfrozen
                        = nonedge_status(g, e, GraphNumber::Beta, sv)
                              .unchanged();
                    bool alpha_unfrozen
                        = nonedge_status(g, e, GraphNumber::Alpha, sv)
                              .unchanged();
                    bool omega_stable
                        = edge_status(co, e, GraphNumber::Omega, sv)
                              .unchanged();
                    ctx.check(beta_unfrozen == alpha_unfrozen, show(g),
                        "beta/alpha nonedge status mismatch");
                    ctx.check(beta_unfrozen == omega_stable, show(g),
                        "beta unfrozenness vs omega stability on complement "
                        "mismatch");
                }
            };
            for (int n = 0; n <= ctx.max_n(4); ++n)
                for_each_graph(n, check_graph);
            std::mt19937_64 rng(ctx.seed() * 31 + 7);
            for (int i = 0; i < ctx.samples(500); ++i)
                check_graph(random_graph(2 + int(rng() % 5),
                    0.2 + 0.1 * double(rng() % 7), rng()));
        }});

    laws.push_back({"prop1.closedforms",
        "alpha-/omega-vertex-unfrozenness (and two-way) are empty",
        "all labeled graphs n <= max_n (default 4), all 2^n attachments",
        [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            for (int n = 0; n <= ctx.max_n(4); ++n)
                for_each_graph(n, [&](const Graph& g) {
                    ctx.count_instance();
                    for (GraphNumber xi :
                        {GraphNumber::Alpha, GraphNumber::Omega}) {
                        bool enumerated = true;
                        for (const auto& [nbrs, delta] :
                            enumerate_vertex_addition(g, xi, sv))
                            if (delta != 0)
                                enumerated = false;
                        std::string name
                            = std::string(to_string(xi)) + "-vertex-unfrozen";
                        ctx.check(closed_form_verdict(g, name) == enumerated,
                            show(g), name + " closed form vs enumeration");
                    }
                });
        }});

    laws.push_back({"prop2",
        "a vertex is alpha-stable iff it is beta-critical",
        "all labeled graphs n <= max_n (default 4) plus `samples` random "
        "graphs n <= 6",
        [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            auto check_graph = [&](const Graph& g) {
                ctx.count_instance();
                for (int v = 0; v < g.num_vertices(); ++v) {
                    bool alpha_stable
                        = vertex_status(g, v, GraphNumber::Alpha, sv)
                              .unchanged();
                    bool beta_critical
                        = !vertex_status(g, v, GraphNumber::Beta, sv)
                               .unchanged();
                    ctx.check(alpha_stable == beta_critical, show(g),
                        "alpha-stable <-> beta-critical failed at vertex "
                            + std::to_string(v));
                }
            };
            for (int n = 0; n <= ctx.max_n(4); ++n)
                for_each_graph(n, check_graph);
            std::mt19937_64 rng(ctx.seed() * 131 + 5);
            for (int i = 0; i < ctx.samples(500); ++i)
                check_graph(random_graph(2 + int(rng() % 5),
                    0.2 + 0.1 * double(rng() % 7), rng()));
        }});

    laws.push_back({"lem3", "G+G is stable iff G is vertex-stable",
        "all labeled graphs n <= max_n (default 4)", [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            for (int n = 0; n <= ctx.max_n(4); ++n)
                for_each_graph(n, [&](const Graph& g) {
                    ctx.count_instance();
                    bool lhs = is_stable(
                        vstab_to_stab(g), GraphNumber::Chi, sv);
                    bool rhs = is_vertex_stable(g, GraphNumber::Chi, sv);
                    ctx.check(lhs == rhs, show(g),
                        "self-join stability vs vertex-stability mismatch");
                });
        }});

    laws.push_back({"lem4",
        "exact-3CNF conversion preserves satisfiability and stability",
        "`samples` random CNFs (default 200), <= 4 vars, <= 6 clauses, "
        "widths 1-5",
        [](LawContext& ctx) {
            std::mt19937_64 rng(ctx.seed() * 271 + 3);
            for (int i = 0; i < ctx.samples(200); ++i) {
                int nv = 1 + int(rng() % 4);
                int m = 1 + int(rng() % 6);
                std::vector<Clause> clauses;
                for (int c = 0; c < m; ++c) {
                    int width = 1 + int(rng() % 5);
                    width = std::min(width, nv);
                    std::vector<int> vars(nv);
                    for (int v = 0; v < nv; ++v)
                        vars[v] = v + 1;
                    Clause cl;
                    for (int j = 0; j < width; ++j) {
                        size_t pick = size_t(rng() % (vars.size() - j));
                        std::swap(vars[pick], vars[vars.size() - 1 - j]);
                        int var = vars[vars.size() - 1 - j];
                        cl.push_back((rng() & 1) ? var : -var);
                    }
                    clauses.push_back(cl);
                }
                CnfFormula f(nv, clauses);
                ctx.count_instance();
                CnfFormula g = to_exact_3cnf(f);
                ctx.check(g.is_exact_kcnf(3), show(f),
                    "conversion output is not exact-3CNF");
                ctx.check(oracle::satisfiable(f) == checked_sat(ctx, g, show(f)),
                    show(f), "conversion changed satisfiability");
                ctx.check(oracle::formula_stable(f)
                        == checked_stable(ctx, g, show(f)),
                    show(f), "conversion changed stability");
            }
        }});

    laws.push_back({"lem5",
        "Phi is not stable iff some t_{i1} deletion drops chi of the "
        "clause-tracking graph",
        "`samples` random exact-3CNFs (default 50), n <= 3, m <= 4, plus "
        "the full 8-clause block",
        [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            std::mt19937_64 rng(ctx.seed() * 677 + 21);
            std::vector<CnfFormula> corpus;
            for (int i = 0; i < ctx.samples(50); ++i)
                corpus.push_back(random_3cnf(3, 1 + int(rng() % 4), rng()));
            corpus.push_back(eight_block());
            for (const auto& f : corpus) {
                ctx.count_instance();
                CaiMeyerGraph cm = cai_meyer_graph(f);
                bool sat = oracle::satisfiable(f);
                int chi = sv.value(cm.graph, GraphNumber::Chi);
                ctx.check(chi == (sat ? 3 : 4), show(f),
                    "chi of clause graph is not 3/4 by satisfiability");
                bool any_drop = false;
                for (size_t i = 0; i < cm.t1.size(); ++i) {
                    int sub = sv.value(
                        delete_vertex(cm.graph, cm.t1[i]), GraphNumber::Chi);
                    if (sub < chi)
                        any_drop = true;
                    bool sub_sat
                        = oracle::satisfiable(f.without_clause(int(i)));
                    ctx.check((sub == 3) == sub_sat, show(f),
                        "t_{i1} deletion 3-colorability vs clause-deleted "
                        "satisfiability mismatch");
                }
                ctx.check(any_drop == !oracle::formula_stable(f), show(f),
                    "instability <-> t_{i1} chi drop biconditional failed");
            }
        }});

    laws.push_back({"lem6", "vertex replication preserves chi",
        "all (G, v) with n <= max_n (default 5)", [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            for (int n = 1; n <= ctx.max_n(5); ++n)
                for_each_graph(n, [&](const Graph& g) {
                    int chi = sv.value(g, GraphNumber::Chi);
                    for (int v = 0; v < n; ++v) {
                        ctx.count_instance();
                        Graph rep = replicate_vertex(g, v);
                        int c1 = sv.value(rep, GraphNumber::Chi);
                        int c2 = sv.value(
                            delete_vertex(rep, v), GraphNumber::Chi);
                        int c3 = sv.value(delete_vertex(rep, n),
                            GraphNumber::Chi);
                        ctx.check(c1 == chi && c2 == chi && c3 == chi,
                            show(g),
                            "replication changed chi at vertex "
                                + std::to_string(v));
                    }
                });
        }});

    laws.push_back({"lem7",
        "chi stabilization: shift exactly +2; edges outside E(G)\\S stable; "
        "surviving edges keep their status",
        "`samples` random (G, S) (default 100), n <= max_n (default 5)",
        [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            std::mt19937_64 rng(ctx.seed() * 839 + 1);
            int wanted = ctx.samples(100);
            int produced = 0;
            while (produced < wanted) {
                int n = 2 + int(rng() % uint64_t(ctx.max_n(5) - 1));
                Graph g = random_graph(n, 0.3 + 0.1 * double(rng() % 6),
                    rng());
                auto edges = g.edges();
                if (edges.empty())
                    continue;
                std::vector<Edge> s;
                for (auto e : edges)
                    if (rng() & 1)
                        s.push_back(e);
                if (s.empty())
                    s.push_back(edges[rng() % edges.size()]);
                ++produced;
                ctx.count_instance();
                int chi = sv.value(g, GraphNumber::Chi);
                auto r = chi_stabilize_edges(g, s);
                int chi_hat = sv.value(r.graph, GraphNumber::Chi);
                ctx.check(chi_hat == chi + 2, show(g),
                    "chi shift is not exactly +2");
                std::vector<std::vector<bool>> in_s(
                    n, std::vector<bool>(n, false));
                for (auto e : s)
                    in_s[e.first][e.second] = in_s[e.second][e.first] = true;
                for (auto e : r.graph.edges()) {
                    bool survivor = e.first < n && e.second < n
                        && g.has_edge(e.first, e.second);
                    bool stable_out = edge_status(
                        r.graph, e, GraphNumber::Chi, sv)
                                          .unchanged();
                    if (!survivor) {
                        ctx.check(stable_out, show(g),
                            "gadget-side edge not stable");
                    } else {
                        bool stable_in = edge_status(
                            g, e, GraphNumber::Chi, sv)
                                             .unchanged();
                        ctx.check(stable_out == stable_in, show(g),
                            "surviving edge changed its status");
                    }
                }
            }
        }});

    laws.push_back({"lem9",
        "beta edge gadget: shift exactly +2, gadget edges stable, other "
        "statuses preserved",
        "`samples` random (G, e) (default 100), n <= max_n (default 6)",
        [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            std::mt19937_64 rng(ctx.seed() * 911 + 9);
            int wanted = ctx.samples(100);
            int produced = 0;
            while (produced < wanted) {
                int n = 2 + int(rng() % uint64_t(ctx.max_n(6) - 1));
                Graph g = random_graph(n, 0.3 + 0.1 * double(rng() % 6),
                    rng());
                auto edges = g.edges();
                if (edges.empty())
                    continue;
                Edge e = edges[rng() % edges.size()];
                ++produced;
                ctx.count_instance();
                int beta = sv.value(g, GraphNumber::Beta);
                auto r = beta_stabilize_edge(g, e);
                int beta_out = sv.value(r.graph, GraphNumber::Beta);
                ctx.check(beta_out == beta + 2, show(g),
                    "beta shift is not exactly +2");
                for (auto f : r.graph.edges()) {
                    bool gadget = f.first >= n || f.second >= n;
                    bool stable_out = edge_status(
                        r.graph, f, GraphNumber::Beta, sv)
                                          .unchanged();
                    if (gadget) {
                        ctx.check(stable_out, show(g),
                            "gadget edge not beta-stable");
                    } else {
                        bool stable_in = edge_status(
                            g, f, GraphNumber::Beta, sv)
                                             .unchanged();
                        ctx.check(stable_out == stable_in, show(g),
                            "untouched edge changed its beta status");
                    }
                }
            }
        }});

    laws.push_back({"lem13",
        "two-way gadget: shift exactly +6 and all five element-class "
        "properties",
        "`samples` random nonempty (G, e) (default 100), n <= max_n "
        "(default 5)",
        [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            std::mt19937_64 rng(ctx.seed() * 1021 + 17);
            int wanted = ctx.samples(100);
            int produced = 0;
            while (produced < wanted) {
                int n = 2 + int(rng() % uint64_t(ctx.max_n(5) - 1));
                Graph g = random_graph(n, 0.3 + 0.1 * double(rng() % 6),
                    rng());
                auto edges = g.edges();
                if (edges.empty())
                    continue;
                Edge e = edges[rng() % edges.size()];
                ++produced;
                ctx.count_instance();
                int beta = sv.value(g, GraphNumber::Beta);
                auto r = two_way_gadget_edge(g, e);
                int beta_out = sv.value(r.graph, GraphNumber::Beta);
                ctx.check(beta_out == beta + 6, show(g),
                    "beta shift is not exactly +6");
                for (auto f : g.edges()) {
                    if (f == e)
                        continue;
                    bool a = edge_status(g, f, GraphNumber::Beta, sv)
                                 .unchanged();
                    bool b = edge_status(r.graph, f, GraphNumber::Beta, sv)
                                 .unchanged();
                    ctx.check(a == b, show(g),
                        "pre-existing edge changed its beta status");
                }
                for (auto f : r.graph.edges()) {
                    bool fresh = f.first >= n || f.second >= n || f == e;
                    if (!fresh)
                        continue;
                    ctx.check(edge_status(r.graph, f, GraphNumber::Beta, sv)
                                  .unchanged(),
                        show(g), "gadget-side edge not beta-stable");
                }
                for (auto f : g.nonedges()) {
                    bool a = nonedge_status(g, f, GraphNumber::Beta, sv)
                                 .unchanged();
                    bool b = nonedge_status(
                        r.graph, f, GraphNumber::Beta, sv)
                                 .unchanged();
                    ctx.check(a == b, show(g),
                        "pre-existing nonedge changed its beta status");
                }
                for (auto f : r.graph.nonedges()) {
                    bool fresh = f.first >= n || f.second >= n;
                    if (!fresh)
                        continue;
                    ctx.check(
                        nonedge_status(r.graph, f, GraphNumber::Beta, sv)
                            .unchanged(),
                        show(g), "new nonedge not beta-unfrozen");
                }
            }
        }});

    laws.push_back({"thm3",
        "the join is an AND over all inputs for vertex-stability and for "
        "unfrozenness",
        "all 2- and 3-tuples from {K1, K2, P3, C4, C5, K3uK3}",
        [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            auto family = and_family();
            std::vector<bool> vstable, unfrozen;
            for (auto& [name, g] : family) {
                vstable.push_back(is_vertex_stable(g, GraphNumber::Chi, sv));
                unfrozen.push_back(is_unfrozen(g, GraphNumber::Chi, sv));
            }
            auto run_tuple = [&](const std::vector<int>& idx) {
                ctx.count_instance();
                std::vector<Graph> graphs;
                bool all_v = true, all_u = true;
                std::string names;
                for (int i : idx) {
                    graphs.push_back(family[i].second);
                    all_v = all_v && vstable[i];
                    all_u = all_u && unfrozen[i];
                    names += family[i].first + " ";
                }
                Graph j = join_and(graphs, AndFlavor::VertexStability).graph;
                int total = 0;
                for (int i : idx)
                    total += sv.value(family[i].second, GraphNumber::Chi);
                ctx.check(sv.value(j, GraphNumber::Chi) == total, names,
                    "chi of join is not the sum of the parts");
                ctx.check(
                    is_vertex_stable(j, GraphNumber::Chi, sv) == all_v, names,
                    "join AND failed for vertex-stability");
                ctx.check(is_unfrozen(j, GraphNumber::Chi, sv) == all_u,
                    names, "join AND failed for unfrozenness");
            };
            int f = int(family.size());
            for (int a = 0; a < f; ++a)
                for (int b = 0; b < f; ++b)
                    run_tuple({a, b});
            for (int a = 0; a < f; ++a)
                for (int b = 0; b < f; ++b)
                    for (int c = 0; c < f; ++c)
                        run_tuple({a, b, c});
        }});

    laws.push_back({"cor2",
        "the join with all join edges chi-stabilized is an AND for "
        "stability",
        "all 2- and 3-tuples from {K1, K2, P3, C4, C5, K3uK3}",
        [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            auto family = and_family();
            std::vector<bool> stable;
            for (auto& [name, g] : family)
                stable.push_back(is_stable(g, GraphNumber::Chi, sv));
            auto run_tuple = [&](const std::vector<int>& idx) {
                ctx.count_instance();
                std::vector<Graph> graphs;
                bool all_s = true;
                std::string names;
                for (int i : idx) {
                    graphs.push_back(family[i].second);
                    all_s = all_s && stable[i];
                    names += family[i].first + " ";
                }
                Graph out = stabilized_join_and(graphs).graph;
                ctx.check(is_stable(out, GraphNumber::Chi, sv) == all_s,
                    names, "stabilized join AND failed for stability");
            };
            int f = int(family.size());
            for (int a = 0; a < f; ++a)
                for (int b = 0; b < f; ++b)
                    run_tuple({a, b});
            for (int a = 0; a < f; ++a)
                for (int b = 0; b < f; ++b)
                    for (int c = 0; c < f; ++c)
                        run_tuple({a, b, c});
        }});

    laws.push_back({"thm4.conp",
        "appending the 8-block over fresh variables: output unsatisfiable, "
        "stable iff input unsatisfiable",
        "`samples` random exact-3CNFs (default 200), <= 4 vars",
        [](LawContext& ctx) {
            auto corpus = formula_corpus(ctx, ctx.samples(200), 4, 6);
            for (const auto& f : corpus) {
                ctx.count_instance();
                CnfFormula out = unsat_padding(f);
                ctx.check(out.num_clauses() == f.num_clauses() + 8, show(f),
                    "padding should append exactly 8 clauses");
                ctx.check(!checked_sat(ctx, out, show(f)), show(f),
                    "padded output is satisfiable");
                ctx.check(checked_stable(ctx, out, show(f))
                        == !oracle::satisfiable(f),
                    show(f), "stability <-> input unsatisfiability failed");
            }
        }});

    laws.push_back({"thm4.np",
        "triplicated-clause construction: output stable iff input "
        "satisfiable",
        "`samples` random exact-3CNFs (default 200), <= 4 vars",
        [](LawContext& ctx) {
            auto corpus = formula_corpus(ctx, ctx.samples(200), 4, 4);
            for (const auto& f : corpus) {
                ctx.count_instance();
                CnfFormula out = sat_to_stable_cnf(f);
                ctx.check(out.is_exact_kcnf(3), show(f),
                    "output is not exact-3CNF");
                bool sat = oracle::satisfiable(f);
                ctx.check(checked_sat(ctx, out, show(f)) == sat, show(f),
                    "equisatisfiability failed");
                ctx.check(checked_stable(ctx, out, show(f)) == sat, show(f),
                    "stability <-> input satisfiability failed");
            }
        }});

    laws.push_back({"thm4.or2",
        "clause-product combination: output stable iff either input stable",
        "`samples` random exact-3CNF pairs (default 200), <= 4 vars",
        [](LawContext& ctx) {
            auto corpus = formula_corpus(ctx, 2 * ctx.samples(200), 4, 3);
            for (size_t i = 0; i + 1 < corpus.size(); i += 2) {
                ctx.count_instance();
                const CnfFormula& f = corpus[i];
                const CnfFormula& g = corpus[i + 1];
                CnfFormula out = or2_combine(f, g);
                bool want = oracle::formula_stable(f)
                    || oracle::formula_stable(g);
                ctx.check(checked_stable(ctx, out, show(f)) == want,
                    show(f) + "---\n" + show(g),
                    "or-combination stability biconditional failed");
            }
        }});

    laws.push_back({"thm5",
        "replicated clause graph is chi-vertex-stable iff the formula is "
        "stable",
        "`samples` random exact-3CNFs (default 50), n <= 3, m <= 4, plus "
        "the 8-block",
        [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            std::mt19937_64 rng(ctx.seed() * 1201 + 11);
            std::vector<CnfFormula> corpus;
            for (int i = 0; i < ctx.samples(50); ++i)
                corpus.push_back(random_3cnf(3, 1 + int(rng() % 4), rng()));
            corpus.push_back(eight_block());
            for (const auto& f : corpus) {
                ctx.count_instance();
                Graph r = stable3cnf_to_vertex_stability(f);
                bool lhs = is_vertex_stable(r, GraphNumber::Chi, sv);
                bool rhs = oracle::formula_stable(f);
                ctx.check(lhs == rhs, show(f),
                    "vertex-stability <-> formula stability failed");
            }
        }});

    laws.push_back({"thm6",
        "G u G is stable and vertex-stable with chi unchanged; the "
        "k-prefixed verdicts select exact-k graphs",
        "all labeled graphs n <= max_n (default 4)", [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            for (int n = 0; n <= ctx.max_n(4); ++n)
                for_each_graph(n, [&](const Graph& g) {
                    ctx.count_instance();
                    Graph u = union_double(g);
                    int chi = sv.value(g, GraphNumber::Chi);
                    ctx.check(sv.value(u, GraphNumber::Chi) == chi, show(g),
                        "chi changed under self-union");
                    ctx.check(is_stable(u, GraphNumber::Chi, sv), show(g),
                        "self-union not stable");
                    ctx.check(is_vertex_stable(u, GraphNumber::Chi, sv),
                        show(g), "self-union not vertex-stable");
                    for (int k = 0; k <= n + 1; ++k) {
                        auto rep = analyze(u, GraphNumber::Chi, sv, k);
                        ctx.check(rep.verdicts.k_stable == (chi == k),
                            show(g), "k-stability verdict mismatch");
                        ctx.check(rep.verdicts.k_vertex_stable == (chi == k),
                            show(g), "k-vertex-stability verdict mismatch");
                    }
                });
        }});

    laws.push_back({"thm7", "only the empty graphs are beta-vertex-stable",
        "all labeled graphs n <= max_n (default 4)", [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            for (int n = 0; n <= ctx.max_n(4); ++n)
                for_each_graph(n, [&](const Graph& g) {
                    ctx.count_instance();
                    bool computed = is_vertex_stable(g, GraphNumber::Beta, sv);
                    bool closed = closed_form_verdict(g, "beta-vertex-stable");
                    ctx.check(computed == closed, show(g),
                        "beta-vertex-stability closed form mismatch");
                });
        }});

    laws.push_back({"thm9.end2end",
        "comparison output is beta-stable iff beta(G) > beta(H)",
        "all 64 pairs from the <= 3-vertex family", [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            auto family = small_family();
            for (auto& [gname, g] : family) {
                for (auto& [hname, h] : family) {
                    ctx.count_instance();
                    // gadget-side intermediates
                    if (h.num_edges() > 0) {
                        Graph hp = beta_stabilize_edges(h, h.edges()).graph;
                        ctx.check(hp.num_vertices()
                                == h.num_vertices() + 4 * int(h.num_edges()),
                            show2(g, h), "gadget-side vertex count identity");
                        ctx.check(sv.value(hp, GraphNumber::Beta)
                                == sv.value(h, GraphNumber::Beta)
                                    + 2 * int(h.num_edges()),
                            show2(g, h), "gadget-side beta identity");
                    }
                    Graph s = compare_vc_to_beta_stability(g, h).graph;
                    bool lhs = is_stable(s, GraphNumber::Beta, sv);
                    bool rhs = sv.value(g, GraphNumber::Beta)
                        > sv.value(h, GraphNumber::Beta);
                    ctx.check(lhs == rhs, show2(g, h),
                        gname + std::string(" vs ") + hname
                            + ": beta-stability comparison biconditional "
                              "failed");
                }
            }
        }});

    laws.push_back({"thm10",
        "no chi-vertex-unfrozen graph; K0 is the only beta-vertex-unfrozen "
        "graph",
        "all labeled graphs n <= max_n (default 4), all 2^n attachments",
        [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            for (int n = 0; n <= ctx.max_n(4); ++n)
                for_each_graph(n, [&](const Graph& g) {
                    ctx.count_instance();
                    for (GraphNumber xi :
                        {GraphNumber::Chi, GraphNumber::Beta}) {
                        bool enumerated = true;
                        for (const auto& [nbrs, delta] :
                            enumerate_vertex_addition(g, xi, sv))
                            if (delta != 0)
                                enumerated = false;
                        std::string name
                            = std::string(to_string(xi)) + "-vertex-unfrozen";
                        ctx.check(closed_form_verdict(g, name) == enumerated,
                            show(g), name + " closed form vs enumeration");
                    }
                });
        }});

    laws.push_back({"thm11.end2end",
        "comparison output is beta-unfrozen iff beta(G) <= beta(H)",
        "all 64 pairs from the <= 3-vertex family", [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            auto family = small_family();
            for (auto& [gname, g] : family) {
                for (auto& [hname, h] : family) {
                    ctx.count_instance();
                    Graph j = compare_vc_to_beta_unfrozenness(g, h).graph;
                    bool lhs = is_unfrozen(j, GraphNumber::Beta, sv);
                    bool rhs = sv.value(g, GraphNumber::Beta)
                        <= sv.value(h, GraphNumber::Beta);
                    ctx.check(lhs == rhs, show2(g, h),
                        gname + std::string(" vs ") + hname
                            + ": beta-unfrozenness comparison biconditional "
                              "failed");
                    if (g.num_vertices() > 1 && h.num_vertices() >= 1) {
                        int gg = g.num_vertices(), hh = h.num_vertices();
                        ctx.check(j.num_vertices() == 4 * (gg + hh),
                            show2(g, h), "output order identity failed");
                    }
                }
            }
        }});

    laws.push_back({"thm12",
        "with a contract-satisfying unfreezer, the union instance is "
        "chi-unfrozen iff chi(G) <= chi(H)",
        "all labeled pairs (G, H) with n <= max_n (default 4)",
        [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            Unfreezer u = exact_clique_unfreezer(sv);
            std::vector<Graph> all;
            for (int n = 0; n <= ctx.max_n(4); ++n)
                for_each_graph(n, [&](const Graph& g) { all.push_back(g); });
            for (const Graph& g : all)
                for (const Graph& h : all) {
                    ctx.count_instance();
                    Graph out = conditional_unfrozenness_reduction(g, h, u);
                    bool lhs = is_unfrozen(out, GraphNumber::Chi, sv);
                    bool rhs = sv.value(g, GraphNumber::Chi)
                        <= sv.value(h, GraphNumber::Chi);
                    ctx.check(lhs == rhs, show2(g, h),
                        "conditional unfrozenness biconditional failed");
                }
        }});

    laws.push_back({"thm13",
        "joined colorability instances compare chi by satisfiable counts "
        "under the monotone premise",
        "k in {1,2} over {satisfiable single clause, 8-block}",
        [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            CnfFormula sat_one(3, {{1, 2, 3}});
            CnfFormula unsat = eight_block();
            // monotone chains: list of (formulas, #sat)
            std::vector<std::pair<std::vector<CnfFormula>, int>> chains1
                = {{{sat_one}, 1}, {{unsat}, 0}};
            std::vector<std::pair<std::vector<CnfFormula>, int>> chains2
                = {{{sat_one, sat_one}, 2}, {{sat_one, unsat}, 1},
                    {{unsat, unsat}, 0}};
            auto run = [&](const std::vector<std::pair<std::vector<CnfFormula>,
                               int>>& chains,
                           int k) {
                for (auto& [phis, satphi] : chains)
                    for (auto& [psis, satpsi] : chains) {
                        ctx.count_instance();
                        auto [g, h]
                            = compare_colorability_instance(phis, psis);
                        int cg = sv.value(g, GraphNumber::Chi);
                        int ch = sv.value(h, GraphNumber::Chi);
                        ctx.check(cg == 3 * k + (k - satphi),
                            "thm13 k=" + std::to_string(k),
                            "chi identity failed on the first join");
                        ctx.check((cg <= ch) == (satphi >= satpsi),
                            "thm13 k=" + std::to_string(k) + " satphi="
                                + std::to_string(satphi) + " satpsi="
                                + std::to_string(satpsi),
                            "count-comparison biconditional failed");
                    }
            };
            run(chains1, 1);
            run(chains2, 2);
        }});

    laws.push_back({"thm14",
        "self-union reduces unfrozenness to two-way stability (edgeless "
        "inputs decided directly)",
        "all labeled graphs n <= max_n (default 4)", [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            for (int n = 0; n <= ctx.max_n(4); ++n)
                for_each_graph(n, [&](const Graph& g) {
                    ctx.count_instance();
                    Graph out = unfrozenness_to_two_way(g);
                    bool lhs = is_two_way_stable(out, GraphNumber::Chi, sv);
                    bool rhs = is_unfrozen(g, GraphNumber::Chi, sv);
                    ctx.check(lhs == rhs, show(g),
                        "two-way reduction biconditional failed");
                });
        }});

    laws.push_back({"thm15.end2end",
        "gadgetizing every edge reduces beta-unfrozenness to "
        "beta-two-way-stability",
        "all labeled graphs n <= max_n (default 4)", [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            for (int n = 0; n <= ctx.max_n(4); ++n)
                for_each_graph(n, [&](const Graph& g) {
                    ctx.count_instance();
                    Graph out = beta_unfrozen_to_beta_twoway(g).graph;
                    bool lhs = is_two_way_stable(out, GraphNumber::Beta, sv);
                    bool rhs = is_unfrozen(g, GraphNumber::Beta, sv);
                    ctx.check(lhs == rhs, show(g),
                        "beta two-way pipeline biconditional failed");
                });
        }});

    laws.push_back({"queryplan",
        "executing the (G,k), (G-e,k), (G-v,k) plan reproduces the chi "
        "stability and vertex-stability verdicts",
        "all labeled graphs n <= max_n (default 4)", [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            for (int n = 0; n <= ctx.max_n(4); ++n)
                for_each_graph(n, [&](const Graph& g) {
                    ctx.count_instance();
                    auto plan = query_plan(g, QueryPlanMode::Both);
                    size_t expect = size_t(n + 1)
                        * (1 + g.edges().size() + size_t(n));
                    ctx.check(plan.queries.size() == expect, show(g),
                        "query count mismatch");
                    auto verdicts = execute_query_plan(plan, sv);
                    auto rep = analyze(g, GraphNumber::Chi, sv);
                    ctx.check(verdicts.chi == rep.value, show(g),
                        "plan chi mismatch");
                    ctx.check(verdicts.stable == rep.verdicts.stable, show(g),
                        "plan stability verdict mismatch");
                    ctx.check(
                        verdicts.vertex_stable == rep.verdicts.vertex_stable,
                        show(g), "plan vertex-stability verdict mismatch");
                });
        }});

    laws.push_back({"oracle.agreement",
        "branch-and-bound solvers agree with exhaustive enumeration",
        "all labeled graphs n <= max_n (default 5)", [](LawContext& ctx) {
            const Solver& sv = ctx.solver();
            for (int n = 0; n <= ctx.max_n(5); ++n)
                for_each_graph(n, [&](const Graph& g) {
                    ctx.count_instance();
                    for (GraphNumber xi : all_graph_numbers)
                        ctx.check(
                            sv.value(g, xi) == oracle::graph_number(g, xi),
                            show(g),
                            std::string("solver/oracle mismatch for ")
                                + to_string(xi));
                });
        }});

    return laws;
}

class LawRegistry {
public:
    LawRegistry() : laws_(build_law_registry()) {}

    static const LawRegistry& instance()
    {
        static LawRegistry reg;
        return reg;
    }

    std::vector<std::string> ids() const
    {
        std::vector<std::string> out;
        for (const auto& l : laws_)
            out.push_back(l.id);
        return out;
    }

    const Law* find(const std::string& id) const
    {
        for (const auto& l : laws_)
            if (l.id == id)
                return &l;
        return nullptr;
    }

    LawReport run(const std::string& id, const LawConfig& cfg = {}) const
    {
        const Law* law = find(id);
        if (!law)
            throw std::domain_error("unknown law id: " + id);
        LawReport report;
        report.id = id;
        auto start = std::chrono::steady_clock::now();
        LawContext ctx(cfg, report);
        law->run(ctx);
        report.elapsed_seconds = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start)
                                     .count();
        return report;
    }

private:
    std::vector<Law> laws_;
};

} // namespace stab
