#pragma once

#include "stab/cnf.hpp"
#include "stab/gadgets.hpp"
#include "stab/graph.hpp"
#include "stab/solver.hpp"

#include <functional>
#include <string>
#include <vector>

namespace stab {

// ---------------------------------------------------------------------
// The 3SAT -> 3Colorability construction whose per-clause vertices t_{i1}
// track clause deletions: chi = 3 iff the formula is satisfiable, else 4,
// and chi(G - t_{i1}) = 3 iff the formula minus clause i is satisfiable.
// ---------------------------------------------------------------------

struct CaiMeyerGraph {
    Graph graph;
    std::vector<int> t1; // t_{i1} per clause, in clause order
    int vc = -1, vs = -1;
    std::vector<int> pos_literal; // vertex of x_i (1-based var index - 1)
    std::vector<int> neg_literal;
};

inline CaiMeyerGraph cai_meyer_graph(const CnfFormula& f)
{
    require_exact_3cnf(f, "cai_meyer_graph");
    if (f.num_clauses() < 1)
        throw std::domain_error("cai_meyer_graph: need at least one clause");
    int n = f.num_vars(), m = f.num_clauses();
    CaiMeyerGraph out;
    GraphBuilder b;
    out.vc = b.add_vertex("vc");
    out.vs = b.add_vertex("vs");
    b.add_edge(out.vc, out.vs);
    out.pos_literal.resize(n);
    out.neg_literal.resize(n);
    for (int i = 0; i < n; ++i) {
        out.pos_literal[i] = b.add_vertex("x" + std::to_string(i + 1));
        out.neg_literal[i] = b.add_vertex("nx" + std::to_string(i + 1));
        b.add_edge(out.pos_literal[i], out.neg_literal[i]);
        b.add_edge(out.pos_literal[i], out.vc);
        b.add_edge(out.neg_literal[i], out.vc);
    }
    for (int i = 0; i < m; ++i) {
        const Clause& c = f.clause(i);
        std::string ci = std::to_string(i + 1);
        int a[3], bb[3], t[3];
        for (int j = 0; j < 3; ++j) {
            std::string cj = ci + "_" + std::to_string(j + 1);
            a[j] = b.add_vertex("a" + cj);
            bb[j] = b.add_vertex("b" + cj);
            t[j] = b.add_vertex("t" + cj);
            b.add_edge(a[j], bb[j]);
            b.add_edge(a[j], out.vs);
            b.add_edge(bb[j], out.vs);
            b.add_edge(bb[j], t[j]);
            int lit = c[j];
            int lv = lit > 0 ? out.pos_literal[lit - 1]
                             : out.neg_literal[-lit - 1];
            b.add_edge(a[j], lv);
        }
        b.add_edge(t[0], t[1]);
        b.add_edge(t[1], t[2]);
        b.add_edge(t[0], t[2]);
        out.t1.push_back(t[0]);
    }
    out.graph = b.build();
    return out;
}

// Replicates every vertex except the t_{i1}; the result is chi-vertex-stable
// exactly if the formula is stable.
inline Graph stable3cnf_to_vertex_stability(const CnfFormula& f)
{
    CaiMeyerGraph cm = cai_meyer_graph(f);
    std::vector<bool> skip(cm.graph.num_vertices(), false);
    for (int t : cm.t1)
        skip[t] = true;
    Graph g = cm.graph;
    for (int v = 0; v < cm.graph.num_vertices(); ++v)
        if (!skip[v])
            g = replicate_vertex(g, v);
    return g;
}

// Self-join: stable exactly if the input is vertex-stable.
inline Graph vstab_to_stab(const Graph& g) { return join(g, g); }

// Disjoint self-union: always stable and vertex-stable, with chi unchanged;
// two-way stable exactly if the input is unfrozen, provided chi(G) > 1.
inline Graph union_double(const Graph& g) { return disjoint_union(g, g); }

// The reduction form of union_double for two-way stability. Edgeless inputs
// (chi <= 1) break the cross-copy recoloring argument: K1 is vacuously
// unfrozen but K1 u K1 = I2 has a frozen nonedge. Those inputs are decided
// directly and mapped to canonical instances.
inline Graph unfrozenness_to_two_way(const Graph& g)
{
    if (g.num_edges() == 0) {
        bool unfrozen = g.num_vertices() <= 1; // I_n frozen for n >= 2
        return unfrozen ? empty_graph(0) : empty_graph(2);
    }
    return union_double(g);
}

// ---------------------------------------------------------------------
// CompareVertexCover -> beta-Stability. The stabilizing gadgets go on the
// H side and the K2 witness on the G side, so that the side whose optimal
// cover survives in the join is stable exactly when beta(G) > beta(H).
// When H has no edges the clique equalizer degenerates; the comparison is
// then decided directly and a canonical instance emitted.
// ---------------------------------------------------------------------

inline ConstructionResult compare_vc_to_beta_stability(const Graph& g,
    const Graph& h)
{
    ConstructionResult r;
    long mh = h.num_edges();
    if (mh == 0) {
        bool yes = g.num_edges() > 0; // beta(G) > 0 = beta(H)
        r.graph = yes ? empty_graph(1) : complete(2);
        r.notes = std::string("beta-stability comparison bypass (H edgeless): ")
            + (yes ? "canonical stable instance" : "canonical unstable instance");
        detail::tag_against_input(r, empty_graph(0), Origin::Padding);
        return r;
    }
    Graph hp = beta_stabilize_edges(h, h.edges()).graph; // beta-stable side
    Graph gp = disjoint_union(g, complete(2)); // never beta-stable
    Graph gpp = disjoint_union(gp, complete(int(2 * mh)));
    int ch = hp.num_vertices(), cg = gpp.num_vertices();
    Graph hppp = disjoint_union(hp, empty_graph(std::max(0, cg - ch)));
    Graph gppp = disjoint_union(gpp, empty_graph(std::max(0, ch - cg)));

    Graph s = join(hppp, gppp);
    std::vector<Edge> join_edges;
    int nh = hppp.num_vertices();
    for (int u = 0; u < nh; ++u)
        for (int v = 0; v < gppp.num_vertices(); ++v)
            join_edges.push_back({u, nh + v});
    ConstructionResult stabilized = beta_stabilize_edges(s, join_edges);

    r.graph = std::move(stabilized.graph);
    r.notes = "beta-stability comparison; gadget side carries H, K2 side "
              "carries G; join edges replaced by gadgets";
    detail::tag_against_input(r, s, Origin::Gadget);
    return r;
}

// CompareVertexCover -> beta-Unfrozenness: J = G' + H' with
// G' = (G u I_h) + (G u I_h) and H' = (H + K_{g+h}) u I_g. J is
// beta-unfrozen exactly if beta(G) <= beta(H). Requires g > 1 and h >= 1;
// outside that range the comparison is poly-decidable and a canonical
// instance is emitted.
inline ConstructionResult compare_vc_to_beta_unfrozenness(const Graph& g,
    const Graph& h)
{
    ConstructionResult r;
    int gn = g.num_vertices(), hn = h.num_vertices();
    if (gn <= 1 || hn == 0) {
        // g <= 1 means beta(G) = 0 <= beta(H); h = 0 means beta(H) = 0
        bool yes = gn <= 1 || g.num_edges() == 0;
        r.graph = yes ? empty_graph(1) : empty_graph(2);
        r.notes = std::string("beta-unfrozenness comparison bypass: ")
            + (yes ? "canonical unfrozen instance"
                   : "canonical frozen instance");
        detail::tag_against_input(r, empty_graph(0), Origin::Padding);
        return r;
    }
    Graph w = disjoint_union(g, empty_graph(hn));
    Graph gp = join(w, w);
    Graph hp = disjoint_union(join(h, complete(gn + hn)), empty_graph(gn));
    r.graph = join(gp, hp);
    r.notes = "beta-unfrozenness comparison: (G u I_h)+(G u I_h) joined "
              "with (H + K_{g+h}) u I_g";
    detail::tag_against_input(r, gp, Origin::Join);
    return r;
}

// beta-Unfrozenness -> beta-TwoWayStability: every edge gets the two-way
// gadget; the output is beta-two-way-stable exactly if the input is
// beta-unfrozen. Edgeless inputs pass through unchanged.
inline ConstructionResult beta_unfrozen_to_beta_twoway(const Graph& g)
{
    if (g.num_edges() == 0) {
        ConstructionResult r;
        r.graph = g;
        r.notes = "two-way pipeline: edgeless input returned unchanged";
        detail::tag_against_input(r, g, Origin::Original);
        return r;
    }
    ConstructionResult r = two_way_gadget_all(g);
    r.notes = "beta-unfrozenness to beta-two-way-stability pipeline";
    return r;
}

// ---------------------------------------------------------------------
// The classic 3SAT -> 3Colorability reduction (base triangle, literal
// pairs, two-stage or-gadgets): chi(output) = 3 if satisfiable, else 4.
// ---------------------------------------------------------------------

inline Graph gjs_3col(const CnfFormula& f)
{
    require_exact_3cnf(f, "gjs_3col");
    int n = f.num_vars();
    GraphBuilder b;
    int vt = b.add_vertex("T");
    int vf = b.add_vertex("F");
    int vb = b.add_vertex("B");
    b.add_edge(vt, vf);
    b.add_edge(vf, vb);
    b.add_edge(vt, vb);
    std::vector<int> pos(n), neg(n);
    for (int i = 0; i < n; ++i) {
        pos[i] = b.add_vertex("x" + std::to_string(i + 1));
        neg[i] = b.add_vertex("nx" + std::to_string(i + 1));
        b.add_edge(pos[i], neg[i]);
        b.add_edge(pos[i], vb);
        b.add_edge(neg[i], vb);
    }
    auto literal_vertex = [&](int lit) {
        return lit > 0 ? pos[lit - 1] : neg[-lit - 1];
    };
    // or-gadget: output vertex can be T iff some input is T
    auto or_gadget = [&](int in1, int in2, const std::string& tag) {
        int i1 = b.add_vertex("or_i1@" + tag);
        int i2 = b.add_vertex("or_i2@" + tag);
        int o = b.add_vertex("or_out@" + tag);
        b.add_edge(i1, in1);
        b.add_edge(i2, in2);
        b.add_edge(i1, i2);
        b.add_edge(i1, o);
        b.add_edge(i2, o);
        return o;
    };
    for (int i = 0; i < f.num_clauses(); ++i) {
        const Clause& c = f.clause(i);
        std::string ci = std::to_string(i + 1);
        int o1 = or_gadget(literal_vertex(c[0]), literal_vertex(c[1]),
            ci + "a");
        int o2 = or_gadget(o1, literal_vertex(c[2]), ci + "b");
        b.add_edge(o2, vf);
        b.add_edge(o2, vb);
    }
    return b.build();
}

// Wagner-style comparison instance: joins of gjs graphs. chi of each join
// is 3k + (number of unsatisfiable formulas among the k inputs).
inline std::pair<Graph, Graph> compare_colorability_instance(
    const std::vector<CnfFormula>& phis, const std::vector<CnfFormula>& psis)
{
    if (phis.size() != psis.size() || phis.empty())
        throw std::domain_error(
            "compare_colorability_instance: need equal-length nonempty lists");
    auto build = [](const std::vector<CnfFormula>& fs) {
        Graph acc = gjs_3col(fs[0]);
        for (size_t i = 1; i < fs.size(); ++i)
            acc = join(acc, gjs_3col(fs[i]));
        return acc;
    };
    return {build(phis), build(psis)};
}

// ---------------------------------------------------------------------
// Conditional chi-unfrozenness machinery: it consumes an externally
// supplied unfreezer (transform f with chi(f(G)) = chi(G) + shift(G) and
// f(G) unfrozen); whether a polynomial-time one exists is open.
// ---------------------------------------------------------------------

struct Unfreezer {
    std::string name;
    std::function<Graph(const Graph&)> transform;
    std::function<int(const Graph&)> shift;
};

// Test-only unfreezer: maps G to the complete graph on chi(G) vertices,
// which is vacuously unfrozen with shift 0. Exact solve inside, so it is
// only usable at desk scale.
inline Unfreezer exact_clique_unfreezer(const Solver& solver)
{
    Unfreezer u;
    u.name = "exact-clique";
    u.transform = [&solver](const Graph& g) {
        return complete(solver.value(g, GraphNumber::Chi));
    };
    u.shift = [](const Graph&) { return 0; };
    return u;
}

// U = (G + I_2 + K_{max(0,s-1)}) u (f(H) + K_{1+max(1-s,0)}) where
// s = shift(H); U is chi-unfrozen exactly if chi(G) <= chi(H), assuming
// the unfreezer meets its contract.
inline Graph conditional_unfrozenness_reduction(const Graph& g,
    const Graph& h, const Unfreezer& u)
{
    int s = u.shift(h);
    Graph gp = join(g, empty_graph(2));
    Graph gpp = join(gp, complete(std::max(0, s - 1)));
    Graph hp = u.transform(h);
    Graph hpp = join(hp, complete(1 + std::max(1 - s, 0)));
    return disjoint_union(gpp, hpp);
}

} // namespace stab
