#pragma once

#include "stab/graph.hpp"
#include "stab/graph_number.hpp"
#include "stab/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stab {

// Status of one element under one graph number: for deletions the words are
// stable/critical, for additions unfrozen/frozen; in both cases the element
// keeps the graph number unchanged iff delta == 0.
struct ElementStatus {
    ElementRef element{ElementKind::Vertex, -1, -1};
    int delta = 0;

    bool unchanged() const { return delta == 0; }

    std::string status_word() const
    {
        if (element.kind == ElementKind::NonEdge)
            return unchanged() ? "unfrozen" : "frozen";
        return unchanged() ? "stable" : "critical";
    }
};

struct Verdicts {
    bool stable = true;
    bool vertex_stable = true;
    bool unfrozen = true;
    bool vertex_unfrozen = false;
    bool two_way_stable = true;
    bool vertex_two_way_stable = false;
    std::optional<int> k; // set when a k-prefixed verdict was requested
    bool k_stable = false;
    bool k_vertex_stable = false;
    bool k_unfrozen = false;
    bool k_vertex_unfrozen = false;
    bool k_two_way_stable = false;
    bool k_vertex_two_way_stable = false;
};

struct StabilityReport {
    GraphNumber xi = GraphNumber::Chi;
    int value = 0;
    std::vector<ElementStatus> edge_statuses;
    std::vector<ElementStatus> vertex_statuses;
    std::vector<ElementStatus> nonedge_statuses;
    Verdicts verdicts;
    SolveStats stats; // aggregate over all element queries
};

enum class EditOp { DeleteEdge, DeleteVertex, AddEdge };

namespace detail {

inline void accumulate(SolveStats& into, const SolveStats& s)
{
    into.nodes += s.nodes;
    into.seconds += s.seconds;
}

// Computes xi(edited) - base with one decision query. Every single-element
// edit changes each graph number by at most one; which side of base the
// value can move to depends on (xi, op).
inline int edit_delta(const Solver& solver, const Graph& edited,
    GraphNumber xi, int base, EditOp op)
{
    switch (xi) {
    case GraphNumber::Chi:
        if (op == EditOp::AddEdge) // chi' in {base, base+1}
            return solver.is_k_colorable(edited, base) ? 0 : +1;
        return solver.is_k_colorable(edited, base - 1) ? -1 : 0;
    case GraphNumber::Beta:
        if (op == EditOp::AddEdge)
            return solver.has_vertex_cover(edited, base) ? 0 : +1;
        return solver.has_vertex_cover(edited, base - 1) ? -1 : 0;
    case GraphNumber::Alpha: {
        // alpha(G') >= t  <=>  beta(G') <= |V(G')| - t
        int n = edited.num_vertices();
        if (op == EditOp::DeleteEdge) // alpha' in {base, base+1}
            return solver.has_vertex_cover(edited, n - (base + 1)) ? +1 : 0;
        return solver.has_vertex_cover(edited, n - base) ? 0 : -1;
    }
    default: {
        // omega(G') >= t  <=>  beta(complement G') <= |V(G')| - t
        Graph co = complement(edited);
        int n = edited.num_vertices();
        if (op == EditOp::AddEdge) // omega' in {base, base+1}
            return solver.has_vertex_cover(co, n - (base + 1)) ? +1 : 0;
        return solver.has_vertex_cover(co, n - base) ? 0 : -1;
    }
    }
}

} // namespace detail

// delta = xi(G - e) - xi(G)
inline ElementStatus edge_status(const Graph& g, Edge e, GraphNumber xi,
    const Solver& solver)
{
    if (!g.has_edge(e.first, e.second))
        throw std::domain_error("edge_status: not an "
            + ElementRef::edge(e.first, e.second).to_string());
    ElementStatus s;
    s.element = ElementRef::edge(e.first, e.second);
    int base = solver.value(g, xi);
    s.delta = detail::edit_delta(solver, delete_edge(g, e.first, e.second),
        xi, base, EditOp::DeleteEdge);
    return s;
}

// delta = xi(G - v) - xi(G)
inline ElementStatus vertex_status(const Graph& g, int v, GraphNumber xi,
    const Solver& solver)
{
    if (!g.has_vertex(v))
        throw std::domain_error(
            "vertex_status: unknown " + ElementRef::vertex(v).to_string());
    ElementStatus s;
    s.element = ElementRef::vertex(v);
    int base = solver.value(g, xi);
    s.delta = detail::edit_delta(
        solver, delete_vertex(g, v), xi, base, EditOp::DeleteVertex);
    return s;
}

// delta = xi(G + e') - xi(G)
inline ElementStatus nonedge_status(const Graph& g, Edge e, GraphNumber xi,
    const Solver& solver)
{
    if (!g.has_vertex(e.first) || !g.has_vertex(e.second)
        || e.first == e.second || g.has_edge(e.first, e.second))
        throw std::domain_error("nonedge_status: not a "
            + ElementRef::nonedge(e.first, e.second).to_string());
    ElementStatus s;
    s.element = ElementRef::nonedge(e.first, e.second);
    int base = solver.value(g, xi);
    s.delta = detail::edit_delta(solver, add_edge(g, e.first, e.second), xi,
        base, EditOp::AddEdge);
    return s;
}

// Closed forms the vertex-addition predicates reduce to; every other request
// would need 2^n attachment enumeration.
inline bool closed_form_verdict(const Graph& g, const std::string& predicate)
{
    if (predicate == "beta-vertex-stable")
        return g.num_edges() == 0;
    if (predicate == "chi-vertex-unfrozen")
        return false;
    if (predicate == "beta-vertex-unfrozen")
        return g.num_vertices() == 0;
    if (predicate == "alpha-vertex-unfrozen"
        || predicate == "omega-vertex-unfrozen")
        return false;
    if (predicate == "beta-vertex-two-way-stable")
        return g.num_vertices() == 0;
    if (predicate == "chi-vertex-two-way-stable"
        || predicate == "alpha-vertex-two-way-stable"
        || predicate == "omega-vertex-two-way-stable")
        return false;
    throw std::domain_error("closed_form_verdict: unknown predicate "
        + predicate);
}

inline bool vertex_unfrozen_closed_form(const Graph& g, GraphNumber xi)
{
    switch (xi) {
    case GraphNumber::Beta:
        return closed_form_verdict(g, "beta-vertex-unfrozen");
    case GraphNumber::Chi:
        return closed_form_verdict(g, "chi-vertex-unfrozen");
    case GraphNumber::Alpha:
        return closed_form_verdict(g, "alpha-vertex-unfrozen");
    default:
        return closed_form_verdict(g, "omega-vertex-unfrozen");
    }
}

// All 2^|V| vertex attachments with their deltas; cross-check for the
// closed forms only.
inline std::vector<std::pair<std::vector<int>, int>> enumerate_vertex_addition(
    const Graph& g, GraphNumber xi, const Solver& solver, int threshold = 12)
{
    int n = g.num_vertices();
    if (n > threshold)
        throw std::domain_error(
            "enumerate_vertex_addition: vertex count exceeds threshold");
    int base = solver.value(g, xi);
    std::vector<std::pair<std::vector<int>, int>> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        std::vector<int> nbrs;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1)
                nbrs.push_back(v);
        Graph edited = add_vertex(g, nbrs);
        int delta = solver.value(edited, xi) - base;
        out.push_back({std::move(nbrs), delta});
    }
    return out;
}

// Full per-element analysis plus graph-level verdicts. Vertex-addition
// verdicts use the closed forms, never attachment enumeration.
inline StabilityReport analyze(const Graph& g, GraphNumber xi,
    const Solver& solver, std::optional<int> k = std::nullopt)
{
    StabilityReport r;
    r.xi = xi;
    auto base = solver.graph_number(g, xi, false);
    r.value = base.value;
    detail::accumulate(r.stats, base.stats);

    std::vector<bool> dom;
    if (xi == GraphNumber::Chi)
        dom = detail::first_round_dominated(g);
    for (auto e : g.edges()) {
        ElementStatus s;
        s.element = ElementRef::edge(e.first, e.second);
        if (!dom.empty() && (dom[e.first] || dom[e.second]))
            s.delta = 0; // dominated endpoint: deletion cannot move chi
        else
            s.delta = detail::edit_delta(solver,
                delete_edge(g, e.first, e.second), xi, r.value,
                EditOp::DeleteEdge);
        r.verdicts.stable = r.verdicts.stable && s.unchanged();
        r.edge_statuses.push_back(std::move(s));
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        ElementStatus s;
        s.element = ElementRef::vertex(v);
        if (!dom.empty() && dom[v])
            s.delta = 0;
        else
            s.delta = detail::edit_delta(solver, delete_vertex(g, v), xi,
                r.value, EditOp::DeleteVertex);
        r.verdicts.vertex_stable = r.verdicts.vertex_stable && s.unchanged();
        r.vertex_statuses.push_back(std::move(s));
    }
    for (auto e : g.nonedges()) {
        ElementStatus s;
        s.element = ElementRef::nonedge(e.first, e.second);
        s.delta = detail::edit_delta(solver, add_edge(g, e.first, e.second),
            xi, r.value, EditOp::AddEdge);
        r.verdicts.unfrozen = r.verdicts.unfrozen && s.unchanged();
        r.nonedge_statuses.push_back(std::move(s));
    }

    r.verdicts.two_way_stable = r.verdicts.stable && r.verdicts.unfrozen;
    r.verdicts.vertex_unfrozen = vertex_unfrozen_closed_form(g, xi);
    r.verdicts.vertex_two_way_stable
        = r.verdicts.vertex_stable && r.verdicts.vertex_unfrozen;

    if (k) {
        r.verdicts.k = k;
        bool exact = (r.value == *k);
        r.verdicts.k_stable = exact && r.verdicts.stable;
        r.verdicts.k_vertex_stable = exact && r.verdicts.vertex_stable;
        r.verdicts.k_unfrozen = exact && r.verdicts.unfrozen;
        r.verdicts.k_vertex_unfrozen = exact && r.verdicts.vertex_unfrozen;
        r.verdicts.k_two_way_stable = exact && r.verdicts.two_way_stable;
        r.verdicts.k_vertex_two_way_stable
            = exact && r.verdicts.vertex_two_way_stable;
    }
    return r;
}

// ---- targeted classifications (cheaper than a full report) ----

inline bool is_stable(const Graph& g, GraphNumber xi, const Solver& solver)
{
    if (g.num_edges() == 0)
        return true;
    // chi cannot move when an endpoint has a nonadjacent dominator
    std::vector<bool> dom;
    if (xi == GraphNumber::Chi)
        dom = detail::first_round_dominated(g);
    int base = solver.value(g, xi);
    for (auto e : g.edges()) {
        if (!dom.empty() && (dom[e.first] || dom[e.second]))
            continue;
        if (detail::edit_delta(solver, delete_edge(g, e.first, e.second), xi,
                base, EditOp::DeleteEdge)
            != 0)
            return false;
    }
    return true;
}

inline bool is_vertex_stable(const Graph& g, GraphNumber xi,
    const Solver& solver)
{
    if (g.num_vertices() == 0)
        return true;
    std::vector<bool> dom;
    if (xi == GraphNumber::Chi)
        dom = detail::first_round_dominated(g);
    int base = solver.value(g, xi);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!dom.empty() && dom[v])
            continue;
        if (detail::edit_delta(solver, delete_vertex(g, v), xi, base,
                EditOp::DeleteVertex)
            != 0)
            return false;
    }
    return true;
}

inline bool is_unfrozen(const Graph& g, GraphNumber xi, const Solver& solver)
{
    auto nonedges = g.nonedges();
    if (nonedges.empty())
        return true;
    int base = solver.value(g, xi);
    for (auto e : nonedges)
        if (detail::edit_delta(solver, add_edge(g, e.first, e.second), xi,
                base, EditOp::AddEdge)
            != 0)
            return false;
    return true;
}

inline bool is_two_way_stable(const Graph& g, GraphNumber xi,
    const Solver& solver)
{
    return is_stable(g, xi, solver) && is_unfrozen(g, xi, solver);
}

// ---- the parallel-query membership plan for chi ----

enum class QueryPlanMode { Edges, Vertices, Both };

struct QueryPlan {
    struct Query {
        std::string name; // "G", "G-e:u-v", or "G-v:v"
        Graph graph;
        int k;
    };
    std::vector<Query> queries;
    std::string combiner;
};

// Exactly the oracle queries (G,k), (G-e,k), (G-v,k) for every edge/vertex
// in scope and every k in {0..|V(G)|}.
inline QueryPlan query_plan(const Graph& g, QueryPlanMode mode)
{
    QueryPlan plan;
    plan.combiner
        = "chi(X) = min k with (X,k) answered yes; an edge e is stable iff "
          "chi(G-e) = chi(G); a vertex v is stable iff chi(G-v) = chi(G); "
          "stable iff all edges stable; vertex-stable iff all vertices "
          "stable";
    int n = g.num_vertices();
    auto push = [&](const std::string& name, const Graph& h) {
        for (int k = 0; k <= n; ++k)
            plan.queries.push_back({name, h, k});
    };
    push("G", g);
    if (mode == QueryPlanMode::Edges || mode == QueryPlanMode::Both)
        for (auto [u, v] : g.edges())
            push("G-e:" + std::to_string(u) + "-" + std::to_string(v),
                delete_edge(g, u, v));
    if (mode == QueryPlanMode::Vertices || mode == QueryPlanMode::Both)
        for (int v = 0; v < n; ++v)
            push("G-v:" + std::to_string(v), delete_vertex(g, v));
    return plan;
}

struct QueryPlanVerdicts {
    int chi = 0;
    bool stable = true;
    bool vertex_stable = true;
};

// Answers every query with the k-colorability solver (conceptually one
// parallel round) and applies the combiner.
inline QueryPlanVerdicts execute_query_plan(const QueryPlan& plan,
    const Solver& solver)
{
    std::vector<std::pair<const QueryPlan::Query*, bool>> answers;
    answers.reserve(plan.queries.size());
    for (const auto& q : plan.queries)
        answers.push_back({&q, solver.is_k_colorable(q.graph, q.k)});

    auto chi_of = [&](const std::string& name) {
        int best = -1;
        for (auto& [q, yes] : answers)
            if (q->name == name && yes && (best == -1 || q->k < best))
                best = q->k;
        return best;
    };

    QueryPlanVerdicts v;
    v.chi = chi_of("G");
    for (auto& [q, yes] : answers) {
        (void)yes;
        if (q->k != 0 || q->name == "G")
            continue;
        int sub = chi_of(q->name);
        if (q->name.rfind("G-e:", 0) == 0 && sub != v.chi)
            v.stable = false;
        if (q->name.rfind("G-v:", 0) == 0 && sub != v.chi)
            v.vertex_stable = false;
    }
    return v;
}

} // namespace stab
