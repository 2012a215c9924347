#pragma once

#include "stab/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stab {

enum class Origin { Original, Gadget, Join, Replica, Padding };

inline const char* to_string(Origin o)
{
    switch (o) {
    case Origin::Original:
        return "original";
    case Origin::Gadget:
        return "gadget";
    case Origin::Join:
        return "join";
    case Origin::Replica:
        return "replica";
    default:
        return "padding";
    }
}

struct ProvenanceTag {
    Origin origin = Origin::Gadget;
    std::optional<ElementRef> source; // input element, for origin=original
};

struct ConstructionResult {
    Graph graph;
    std::map<ElementRef, ProvenanceTag> element_provenance;
    int value_shift = 0; // claimed xi(output) - xi(input)
    std::string notes;
};

namespace detail {

inline std::string edge_tag(Edge e)
{
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

// Tags all vertices and edges of `out`: elements also present in `in` (and
// below its vertex count) become original, everything else gets `fresh`.
inline void tag_against_input(ConstructionResult& r, const Graph& in,
    Origin fresh)
{
    int n = in.num_vertices();
    for (int v = 0; v < r.graph.num_vertices(); ++v) {
        if (v < n)
            r.element_provenance[ElementRef::vertex(v)]
                = {Origin::Original, ElementRef::vertex(v)};
        else
            r.element_provenance[ElementRef::vertex(v)] = {fresh, {}};
    }
    for (auto [u, v] : r.graph.edges()) {
        if (u < n && v < n && in.has_edge(u, v))
            r.element_provenance[ElementRef::edge(u, v)]
                = {Origin::Original, ElementRef::edge(u, v)};
        else
            r.element_provenance[ElementRef::edge(u, v)] = {fresh, {}};
    }
}

} // namespace detail

// Replaces the edge {v1,v2} by a 4-cycle u1-u2-u3-u4 hooked up as
// v1-u1, v1-u3, v2-u2, v2-u4. Raises beta by exactly 2, every gadget edge
// is beta-stable, and the other edges keep their beta-stability status.
inline ConstructionResult beta_stabilize_edge(const Graph& g, Edge e)
{
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        throw std::domain_error("beta_stabilize_edge: not an "
            + ElementRef::edge(e.first, e.second).to_string());
    GraphBuilder b(g);
    b.remove_edge(e.first, e.second);
    std::string tag = detail::edge_tag(e);
    int u1 = b.add_vertex("u1@" + tag);
    int u2 = b.add_vertex("u2@" + tag);
    int u3 = b.add_vertex("u3@" + tag);
    int u4 = b.add_vertex("u4@" + tag);
    b.add_edge(u1, u2);
    b.add_edge(u2, u3);
    b.add_edge(u3, u4);
    b.add_edge(u4, u1);
    b.add_edge(e.first, u1);
    b.add_edge(e.first, u3);
    b.add_edge(e.second, u2);
    b.add_edge(e.second, u4);

    ConstructionResult r;
    r.graph = b.build();
    r.value_shift = 2;
    r.notes = "beta-stabilize edge " + tag;
    detail::tag_against_input(r, g, Origin::Gadget);
    return r;
}

// Iterates the single-edge gadget over S in ascending edge order.
inline ConstructionResult beta_stabilize_edges(const Graph& g,
    std::vector<Edge> s)
{
    for (auto& e : s)
        e = make_edge(e.first, e.second);
    std::sort(s.begin(), s.end());
    Graph cur = g;
    for (auto e : s)
        cur = beta_stabilize_edge(cur, e).graph;
    ConstructionResult r;
    r.graph = std::move(cur);
    r.value_shift = 2 * int(s.size());
    r.notes = "beta-stabilize " + std::to_string(s.size()) + " edges";
    detail::tag_against_input(r, g, Origin::Gadget);
    // edges of g that were in s are gone; surviving original edges tagged
    // by tag_against_input already
    return r;
}

// Attaches to the edge {v,v'} the 8-vertex gadget: a clique on
// {u1..u4,u1'..u4'} minus the perfect matching {ui,ui'}, plus v-u1, v-u2,
// v'-u3, v'-u4. The edge itself stays. Raises beta by exactly 6.
inline ConstructionResult two_way_gadget_edge(const Graph& g, Edge e)
{
    e = make_edge(e.first, e.second);
    if (g.num_vertices() == 0)
        throw std::domain_error("two_way_gadget_edge: graph is empty");
    if (!g.has_edge(e.first, e.second))
        throw std::domain_error("two_way_gadget_edge: not an "
            + ElementRef::edge(e.first, e.second).to_string());
    GraphBuilder b(g);
    std::string tag = detail::edge_tag(e);
    int u[4], up[4];
    for (int i = 0; i < 4; ++i)
        u[i] = b.add_vertex("u" + std::to_string(i + 1) + "@" + tag);
    for (int i = 0; i < 4; ++i)
        up[i] = b.add_vertex("u" + std::to_string(i + 1) + "'@" + tag);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i < j) {
                b.add_edge(u[i], u[j]);
                b.add_edge(up[i], up[j]);
            }
            if (i != j)
                b.add_edge(u[i], up[j]);
        }
    b.add_edge(e.first, u[0]);
    b.add_edge(e.first, u[1]);
    b.add_edge(e.second, u[2]);
    b.add_edge(e.second, u[3]);

    ConstructionResult r;
    r.graph = b.build();
    r.value_shift = 6;
    r.notes = "two-way gadget on edge " + tag;
    detail::tag_against_input(r, g, Origin::Gadget);
    return r;
}

inline ConstructionResult two_way_gadget_all(const Graph& g)
{
    Graph cur = g;
    auto edges = g.edges(); // ascending (min,max) order already
    for (auto e : edges)
        cur = two_way_gadget_edge(cur, e).graph;
    ConstructionResult r;
    r.graph = std::move(cur);
    r.value_shift = 6 * int(edges.size());
    r.notes = "two-way gadget on all " + std::to_string(edges.size())
        + " edges";
    detail::tag_against_input(r, g, Origin::Gadget);
    return r;
}

// The chi edge-stabilization surgery: joins a 4-cycle core {w1',w2',w1'',
// w2''} to G, and per edge e={v1,v2} of S adds a copy of G joined to v1,
// a vertex u' joined to the copy and to v2, replicas of the copy and of
// u', and finally deletes e. Raises chi by exactly 2; all edges outside
// E(G)\S end up stable, and edges of E(G)\S keep their status.
inline ConstructionResult chi_stabilize_edges(const Graph& g,
    std::vector<Edge> s)
{
    if (s.empty())
        throw std::domain_error("chi_stabilize_edges: S must be nonempty");
    for (auto& e : s) {
        e = make_edge(e.first, e.second);
        if (!g.has_edge(e.first, e.second))
            throw std::domain_error("chi_stabilize_edges: not an "
                + ElementRef::edge(e.first, e.second).to_string());
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());

    int n = g.num_vertices();
    auto g_edges = g.edges();
    GraphBuilder b(g);

    int w1p = b.add_vertex("w1'");
    int w2p = b.add_vertex("w2'");
    int w1pp = b.add_vertex("w1''");
    int w2pp = b.add_vertex("w2''");
    b.add_edge(w1p, w2p);
    b.add_edge(w1p, w2pp);
    b.add_edge(w1pp, w2p);
    b.add_edge(w1pp, w2pp);
    for (int v = 0; v < n; ++v)
        for (int w : {w1p, w2p, w1pp, w2pp})
            b.add_edge(v, w);

    for (auto e : s) {
        auto [v1, v2] = e;
        std::string tag = detail::edge_tag(e);
        // copy of the original G, joined to v1
        std::vector<int> copy(n);
        for (int i = 0; i < n; ++i)
            copy[i] = b.add_vertex("v'" + std::to_string(i) + "@" + tag);
        for (auto [a, c] : g_edges)
            b.add_edge(copy[a], copy[c]);
        for (int i = 0; i < n; ++i)
            b.add_edge(v1, copy[i]);
        // u' joined to the copy and connected to v2
        int up = b.add_vertex("u'@" + tag);
        for (int i = 0; i < n; ++i)
            b.add_edge(up, copy[i]);
        b.add_edge(up, v2);
        // simultaneous replicas of the copy vertices and of u'
        for (int i = 0; i < n; ++i) {
            int rep = b.add_vertex("v''" + std::to_string(i) + "@" + tag);
            g.neighbors(i).for_each([&](int j) { b.add_edge(rep, copy[j]); });
            b.add_edge(rep, v1);
            b.add_edge(rep, up);
        }
        int upp = b.add_vertex("u''@" + tag);
        for (int i = 0; i < n; ++i)
            b.add_edge(upp, copy[i]);
        b.add_edge(upp, v2);
        // the stabilized edge disappears
        b.remove_edge(v1, v2);
    }

    ConstructionResult r;
    r.graph = b.build();
    r.value_shift = 2;
    r.notes = "chi-stabilize " + std::to_string(s.size()) + " edges";
    detail::tag_against_input(r, g, Origin::Gadget);
    // replicas deserve their own origin
    for (int v = 0; v < r.graph.num_vertices(); ++v) {
        const std::string* l = r.graph.label(v);
        if (l && (l->rfind("v''", 0) == 0 || l->rfind("u''", 0) == 0
                     || *l == "w1''" || *l == "w2''"))
            r.element_provenance[ElementRef::vertex(v)]
                = {Origin::Replica, {}};
    }
    return r;
}

enum class AndFlavor { VertexStability, Unfrozenness };

// Plain iterated join: an AND combinator for vertex-stability and for
// unfrozenness; chi adds over the parts.
inline ConstructionResult join_and(const std::vector<Graph>& graphs,
    AndFlavor flavor)
{
    if (graphs.empty())
        throw std::domain_error("join_and: need at least one graph");
    Graph cur = graphs[0];
    for (size_t i = 1; i < graphs.size(); ++i)
        cur = join(cur, graphs[i]);

    ConstructionResult r;
    r.graph = std::move(cur);
    r.value_shift = 0;
    r.notes = std::string("join AND for ")
        + (flavor == AndFlavor::VertexStability ? "vertex-stability"
                                                : "unfrozenness")
        + " over " + std::to_string(graphs.size()) + " graphs";

    // vertices and intra-part edges are original; cross edges are join edges
    std::vector<int> offset(graphs.size() + 1, 0);
    for (size_t i = 0; i < graphs.size(); ++i)
        offset[i + 1] = offset[i] + graphs[i].num_vertices();
    auto part_of = [&](int v) {
        size_t p = 0;
        while (v >= offset[p + 1])
            ++p;
        return p;
    };
    for (int v = 0; v < r.graph.num_vertices(); ++v)
        r.element_provenance[ElementRef::vertex(v)]
            = {Origin::Original, ElementRef::vertex(v)};
    for (auto [u, v] : r.graph.edges()) {
        if (part_of(u) == part_of(v))
            r.element_provenance[ElementRef::edge(u, v)]
                = {Origin::Original, ElementRef::edge(u, v)};
        else
            r.element_provenance[ElementRef::edge(u, v)] = {Origin::Join, {}};
    }
    return r;
}

// The AND combinator for stability: join everything, then stabilize all
// join edges in a single application of the chi gadget. (One application,
// not one per edge: the gadget more than doubles the graph, so iterating
// it is not affordable.)
inline ConstructionResult stabilized_join_and(const std::vector<Graph>& graphs)
{
    ConstructionResult joined = join_and(graphs, AndFlavor::VertexStability);
    std::vector<Edge> join_edges;
    for (const auto& [ref, tag] : joined.element_provenance)
        if (ref.kind == ElementKind::Edge && tag.origin == Origin::Join)
            join_edges.push_back({ref.a, ref.b});
    if (join_edges.empty()) {
        joined.notes = "stability AND (no join edges to stabilize)";
        return joined;
    }
    ConstructionResult r = chi_stabilize_edges(joined.graph, join_edges);
    r.notes = "stability AND over " + std::to_string(graphs.size())
        + " graphs; " + std::to_string(join_edges.size())
        + " join edges stabilized";
    r.value_shift = 2; // relative to the plain join
    return r;
}

} // namespace stab
