#pragma once

#include "stab/bitset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stab {

using Edge = std::pair<int, int>; // stored normalized: first < second

inline Edge make_edge(int u, int v)
{
    return u < v ? Edge{u, v} : Edge{v, u};
}

enum class ElementKind { Vertex, Edge, NonEdge };

// Reference to a vertex, edge, or nonedge of a host graph.
struct ElementRef {
    ElementKind kind;
    int a = -1;
    int b = -1; // unused for vertices

    static ElementRef vertex(int v) { return {ElementKind::Vertex, v, -1}; }
    static ElementRef edge(int u, int v)
    {
        Edge e = make_edge(u, v);
        return {ElementKind::Edge, e.first, e.second};
    }
    static ElementRef nonedge(int u, int v)
    {
        Edge e = make_edge(u, v);
        return {ElementKind::NonEdge, e.first, e.second};
    }

    bool operator==(const ElementRef& o) const
    {
        return kind == o.kind && a == o.a && b == o.b;
    }
    bool operator<(const ElementRef& o) const
    {
        if (kind != o.kind)
            return kind < o.kind;
        if (a != o.a)
            return a < o.a;
        return b < o.b;
    }

    std::string to_string() const
    {
        switch (kind) {
        case ElementKind::Vertex:
            return "vertex " + std::to_string(a);
        case ElementKind::Edge:
            return "edge " + std::to_string(a) + "-" + std::to_string(b);
        default:
            return "nonedge " + std::to_string(a) + "-" + std::to_string(b);
        }
    }
};

// Simple undirected graph over dense 0-based vertex ids. Values are treated
// as immutable once built; all graph operations return new values. The
// mutating members exist for construction code only.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    Graph(int n, const std::vector<Edge>& edges) : Graph(n)
    {
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    int num_vertices() const { return n_; }

    long num_edges() const
    {
        long m = 0;
        for (const auto& row : adj_)
            m += row.count();
        return m / 2;
    }

    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    bool has_edge(int u, int v) const
    {
        return has_vertex(u) && has_vertex(v) && u != v && adj_[u].test(v);
    }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
                out.push_back({u, v});
        return out;
    }

    std::vector<Edge> nonedges() const
    {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!adj_[u].test(v))
                    out.push_back({u, v});
        return out;
    }

    // Construction-phase mutator. Rejects loops and duplicates.
    void add_edge(int u, int v)
    {
        if (!has_vertex(u) || !has_vertex(v))
            throw std::domain_error("add_edge: vertex out of range: "
                + std::to_string(u) + "-" + std::to_string(v));
        if (u == v)
            throw std::domain_error(
                "add_edge: self-loop at vertex " + std::to_string(u));
        if (adj_[u].test(v))
            throw std::domain_error("add_edge: duplicate "
                + ElementRef::edge(u, v).to_string());
        adj_[u].set(v);
        adj_[v].set(u);
    }

    // Appends an isolated vertex and returns its id.
    int add_vertex_raw()
    {
        ++n_;
        adj_.emplace_back(Bitset(n_));
        // grow existing rows
        for (int v = 0; v < n_ - 1; ++v) {
            Bitset row(n_);
            adj_[v].for_each([&](int w) { row.set(w); });
            adj_[v] = std::move(row);
        }
        return n_ - 1;
    }

    const std::map<int, std::string>& labels() const { return labels_; }

    const std::string* label(int v) const
    {
        auto it = labels_.find(v);
        return it == labels_.end() ? nullptr : &it->second;
    }

    void set_label(int v, std::string name)
    {
        if (!has_vertex(v))
            throw std::domain_error(
                "set_label: unknown vertex " + std::to_string(v));
        labels_[v] = std::move(name);
    }

    // First vertex carrying the given label, or -1.
    int vertex_by_label(const std::string& name) const
    {
        for (const auto& [v, l] : labels_)
            if (l == name)
                return v;
        return -1;
    }

    bool operator==(const Graph& o) const
    {
        return n_ == o.n_ && adj_ == o.adj_;
    }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::map<int, std::string> labels_;
};

// A graph under construction with cheap vertex/edge insertion; Graph's
// add_vertex_raw rebuilds rows, which is quadratic when gadget builders
// append many vertices.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(const Graph& g) : n_(g.num_vertices()), edges_(g.edges()), labels_(g.labels()) {}

    int add_vertex(std::string label = {})
    {
        int v = n_++;
        if (!label.empty())
            labels_[v] = std::move(label);
        return v;
    }

    void add_edge(int u, int v)
    {
        if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::domain_error("GraphBuilder::add_edge: bad edge "
                + std::to_string(u) + "-" + std::to_string(v));
        edges_.push_back(make_edge(u, v));
    }

    void remove_edge(int u, int v)
    {
        Edge e = make_edge(u, v);
        auto it = std::find(edges_.begin(), edges_.end(), e);
        if (it == edges_.end())
            throw std::domain_error("GraphBuilder::remove_edge: not an "
                + ElementRef::edge(u, v).to_string());
        edges_.erase(it);
    }

    void set_label(int v, std::string name) { labels_[v] = std::move(name); }

    int num_vertices() const { return n_; }

    Graph build() const
    {
        Graph g(n_);
        for (auto [u, v] : edges_)
            if (!g.has_edge(u, v))
                g.add_edge(u, v);
        for (const auto& [v, l] : labels_)
            g.set_label(v, l);
        return g;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::map<int, std::string> labels_;
};

// ---- canonical families ----

inline Graph complete(int k)
{
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph empty_graph(int k) { return Graph(k); }

inline Graph path(int k)
{
    Graph g(k);
    for (int v = 0; v + 1 < k; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int k)
{
    if (k < 3)
        throw std::domain_error("cycle: need at least 3 vertices");
    Graph g = path(k);
    g.add_edge(k - 1, 0);
    return g;
}

// ---- pure graph algebra ----

inline Graph disjoint_union(const Graph& g, const Graph& h)
{
    int n = g.num_vertices();
    Graph out(n + h.num_vertices());
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    for (auto [u, v] : h.edges())
        out.add_edge(u + n, v + n);
    for (const auto& [v, l] : g.labels())
        out.set_label(v, l);
    for (const auto& [v, l] : h.labels())
        out.set_label(v + n, l);
    return out;
}

inline Graph join(const Graph& g, const Graph& h)
{
    Graph out = disjoint_union(g, h);
    int n = g.num_vertices();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < h.num_vertices(); ++v)
            out.add_edge(u, n + v);
    return out;
}

inline Graph complement(const Graph& g)
{
    Graph out(g.num_vertices());
    for (auto [u, v] : g.nonedges())
        out.add_edge(u, v);
    for (const auto& [v, l] : g.labels())
        out.set_label(v, l);
    return out;
}

inline Graph delete_edge(const Graph& g, int u, int v)
{
    if (!g.has_edge(u, v))
        throw std::domain_error("delete_edge: not an "
            + ElementRef::edge(u, v).to_string());
    Graph out(g.num_vertices());
    Edge gone = make_edge(u, v);
    for (auto e : g.edges())
        if (e != gone)
            out.add_edge(e.first, e.second);
    for (const auto& [w, l] : g.labels())
        out.set_label(w, l);
    return out;
}

inline Graph add_edge(const Graph& g, int u, int v)
{
    if (!g.has_vertex(u) || !g.has_vertex(v) || u == v || g.has_edge(u, v))
        throw std::domain_error("add_edge: not a "
            + ElementRef::nonedge(u, v).to_string());
    Graph out = g;
    out.add_edge(u, v);
    return out;
}

// Deletes v together with its incident edges; higher ids shift down by one.
inline Graph delete_vertex(const Graph& g, int v)
{
    if (!g.has_vertex(v))
        throw std::domain_error("delete_vertex: unknown "
            + ElementRef::vertex(v).to_string());
    Graph out(g.num_vertices() - 1);
    auto shift = [v](int w) { return w > v ? w - 1 : w; };
    for (auto [a, b] : g.edges())
        if (a != v && b != v)
            out.add_edge(shift(a), shift(b));
    for (const auto& [w, l] : g.labels())
        if (w != v)
            out.set_label(shift(w), l);
    return out;
}

// Adds a new vertex adjacent to exactly the given neighborhood.
inline Graph add_vertex(const Graph& g, const std::vector<int>& neighborhood)
{
    Graph out(g.num_vertices() + 1);
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    int w = g.num_vertices();
    for (int v : neighborhood)
        out.add_edge(w, v);
    for (const auto& [v, l] : g.labels())
        out.set_label(v, l);
    return out;
}

// Adds a nonadjacent twin of v carrying v's current neighborhood.
inline Graph replicate_vertex(const Graph& g, int v)
{
    if (!g.has_vertex(v))
        throw std::domain_error("replicate_vertex: unknown "
            + ElementRef::vertex(v).to_string());
    std::vector<int> nbrs;
    g.neighbors(v).for_each([&](int w) { nbrs.push_back(w); });
    Graph out = add_vertex(g, nbrs);
    if (const std::string* l = g.label(v))
        out.set_label(out.num_vertices() - 1, *l + "'");
    return out;
}

} // namespace stab
