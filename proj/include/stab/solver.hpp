#pragma once

#include "stab/budget.hpp"
#include "stab/graph.hpp"
#include "stab/graph_number.hpp"

#include <array>
#include <cassert>
#include <functional>
#include <optional>
#include <vector>

namespace stab {

struct SolveResult {
    int value = 0;
    // exactly one witness kind is set, depending on the query
    std::optional<std::vector<int>> coloring;   // vertex -> color index
    std::optional<std::vector<int>> vertex_set; // cover / independent / clique
    SolveStats stats;
};

inline bool valid_coloring(const Graph& g, const std::vector<int>& color,
    int num_colors)
{
    if (int(color.size()) != g.num_vertices())
        return false;
    int used = 0;
    std::vector<bool> seen(num_colors + 1, false);
    for (int c : color) {
        if (c < 0 || c >= num_colors)
            return false;
        if (!seen[c]) {
            seen[c] = true;
            ++used;
        }
    }
    if (used != num_colors)
        return false;
    for (auto [u, v] : g.edges())
        if (color[u] == color[v])
            return false;
    return true;
}

inline bool valid_cover(const Graph& g, const std::vector<int>& cover)
{
    std::vector<bool> in(g.num_vertices(), false);
    for (int v : cover) {
        if (v < 0 || v >= g.num_vertices() || in[v])
            return false;
        in[v] = true;
    }
    for (auto [u, v] : g.edges())
        if (!in[u] && !in[v])
            return false;
    return true;
}

inline bool valid_independent_set(const Graph& g, const std::vector<int>& set)
{
    std::vector<bool> in(g.num_vertices(), false);
    for (int v : set) {
        if (v < 0 || v >= g.num_vertices() || in[v])
            return false;
        in[v] = true;
    }
    for (auto [u, v] : g.edges())
        if (in[u] && in[v])
            return false;
    return true;
}

inline bool valid_clique(const Graph& g, const std::vector<int>& set)
{
    for (int v : set)
        if (v < 0 || v >= g.num_vertices())
            return false;
    for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = i + 1; j < set.size(); ++j)
            if (!g.has_edge(set[i], set[j]))
                return false;
    return true;
}

namespace detail {

// ---------------------------------------------------------------------
// Minimum vertex cover: branch and reduce over a mutable id space that
// grows when folds contract vertices.
// ---------------------------------------------------------------------

struct VcFold {
    bool twin = false;
    int w = -1;                       // contracted vertex
    int v = -1;                       // deg-2 center / first twin
    int v2 = -1;                      // second twin
    std::array<int, 3> s{-1, -1, -1}; // neighbors (deg-2 uses s[0], s[1])
};

class VcState {
public:
    VcState() = default;

    explicit VcState(const Graph& g)
    {
        init(g.num_vertices());
        for (auto [u, v] : g.edges())
            add_edge(u, v);
    }

    void init(int n)
    {
        cap_ = 2 * n + 16;
        next_ = n;
        adj_.assign(cap_, Bitset(cap_));
        alive_ = Bitset(cap_);
        deg_.assign(cap_, 0);
        for (int v = 0; v < n; ++v)
            alive_.set(v);
    }

    int capacity() const { return cap_; }
    const Bitset& alive() const { return alive_; }
    int alive_count() const { return alive_.count(); }
    const Bitset& nbrs(int v) const { return adj_[v]; }
    int deg(int v) const { return deg_[v]; }
    bool is_alive(int v) const { return alive_.test(v); }

    void remove_vertex(int v)
    {
        alive_.reset(v);
        adj_[v].for_each([&](int u) {
            adj_[u].reset(v);
            --deg_[u];
        });
        adj_[v].clear();
        deg_[v] = 0;
    }

    int fresh_vertex()
    {
        if (next_ == cap_)
            grow();
        int w = next_++;
        alive_.set(w);
        return w;
    }

    void add_edge(int u, int v)
    {
        if (!adj_[u].test(v)) {
            adj_[u].set(v);
            adj_[v].set(u);
            ++deg_[u];
            ++deg_[v];
        }
    }

private:
    void grow()
    {
        int ncap = cap_ * 2;
        std::vector<Bitset> nadj(ncap, Bitset(ncap));
        Bitset nalive(ncap);
        for (int v = 0; v < cap_; ++v) {
            if (alive_.test(v))
                nalive.set(v);
            adj_[v].for_each([&](int u) { nadj[v].set(u); });
        }
        adj_ = std::move(nadj);
        alive_ = std::move(nalive);
        deg_.resize(ncap, 0);
        cap_ = ncap;
    }

    int cap_ = 0;
    int next_ = 0;
    std::vector<Bitset> adj_;
    Bitset alive_;
    std::vector<int> deg_;
};

// Greedy packing of vertex-disjoint cliques; a clique on q vertices forces
// q-1 cover vertices, so the packed sum is a valid lower bound.
inline int vc_packing_bound(const VcState& st)
{
    Bitset used(st.capacity());
    int lb = 0;
    for (int v = st.alive().first(); v != -1; v = st.alive().next(v)) {
        if (used.test(v) || st.deg(v) == 0)
            continue;
        Bitset cand = st.nbrs(v);
        cand.and_not(used);
        int size = 1;
        used.set(v);
        while (true) {
            int u = cand.first();
            if (u == -1)
                break;
            used.set(u);
            ++size;
            cand &= st.nbrs(u);
            cand.and_not(used);
        }
        lb += size - 1;
    }
    return lb;
}

struct VcKernelOut {
    std::vector<int> forced; // vertices forced into some optimal cover
    std::vector<VcFold> folds;
    int extra = 0; // cover size contributed by folds
};

inline bool vc_is_clique(const VcState& st, const Bitset& set)
{
    std::vector<int> vs;
    set.for_each([&](int v) { vs.push_back(v); });
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!st.nbrs(vs[i]).test(vs[j]))
                return false;
    return true;
}

inline void vc_take(VcState& st, VcKernelOut& out, int v)
{
    out.forced.push_back(v);
    st.remove_vertex(v);
}

// Reduction rules applied to a fixpoint:
//  - simplicial vertex (neighborhood is a clique): take the neighborhood;
//    covers isolated vertices, pendants, and clique components
//  - degree-2 vertex with nonadjacent neighbors: fold
//  - adjacent domination N[u] subseteq N[v]: take v
//  - nonadjacent degree-3 twins: take the shared neighborhood when it has
//    an edge, otherwise fold
inline void vc_kernelize(VcState& st, VcKernelOut& out)
{
    bool changed = true;
    while (changed) {
        changed = false;

        for (int v = st.alive().first(); v != -1;) {
            int nxt = st.alive().next(v);
            int d = st.deg(v);
            if (d == 0) {
                st.remove_vertex(v);
                changed = true;
            } else if (d <= 64 && vc_is_clique(st, st.nbrs(v))) {
                std::vector<int> nb;
                st.nbrs(v).for_each([&](int u) { nb.push_back(u); });
                st.remove_vertex(v);
                for (int u : nb)
                    vc_take(st, out, u);
                changed = true;
            } else if (d == 2) {
                int a = st.nbrs(v).first();
                int b = st.nbrs(v).next(a);
                // a ~ b would have hit the simplicial rule
                VcFold f;
                f.v = v;
                f.s = {a, b, -1};
                Bitset merged = st.nbrs(a);
                merged |= st.nbrs(b);
                merged.reset(v);
                merged.reset(a);
                merged.reset(b);
                st.remove_vertex(v);
                st.remove_vertex(a);
                st.remove_vertex(b);
                int w = st.fresh_vertex();
                merged.for_each([&](int u) {
                    if (st.is_alive(u) && u != w)
                        st.add_edge(w, u);
                });
                f.w = w;
                out.folds.push_back(f);
                out.extra += 1;
                changed = true;
            }
            v = nxt;
        }
        if (changed)
            continue;

        // adjacent domination: a dominator of u is a common neighbor of
        // N[u], restricted to N(u)
        for (int u = st.alive().first(); u != -1; u = st.alive().next(u)) {
            if (st.deg(u) == 0)
                continue;
            Bitset cand = st.alive();
            st.nbrs(u).for_each([&](int x) {
                Bitset closed = st.nbrs(x);
                closed.set(x);
                cand &= closed;
            });
            cand &= st.nbrs(u);
            int v = cand.first();
            if (v != -1) {
                vc_take(st, out, v);
                changed = true;
                break;
            }
        }
        if (changed)
            continue;

        // nonadjacent degree-3 twins
        std::vector<int> deg3;
        for (int v = st.alive().first(); v != -1; v = st.alive().next(v))
            if (st.deg(v) == 3)
                deg3.push_back(v);
        for (size_t i = 0; i < deg3.size() && !changed; ++i) {
            for (size_t j = i + 1; j < deg3.size() && !changed; ++j) {
                int u = deg3[i], v = deg3[j];
                if (st.nbrs(u).test(v) || !(st.nbrs(u) == st.nbrs(v)))
                    continue;
                std::array<int, 3> s{};
                int idx = 0;
                st.nbrs(u).for_each([&](int x) { s[idx++] = x; });
                bool s_edge = st.nbrs(s[0]).test(s[1])
                    || st.nbrs(s[0]).test(s[2]) || st.nbrs(s[1]).test(s[2]);
                if (s_edge) {
                    st.remove_vertex(u);
                    st.remove_vertex(v);
                    for (int x : s)
                        vc_take(st, out, x);
                } else {
                    VcFold f;
                    f.twin = true;
                    f.v = u;
                    f.v2 = v;
                    f.s = s;
                    Bitset merged(st.capacity());
                    for (int x : s)
                        merged |= st.nbrs(x);
                    merged.reset(u);
                    merged.reset(v);
                    st.remove_vertex(u);
                    st.remove_vertex(v);
                    for (int x : s) {
                        merged.reset(x);
                        st.remove_vertex(x);
                    }
                    int w = st.fresh_vertex();
                    merged.for_each([&](int x) {
                        if (st.is_alive(x) && x != w)
                            st.add_edge(w, x);
                    });
                    f.w = w;
                    out.folds.push_back(f);
                    out.extra += 2;
                }
                changed = true;
            }
        }
    }
}

// Expands fold records (in reverse) into cover decisions.
inline void vc_unfold(const std::vector<VcFold>& folds, std::vector<char>& in)
{
    for (auto it = folds.rbegin(); it != folds.rend(); ++it) {
        if (size_t(it->w) >= in.size())
            in.resize(it->w + 1, 0);
        if (!it->twin) {
            if (in[it->w]) {
                in[it->w] = 0;
                in[it->s[0]] = 1;
                in[it->s[1]] = 1;
            } else {
                in[it->v] = 1;
            }
        } else {
            if (in[it->w]) {
                in[it->w] = 0;
                in[it->s[0]] = 1;
                in[it->s[1]] = 1;
                in[it->s[2]] = 1;
            } else {
                in[it->v] = 1;
                in[it->v2] = 1;
            }
        }
    }
}

inline std::vector<Bitset> vc_components(const VcState& st)
{
    std::vector<Bitset> comps;
    Bitset left = st.alive();
    while (true) {
        int seed = left.first();
        if (seed == -1)
            break;
        Bitset comp(st.capacity());
        std::vector<int> stack{seed};
        comp.set(seed);
        left.reset(seed);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            Bitset fresh = st.nbrs(v);
            fresh &= left;
            fresh.for_each([&](int u) {
                comp.set(u);
                left.reset(u);
                stack.push_back(u);
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Extracts the subset-induced subgraph into a compact standalone state;
// back[i] is the id in st that compact vertex i stands for.
inline VcState vc_compact(const VcState& st, const Bitset& subset,
    std::vector<int>& back)
{
    back.clear();
    subset.for_each([&](int v) { back.push_back(v); });
    std::vector<int> fwd(st.capacity(), -1);
    for (size_t i = 0; i < back.size(); ++i)
        fwd[back[i]] = int(i);
    VcState out;
    out.init(int(back.size()));
    for (size_t i = 0; i < back.size(); ++i) {
        st.nbrs(back[i]).for_each([&](int u) {
            if (fwd[u] > int(i))
                out.add_edge(int(i), fwd[u]);
        });
    }
    return out;
}

inline int vc_greedy_cover(VcState st, std::vector<int>* cover)
{
    int size = 0;
    while (true) {
        int best = -1, bestd = 0;
        for (int v = st.alive().first(); v != -1; v = st.alive().next(v))
            if (st.deg(v) > bestd) {
                bestd = st.deg(v);
                best = v;
            }
        if (best == -1)
            return size;
        if (cover)
            cover->push_back(best);
        st.remove_vertex(best);
        ++size;
    }
}

// Exact minimum vertex cover of st's alive subgraph, reported only when it
// is strictly below `limit`; result ids are alive-at-entry ids. Mutates st.
inline std::optional<std::vector<int>> vc_search(VcState& st, int limit,
    BudgetClock& clock)
{
    clock.tick();
    if (limit <= 0)
        return std::nullopt;

    VcKernelOut k;
    vc_kernelize(st, k);
    int base = int(k.forced.size()) + k.extra;
    if (base >= limit)
        return std::nullopt;

    std::vector<char> in(st.capacity(), 0);
    for (int v : k.forced)
        in[v] = 1;

    auto finish = [&](const std::vector<int>& rest)
        -> std::optional<std::vector<int>> {
        for (int v : rest)
            in[v] = 1;
        vc_unfold(k.folds, in);
        std::vector<int> cover;
        for (size_t v = 0; v < in.size(); ++v)
            if (in[v])
                cover.push_back(int(v));
        return cover;
    };

    if (st.alive().none())
        return finish({});

    if (base + vc_packing_bound(st) >= limit)
        return std::nullopt;

    auto comps = vc_components(st);
    if (comps.size() > 1) {
        std::vector<VcState> subs(comps.size());
        std::vector<std::vector<int>> backs(comps.size());
        std::vector<int> lbs(comps.size());
        int lbsum = 0;
        for (size_t i = 0; i < comps.size(); ++i) {
            subs[i] = vc_compact(st, comps[i], backs[i]);
            lbs[i] = vc_packing_bound(subs[i]);
            lbsum += lbs[i];
        }
        if (base + lbsum >= limit)
            return std::nullopt;
        std::vector<int> rest;
        int taken = 0, remaining_lb = lbsum;
        for (size_t i = 0; i < comps.size(); ++i) {
            remaining_lb -= lbs[i];
            int sub_limit = limit - base - taken - remaining_lb;
            auto res = vc_search(subs[i], sub_limit, clock);
            if (!res)
                return std::nullopt;
            taken += int(res->size());
            for (int v : *res)
                rest.push_back(backs[i][v]);
        }
        return finish(rest);
    }

    // single component: compact, then branch on a maximum-degree vertex
    std::vector<int> back;
    VcState sub = vc_compact(st, st.alive(), back);

    int bv = 0, bd = -1;
    for (int v = sub.alive().first(); v != -1; v = sub.alive().next(v))
        if (sub.deg(v) > bd) {
            bd = sub.deg(v);
            bv = v;
        }

    std::optional<std::vector<int>> best;
    int best_size = limit - base; // must beat this

    { // bv in the cover
        VcState child = sub;
        child.remove_vertex(bv);
        auto res = vc_search(child, best_size - 1, clock);
        if (res) {
            res->push_back(bv);
            best_size = int(res->size());
            best = std::move(res);
        }
    }
    { // bv excluded: all its neighbors in the cover
        std::vector<int> nb;
        sub.nbrs(bv).for_each([&](int u) { nb.push_back(u); });
        if (int(nb.size()) < best_size) {
            VcState child = sub;
            child.remove_vertex(bv);
            for (int u : nb)
                child.remove_vertex(u);
            auto res = vc_search(child, best_size - int(nb.size()), clock);
            if (res) {
                res->insert(res->end(), nb.begin(), nb.end());
                best = std::move(res);
            }
        }
    }
    if (!best)
        return std::nullopt;
    for (int& v : *best)
        v = back[v];
    return finish(*best);
}

// ---------------------------------------------------------------------
// Chromatic number: dominated-vertex collapse, union and join
// decomposition, DSATUR branch and bound on the atoms.
// ---------------------------------------------------------------------

struct InducedGraph {
    Graph graph;
    std::vector<int> back; // induced id -> host id
};

inline InducedGraph induced_subgraph(const Graph& g,
    const std::vector<int>& verts)
{
    InducedGraph out;
    out.back = verts;
    std::vector<int> fwd(g.num_vertices(), -1);
    for (size_t i = 0; i < verts.size(); ++i)
        fwd[verts[i]] = int(i);
    Graph sub(int(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i) {
        g.neighbors(verts[i]).for_each([&](int u) {
            if (fwd[u] > int(i))
                sub.add_edge(int(i), fwd[u]);
        });
    }
    out.graph = std::move(sub);
    return out;
}

inline std::vector<std::vector<int>> graph_components(const Graph& g)
{
    int n = g.num_vertices();
    std::vector<std::vector<int>> comps;
    Bitset left(n);
    for (int v = 0; v < n; ++v)
        left.set(v);
    while (true) {
        int seed = left.first();
        if (seed == -1)
            break;
        std::vector<int> comp{seed}, stack{seed};
        left.reset(seed);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            Bitset fresh = g.neighbors(v);
            fresh &= left;
            fresh.for_each([&](int u) {
                comp.push_back(u);
                left.reset(u);
                stack.push_back(u);
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Connected components of the complement; more than one means the graph is
// the join of the parts.
inline std::vector<std::vector<int>> cocomponents(const Graph& g)
{
    int n = g.num_vertices();
    std::vector<std::vector<int>> comps;
    Bitset left(n);
    for (int v = 0; v < n; ++v)
        left.set(v);
    while (true) {
        int seed = left.first();
        if (seed == -1)
            break;
        std::vector<int> comp{seed}, stack{seed};
        left.reset(seed);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            Bitset fresh = left;
            fresh.and_not(g.neighbors(v));
            fresh.for_each([&](int u) {
                comp.push_back(u);
                left.reset(u);
                stack.push_back(u);
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Removes vertices u having a nonadjacent dominator w with N(u) subseteq
// N(w); u can always copy w's color.
struct ChiCollapse {
    std::vector<int> kept;
    std::vector<std::pair<int, int>> removed; // (vertex, dominator), in order
};

inline ChiCollapse chi_collapse(const Graph& g)
{
    int n = g.num_vertices();
    std::vector<Bitset> adj(n);
    Bitset alive(n);
    for (int v = 0; v < n; ++v) {
        adj[v] = g.neighbors(v);
        alive.set(v);
    }
    int alive_count = n;
    ChiCollapse out;
    bool changed = true;
    while (changed && alive_count > 1) {
        changed = false;
        for (int u = alive.first(); u != -1 && alive_count > 1;
             u = alive.next(u)) {
            Bitset cand(n);
            if (adj[u].none()) {
                cand = alive;
            } else {
                bool first = true;
                adj[u].for_each([&](int x) {
                    if (first) {
                        cand = adj[x];
                        first = false;
                    } else {
                        cand &= adj[x];
                    }
                });
                cand &= alive;
            }
            cand.and_not(adj[u]);
            cand.reset(u);
            int w = cand.first();
            if (w == -1)
                continue;
            out.removed.push_back({u, w});
            alive.reset(u);
            --alive_count;
            adj[u].for_each([&](int x) { adj[x].reset(u); });
            adj[u].clear();
            changed = true;
        }
    }
    alive.for_each([&](int v) { out.kept.push_back(v); });
    return out;
}

inline std::vector<int> greedy_clique(const Graph& g)
{
    int n = g.num_vertices();
    if (n == 0)
        return {};
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    std::vector<int> best;
    int tries = std::min(n, 8);
    for (int t = 0; t < tries; ++t) {
        std::vector<int> clique{order[t]};
        Bitset cand = g.neighbors(order[t]);
        while (true) {
            int pick = -1, pickd = -1;
            cand.for_each([&](int u) {
                int d = g.degree(u);
                if (d > pickd) {
                    pickd = d;
                    pick = u;
                }
            });
            if (pick == -1)
                break;
            clique.push_back(pick);
            cand &= g.neighbors(pick);
        }
        if (clique.size() > best.size())
            best = std::move(clique);
    }
    return best;
}

// One-shot domination test against the original adjacency: u is dominated
// when some nonadjacent w satisfies N(u) subseteq N(w). Deleting a dominated
// vertex, or any edge incident to one, cannot change chi.
inline std::vector<bool> first_round_dominated(const Graph& g)
{
    int n = g.num_vertices();
    std::vector<bool> dom(n, false);
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) == 0) {
            dom[u] = n > 1;
            continue;
        }
        Bitset cand(n);
        bool first = true;
        g.neighbors(u).for_each([&](int x) {
            if (first) {
                cand = g.neighbors(x);
                first = false;
            } else {
                cand &= g.neighbors(x);
            }
        });
        cand.and_not(g.neighbors(u));
        cand.reset(u);
        dom[u] = cand.any();
    }
    return dom;
}

// First-fit coloring in static degree order; cheap upper bound used to
// quick-accept satisfiable decisions.
inline int firstfit_greedy(const Graph& g, std::vector<int>& color)
{
    int n = g.num_vertices();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    color.assign(n, -1);
    int used = 0;
    std::vector<uint64_t> seen_small(n, 0);
    for (int v : order) {
        uint64_t mask = 0;
        bool wide = false;
        g.neighbors(v).for_each([&](int u) {
            if (color[u] >= 0) {
                if (color[u] < 64)
                    mask |= uint64_t{1} << color[u];
                else
                    wide = true;
            }
        });
        int c;
        if (!wide) {
            c = STAB_CTZ64(~mask);
        } else { // fall back to a scan (rare)
            std::vector<bool> taken(used + 1, false);
            g.neighbors(v).for_each([&](int u) {
                if (color[u] >= 0 && color[u] <= used)
                    taken[color[u]] = true;
            });
            c = 0;
            while (taken[c])
                ++c;
        }
        color[v] = c;
        used = std::max(used, c + 1);
    }
    (void)seen_small;
    return used;
}

// Greedy DSATUR coloring, unlimited palette; returns the color count.
inline int dsatur_greedy(const Graph& g, std::vector<int>& color)
{
    int n = g.num_vertices();
    color.assign(n, -1);
    std::vector<Bitset> seen(n, Bitset(n + 1)); // colors used by neighbors
    std::vector<int> sat(n, 0);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1, vsat = -1, vdeg = -1;
        for (int u = 0; u < n; ++u) {
            if (color[u] != -1)
                continue;
            int d = g.degree(u);
            if (sat[u] > vsat || (sat[u] == vsat && d > vdeg)) {
                v = u;
                vsat = sat[u];
                vdeg = d;
            }
        }
        int c = 0;
        while (seen[v].test(c))
            ++c;
        color[v] = c;
        used = std::max(used, c + 1);
        g.neighbors(v).for_each([&](int u) {
            if (color[u] == -1 && !seen[u].test(c)) {
                seen[u].set(c);
                ++sat[u];
            }
        });
    }
    return used;
}

class DsaturSearch {
public:
    // preset: per-vertex forbidden color masks (colors of outside neighbors
    // in a split subproblem); symmetry breaking stays off when present
    DsaturSearch(const Graph& g, int k, BudgetClock& clock,
        std::vector<uint64_t> preset = {})
        : g_(g)
        , k_(k)
        , n_(g.num_vertices())
        , clock_(clock)
        , preset_(!preset.empty())
    {
        color_.assign(n_, -1);
        mask_ = preset.empty() ? std::vector<uint64_t>(n_, 0)
                               : std::move(preset);
        cnt_.assign(size_t(n_) * 64, 0);
        uncolored_ = n_;
    }

    bool run(const std::vector<int>& seed_clique, std::vector<int>* out)
    {
        if (int(seed_clique.size()) > k_)
            return false;
        int used = preset_ ? k_ : 0;
        for (int v : seed_clique)
            assign(v, preset_ ? 0 : used++);
        if (!recurse(used))
            return false;
        if (out)
            *out = color_;
        return true;
    }

private:
    void assign(int v, int c)
    {
        color_[v] = c;
        --uncolored_;
        g_.neighbors(v).for_each([&](int u) {
            if (color_[u] == -1 && cnt_[size_t(u) * 64 + c]++ == 0)
                mask_[u] |= uint64_t{1} << c;
        });
    }

    void unassign(int v, int c)
    {
        color_[v] = -1;
        ++uncolored_;
        g_.neighbors(v).for_each([&](int u) {
            if (color_[u] == -1 && --cnt_[size_t(u) * 64 + c] == 0)
                mask_[u] &= ~(uint64_t{1} << c);
        });
    }

    // Once the uncolored residual falls apart, its components only interact
    // through already-colored vertices, which the masks capture; each part
    // can be finished independently.
    bool try_split()
    {
        Bitset left(n_);
        int uncolored_seen = 0;
        for (int v = 0; v < n_; ++v)
            if (color_[v] == -1) {
                left.set(v);
                ++uncolored_seen;
            }
        std::vector<std::vector<int>> comps;
        while (true) {
            int seed = left.first();
            if (seed == -1)
                break;
            std::vector<int> comp{seed}, stack{seed};
            left.reset(seed);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                Bitset fresh = g_.neighbors(v);
                fresh &= left;
                fresh.for_each([&](int u) {
                    comp.push_back(u);
                    left.reset(u);
                    stack.push_back(u);
                });
            }
            comps.push_back(std::move(comp));
        }
        (void)uncolored_seen;
        if (comps.size() < 2)
            return false;
        std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
        std::vector<std::pair<int, int>> written; // (vertex, color)
        for (const auto& comp : comps) {
            std::vector<int> fwd(n_, -1);
            Graph sub(int(comp.size()));
            std::vector<uint64_t> preset(comp.size(), 0);
            for (size_t i = 0; i < comp.size(); ++i)
                fwd[comp[i]] = int(i);
            for (size_t i = 0; i < comp.size(); ++i) {
                preset[i] = mask_[comp[i]];
                g_.neighbors(comp[i]).for_each([&](int u) {
                    if (fwd[u] > int(i))
                        sub.add_edge(int(i), fwd[u]);
                });
            }
            DsaturSearch child(sub, k_, clock_, std::move(preset));
            std::vector<int> sub_color;
            if (!child.run({}, &sub_color)) {
                for (auto [v, c] : written) {
                    (void)c;
                    color_[v] = -1;
                }
                split_failed_ = true;
                return true; // handled: this branch is infeasible
            }
            for (size_t i = 0; i < comp.size(); ++i) {
                color_[comp[i]] = sub_color[i];
                written.push_back({comp[i], sub_color[i]});
            }
        }
        uncolored_ = 0;
        return true;
    }

    bool recurse(int used)
    {
        clock_.tick();
        if (uncolored_ == 0)
            return true;
        if (uncolored_ >= 16 && n_ - uncolored_ >= 4
            && (++split_gate_ & 15) == 0) {
            split_failed_ = false;
            int before = uncolored_;
            if (try_split()) {
                if (!split_failed_)
                    return true;
                uncolored_ = before;
                return false;
            }
        }
        int v = -1, vsat = -1, vdeg = -1;
        for (int u = 0; u < n_; ++u) {
            if (color_[u] != -1)
                continue;
            int sat = STAB_POPCOUNT64(mask_[u]);
            int d = g_.degree(u);
            if (sat > vsat || (sat == vsat && d > vdeg)) {
                v = u;
                vsat = sat;
                vdeg = d;
            }
        }
        int limit = std::min(k_, used + 1);
        uint64_t avail = ~mask_[v]
            & (limit >= 64 ? ~uint64_t{0} : (uint64_t{1} << limit) - 1);
        while (avail) {
            int c = STAB_CTZ64(avail);
            avail &= avail - 1;
            assign(v, c);
            if (recurse(std::max(used, c + 1)))
                return true;
            unassign(v, c);
        }
        return false;
    }

    const Graph& g_;
    int k_, n_;
    BudgetClock& clock_;
    bool preset_ = false;
    std::vector<int> color_;
    std::vector<uint64_t> mask_;
    std::vector<uint8_t> cnt_;
    int uncolored_;
    long split_gate_ = 0;
    bool split_failed_ = false;
};

// Result of the k-specific forced-equal contraction.
struct KContraction {
    bool refuted = false;
    bool changed = false;
    Graph graph;          // contracted graph (valid when changed && !refuted)
    std::vector<int> map; // original id -> contracted id
};

inline std::optional<std::vector<int>> bipartition(const Graph& g)
{
    int n = g.num_vertices();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1)
            continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            bool bad = false;
            g.neighbors(v).for_each([&](int u) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    bad = true;
                }
            });
            if (bad)
                return std::nullopt;
        }
    }
    return color;
}

class ChiSolver {
public:
    explicit ChiSolver(BudgetClock& clock) : clock_(clock) {}

    int solve(const Graph& g, std::vector<int>* coloring)
    {
        if (g.num_vertices() == 0) {
            if (coloring)
                coloring->clear();
            return 0;
        }
        int chi = 0;
        if (coloring)
            coloring->assign(g.num_vertices(), -1);
        for (const auto& comp : graph_components(g)) {
            auto sub = induced_subgraph(g, comp);
            std::vector<int> sub_color;
            int c = solve_connected(sub.graph, coloring ? &sub_color : nullptr);
            chi = std::max(chi, c);
            if (coloring)
                for (size_t i = 0; i < comp.size(); ++i)
                    (*coloring)[sub.back[i]] = sub_color[i];
        }
        return chi;
    }

    bool colorable(const Graph& g, int k)
    {
        return colorable_witness(g, k).has_value();
    }

    // proper k-coloring (palette {0..k-1}) or nullopt
    std::optional<std::vector<int>> colorable_witness(const Graph& g, int k)
    {
        if (k < 0)
            return std::nullopt;
        if (g.num_vertices() == 0)
            return std::vector<int>{};
        std::vector<int> coloring(g.num_vertices(), -1);
        for (const auto& comp : graph_components(g)) {
            auto sub = induced_subgraph(g, comp);
            auto col = connected_colorable(sub.graph, k);
            if (!col)
                return std::nullopt;
            for (size_t i = 0; i < comp.size(); ++i)
                coloring[sub.back[i]] = (*col)[i];
        }
        return coloring;
    }

private:
    int solve_connected(const Graph& g, std::vector<int>* coloring)
    {
        clock_.tick();
        if (g.num_vertices() == 1) {
            if (coloring)
                coloring->assign(1, 0);
            return 1;
        }
        ChiCollapse col = chi_collapse(g);
        if (int(col.kept.size()) < g.num_vertices()) {
            auto sub = induced_subgraph(g, col.kept);
            std::vector<int> sub_color;
            int chi = solve(sub.graph, coloring ? &sub_color : nullptr);
            if (coloring) {
                coloring->assign(g.num_vertices(), -1);
                for (size_t i = 0; i < col.kept.size(); ++i)
                    (*coloring)[col.kept[i]] = sub_color[i];
                for (auto it = col.removed.rbegin(); it != col.removed.rend();
                     ++it)
                    (*coloring)[it->first] = (*coloring)[it->second];
            }
            return chi;
        }

        auto parts = cocomponents(g);
        if (parts.size() > 1) {
            int chi = 0;
            if (coloring)
                coloring->assign(g.num_vertices(), -1);
            for (const auto& part : parts) {
                auto sub = induced_subgraph(g, part);
                std::vector<int> sub_color;
                int c = solve(sub.graph, coloring ? &sub_color : nullptr);
                if (coloring)
                    for (size_t i = 0; i < part.size(); ++i)
                        (*coloring)[sub.back[i]] = sub_color[i] + chi;
                chi += c;
            }
            return chi;
        }

        return solve_atom(g, coloring);
    }

    int solve_atom(const Graph& g, std::vector<int>* coloring)
    {
        auto clique = greedy_clique(g);
        std::vector<int> greedy;
        int ub = dsatur_greedy(g, greedy);
        int lb = int(clique.size());
        if (lb == ub) {
            if (coloring)
                *coloring = greedy;
            return ub;
        }
        for (int k = lb; k < ub; ++k) {
            if (auto col = atom_decide(g, k, clique)) {
                if (coloring)
                    *coloring = *col;
                return k;
            }
        }
        if (coloring)
            *coloring = greedy;
        return ub;
    }

    std::optional<std::vector<int>> connected_colorable(const Graph& g, int k)
    {
        clock_.tick();
        int n = g.num_vertices();
        if (n <= k) {
            std::vector<int> col(n);
            for (int i = 0; i < n; ++i)
                col[i] = i;
            return col;
        }
        ChiCollapse col = chi_collapse(g);
        if (int(col.kept.size()) < n) {
            auto sub = induced_subgraph(g, col.kept);
            auto sub_col = colorable_witness(sub.graph, k);
            if (!sub_col)
                return std::nullopt;
            std::vector<int> coloring(n, -1);
            for (size_t i = 0; i < col.kept.size(); ++i)
                coloring[col.kept[i]] = (*sub_col)[i];
            for (auto it = col.removed.rbegin(); it != col.removed.rend();
                 ++it)
                coloring[it->first] = coloring[it->second];
            return coloring;
        }
        auto parts = cocomponents(g);
        if (parts.size() > 1) {
            int used = 0;
            std::vector<int> coloring(n, -1);
            for (const auto& part : parts) {
                auto sub = induced_subgraph(g, part);
                std::vector<int> sub_color;
                int c = solve(sub.graph, &sub_color);
                if (used + c > k)
                    return std::nullopt;
                for (size_t i = 0; i < part.size(); ++i)
                    coloring[sub.back[i]] = sub_color[i] + used;
                used += c;
            }
            return coloring;
        }
        auto clique = greedy_clique(g);
        if (int(clique.size()) > k)
            return std::nullopt;
        return atom_decide(g, k, clique);
    }

    std::optional<std::vector<int>> atom_decide(const Graph& g, int k,
        const std::vector<int>& clique)
    {
        clock_.tick();
        int n = g.num_vertices();
        if (k >= n) {
            std::vector<int> col(n);
            for (int i = 0; i < n; ++i)
                col[i] = i;
            return col;
        }
        if (k == 0)
            return n == 0 ? std::optional<std::vector<int>>(std::vector<int>{})
                          : std::nullopt;
        if (k == 1) {
            if (g.num_edges() > 0)
                return std::nullopt;
            return std::vector<int>(n, 0);
        }
        if (k == 2)
            return bipartition(g);
        int maxdeg = 0;
        for (int v = 0; v < n; ++v)
            maxdeg = std::max(maxdeg, g.degree(v));
        if (k > maxdeg) { // greedy uses at most maxdeg+1 colors
            std::vector<int> col;
            dsatur_greedy(g, col);
            return col;
        }
        {
            std::vector<int> greedy;
            if (firstfit_greedy(g, greedy) <= k)
                return greedy;
        }
        // forced-equal contraction specific to this k
        KContraction con = contract_for_k(g, k);
        if (con.refuted)
            return std::nullopt;
        if (con.changed) {
            auto sub = colorable_witness(con.graph, k);
            if (!sub)
                return std::nullopt;
            std::vector<int> col(n);
            for (int v = 0; v < n; ++v)
                col[v] = (*sub)[con.map[v]];
            return col;
        }
        if (k >= 64)
            throw std::domain_error("chromatic search limited to 63 colors");
        DsaturSearch search(g, k, clock_);
        std::vector<int> col;
        if (search.run(clique, &col))
            return col;
        return std::nullopt;
    }

    // Two nonadjacent vertices whose common neighborhood needs at least k-1
    // colors receive the same color in every proper k-coloring, so the pair
    // can be contracted for a k-decision; a common neighborhood needing k
    // colors refutes k-colorability outright. A greedy clique certifies the
    // bound cheaply; small common neighborhoods get an exact recursive chi.
    KContraction contract_for_k(const Graph& g, int k)
    {
        int n = g.num_vertices();
        KContraction out;
        if (k < 2 || n == 0)
            return out;
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i)
            parent[i] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        bool merged_any = false;
        // candidate pairs via two-hop common-neighbor counting
        std::vector<int> hits(n, 0), touched;
        for (int x = 0; x < n && !out.refuted; ++x) {
            if (g.degree(x) < k - 1)
                continue;
            touched.clear();
            g.neighbors(x).for_each([&](int u) {
                g.neighbors(u).for_each([&](int w) {
                    if (w > x && !g.has_edge(x, w)) {
                        if (hits[w]++ == 0)
                            touched.push_back(w);
                    }
                });
            });
            for (int y : touched) {
                int csize = hits[y];
                hits[y] = 0;
                if (csize < k - 1 || g.degree(y) < k - 1 || out.refuted)
                    continue;
                Bitset common = g.neighbors(x);
                common &= g.neighbors(y);
                clock_.tick();
                // cheap certificate: greedy clique inside the common part
                Bitset cand = common;
                int size = 0;
                while (size < k - 1) {
                    int pick = -1, pickd = -1;
                    cand.for_each([&](int u) {
                        int d = g.neighbors(u).intersection_count(common);
                        if (d > pickd) {
                            pickd = d;
                            pick = u;
                        }
                    });
                    if (pick == -1)
                        break;
                    ++size;
                    Bitset next = cand;
                    next &= g.neighbors(pick);
                    cand = std::move(next);
                }
                int needed = size;
                if (needed < k - 1 && csize <= 48) {
                    std::vector<int> verts;
                    common.for_each([&](int u) { verts.push_back(u); });
                    auto sub = induced_subgraph(g, verts);
                    // a greedy upper bound below k-1 rules the pair out
                    // without an exact solve
                    std::vector<int> tmp;
                    if (dsatur_greedy(sub.graph, tmp) >= k - 1)
                        needed = solve(sub.graph, nullptr);
                }
                if (needed >= k) {
                    out.refuted = true;
                    continue;
                }
                if (needed >= k - 1) {
                    int rx = find(x), ry = find(y);
                    if (rx != ry) {
                        parent[std::max(rx, ry)] = std::min(rx, ry);
                        merged_any = true;
                    }
                }
            }
        }
        if (out.refuted || !merged_any)
            return out;
        out.changed = true;
        std::vector<int> rep(n), compact(n, -1);
        int m = 0;
        for (int v = 0; v < n; ++v) {
            rep[v] = find(v);
            if (rep[v] == v)
                compact[v] = m++;
        }
        out.map.resize(n);
        for (int v = 0; v < n; ++v)
            out.map[v] = compact[rep[v]];
        Graph h(m);
        for (auto [u, v] : g.edges()) {
            int a = out.map[u], b = out.map[v];
            if (a == b) { // forced-equal endpoints of an edge
                out.refuted = true;
                return out;
            }
            if (!h.has_edge(a, b))
                h.add_edge(a, b);
        }
        out.graph = std::move(h);
        return out;
    }

    BudgetClock& clock_;
};

} // namespace detail

// Exact solvers for the four graph numbers. Stateless apart from the
// budget; every public call accounts nodes and time against one budget.
class Solver {
public:
    explicit Solver(Budget budget = {}) : budget_(budget) {}

    const Budget& budget() const { return budget_; }

    SolveResult chromatic_number(const Graph& g, bool witness = true) const
    {
        BudgetClock clock(budget_, "chi(" + describe(g) + ")");
        detail::ChiSolver solver(clock);
        SolveResult r;
        std::vector<int> coloring;
        r.value = solver.solve(g, witness ? &coloring : nullptr);
        if (witness)
            r.coloring = std::move(coloring);
        r.stats = clock.stats();
        return r;
    }

    bool is_k_colorable(const Graph& g, int k) const
    {
        BudgetClock clock(
            budget_, "chi(" + describe(g) + ") <= " + std::to_string(k));
        detail::ChiSolver solver(clock);
        return solver.colorable(g, k);
    }

    SolveResult vertex_cover_number(const Graph& g, bool witness = true) const
    {
        BudgetClock clock(budget_, "beta(" + describe(g) + ")");
        detail::VcState st(g);
        int ub = detail::vc_greedy_cover(st, nullptr);
        detail::VcState work = st;
        auto exact = detail::vc_search(work, ub, clock);
        SolveResult r;
        if (exact) {
            r.value = int(exact->size());
            if (witness)
                r.vertex_set = std::move(*exact);
        } else {
            r.value = ub; // the greedy cover is optimal
            if (witness) {
                std::vector<int> cover;
                detail::vc_greedy_cover(st, &cover);
                r.vertex_set = std::move(cover);
            }
        }
        if (r.vertex_set)
            std::sort(r.vertex_set->begin(), r.vertex_set->end());
        r.stats = clock.stats();
        return r;
    }

    // beta(G) <= k ?
    bool has_vertex_cover(const Graph& g, int k) const
    {
        if (k >= g.num_vertices())
            return true;
        if (k < 0)
            return false;
        BudgetClock clock(
            budget_, "beta(" + describe(g) + ") <= " + std::to_string(k));
        detail::VcState st(g);
        return detail::vc_search(st, k + 1, clock).has_value();
    }

    SolveResult independence_number(const Graph& g, bool witness = true) const
    {
        SolveResult cover = vertex_cover_number(g, witness);
        SolveResult r;
        r.value = g.num_vertices() - cover.value;
        r.stats = cover.stats;
        if (witness) {
            std::vector<bool> in(g.num_vertices(), false);
            for (int v : *cover.vertex_set)
                in[v] = true;
            std::vector<int> set;
            for (int v = 0; v < g.num_vertices(); ++v)
                if (!in[v])
                    set.push_back(v);
            r.vertex_set = std::move(set);
        }
        return r;
    }

    SolveResult clique_number(const Graph& g, bool witness = true) const
    {
        return independence_number(complement(g), witness);
    }

    SolveResult graph_number(const Graph& g, GraphNumber xi,
        bool witness = true) const
    {
        switch (xi) {
        case GraphNumber::Alpha:
            return independence_number(g, witness);
        case GraphNumber::Beta:
            return vertex_cover_number(g, witness);
        case GraphNumber::Chi:
            return chromatic_number(g, witness);
        default:
            return clique_number(g, witness);
        }
    }

    int value(const Graph& g, GraphNumber xi) const
    {
        return graph_number(g, xi, false).value;
    }

private:
    static std::string describe(const Graph& g)
    {
        return std::to_string(g.num_vertices()) + "v/"
            + std::to_string(g.num_edges()) + "e";
    }

    Budget budget_;
};

} // namespace stab
