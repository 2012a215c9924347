#pragma once

#include "stab/cnf.hpp"
#include "stab/graph.hpp"
#include "stab/graph_number.hpp"

#include <stdexcept>
#include <vector>

// Brute-force ground truth by plain exhaustive enumeration. Deliberately
// shares no algorithmic machinery with the branch-and-bound solvers it
// cross-checks.

namespace stab::oracle {

constexpr int kMaxSubsetVertices = 10; // alpha / beta / omega
constexpr int kMaxColoringVertices = 8; // chi

inline void check_size(const Graph& g, int bound, const char* what)
{
    if (g.num_vertices() > bound)
        throw std::domain_error(std::string("oracle ") + what
            + ": size bound exceeded (" + std::to_string(g.num_vertices())
            + " > " + std::to_string(bound) + ")");
}

inline bool subset_is_cover(const Graph& g, unsigned mask)
{
    for (auto [u, v] : g.edges())
        if (!((mask >> u) & 1) && !((mask >> v) & 1))
            return false;
    return true;
}

inline bool subset_is_independent(const Graph& g, unsigned mask)
{
    for (auto [u, v] : g.edges())
        if (((mask >> u) & 1) && ((mask >> v) & 1))
            return false;
    return true;
}

inline bool subset_is_clique(const Graph& g, unsigned mask)
{
    int n = g.num_vertices();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (((mask >> u) & 1) && ((mask >> v) & 1) && !g.has_edge(u, v))
                return false;
    return true;
}

inline int vertex_cover_number(const Graph& g)
{
    check_size(g, kMaxSubsetVertices, "beta");
    int n = g.num_vertices(), best = n;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (subset_is_cover(g, mask))
            best = std::min(best, STAB_POPCOUNT64(uint64_t(mask)));
    return best;
}

inline int independence_number(const Graph& g)
{
    check_size(g, kMaxSubsetVertices, "alpha");
    int n = g.num_vertices(), best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (subset_is_independent(g, mask))
            best = std::max(best, STAB_POPCOUNT64(uint64_t(mask)));
    return best;
}

inline int clique_number(const Graph& g)
{
    check_size(g, kMaxSubsetVertices, "omega");
    int n = g.num_vertices(), best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (subset_is_clique(g, mask))
            best = std::max(best, STAB_POPCOUNT64(uint64_t(mask)));
    return best;
}

namespace detail {

inline bool extend_coloring(const Graph& g, std::vector<int>& color, int v,
    int k)
{
    if (v == g.num_vertices())
        return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v) && color[u] == c) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        color[v] = c;
        if (extend_coloring(g, color, v + 1, k))
            return true;
    }
    color[v] = -1;
    return false;
}

} // namespace detail

inline bool is_k_colorable(const Graph& g, int k)
{
    check_size(g, kMaxColoringVertices, "chi");
    if (g.num_vertices() == 0)
        return true;
    if (k <= 0)
        return false;
    std::vector<int> color(g.num_vertices(), -1);
    return detail::extend_coloring(g, color, 0, k);
}

inline int chromatic_number(const Graph& g)
{
    check_size(g, kMaxColoringVertices, "chi");
    for (int k = 0;; ++k)
        if (is_k_colorable(g, k))
            return k;
}

inline int graph_number(const Graph& g, GraphNumber xi)
{
    switch (xi) {
    case GraphNumber::Alpha:
        return independence_number(g);
    case GraphNumber::Beta:
        return vertex_cover_number(g);
    case GraphNumber::Chi:
        return chromatic_number(g);
    default:
        return clique_number(g);
    }
}

// All proper colorings with palette {0..chi-1}; by minimality of chi each
// uses every color. Used to check the unique-color characterization of
// critical vertices.
inline std::vector<std::vector<int>> all_optimal_colorings(const Graph& g)
{
    check_size(g, 6, "optimal coloring enumeration");
    int n = g.num_vertices();
    int chi = chromatic_number(g);
    std::vector<std::vector<int>> out;
    std::vector<int> color(n, 0);
    if (n == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (color[u] == color[v]) {
                proper = false;
                break;
            }
        if (proper)
            out.push_back(color);
        int i = 0;
        while (i < n && ++color[i] == chi)
            color[i++] = 0;
        if (i == n)
            break;
    }
    return out;
}

inline bool satisfiable(const CnfFormula& f)
{
    if (f.num_vars() > 24)
        throw std::domain_error("oracle satisfiable: too many variables");
    for (uint64_t mask = 0; mask < (uint64_t{1} << f.num_vars()); ++mask) {
        bool all = true;
        for (const auto& c : f.clauses()) {
            bool sat = false;
            for (int lit : c) {
                bool val = (mask >> (std::abs(lit) - 1)) & 1;
                if ((lit > 0) == val) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all)
            return true;
    }
    return f.num_clauses() == 0 ? true : false;
}

inline bool formula_stable(const CnfFormula& f)
{
    if (satisfiable(f))
        return true;
    for (int i = 0; i < f.num_clauses(); ++i)
        if (satisfiable(f.without_clause(i)))
            return false;
    return true;
}

} // namespace stab::oracle
