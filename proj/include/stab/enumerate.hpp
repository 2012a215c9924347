#pragma once

#include "stab/graph.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace stab {

constexpr int kMaxExhaustiveVertices = 7;

// All 2^(n choose 2) labeled graphs on n vertices, in edge-mask order.
template <typename Fn> void for_each_graph(int n, Fn fn)
{
    if (n > kMaxExhaustiveVertices)
        throw std::domain_error(
            "for_each_graph: n too large for exhaustive enumeration");
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.push_back({u, v});
    uint64_t total = uint64_t{1} << slots.size();
    for (uint64_t mask = 0; mask < total; ++mask) {
        Graph g(n);
        for (size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1)
                g.add_edge(slots[i].first, slots[i].second);
        fn(g);
    }
}

inline std::vector<Graph> enumerate_graphs(int n)
{
    std::vector<Graph> out;
    for_each_graph(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

// Erdos-Renyi G(n, p), deterministic per seed.
inline Graph random_graph(int n, double p, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double x = double(rng() >> 11) * 0x1.0p-53;
            if (x < p)
                g.add_edge(u, v);
        }
    return g;
}

} // namespace stab
