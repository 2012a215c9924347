#include "stab/enumerate.hpp"
#include "stab/oracle.hpp"
#include "stab/solver.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace stab;

static const Solver solver;

TEST_CASE("chromatic number on the named examples")
{
    REQUIRE(solver.chromatic_number(cycle(5)).value == 3);
    for (int k = 0; k <= 6; ++k)
        REQUIRE(solver.chromatic_number(complete(k)).value == k);
    REQUIRE(solver.chromatic_number(empty_graph(0)).value == 0);
}

TEST_CASE("vertex cover number on the named examples")
{
    REQUIRE(solver.vertex_cover_number(path(3)).value == 1);
    REQUIRE(solver.vertex_cover_number(complete(4)).value == 3);
    for (int n = 1; n <= 8; ++n) // beta(K_n) = n-1
        REQUIRE(solver.vertex_cover_number(complete(n)).value == n - 1);
    REQUIRE(solver.vertex_cover_number(empty_graph(6)).value == 0);
}

TEST_CASE("clique and independence numbers")
{
    REQUIRE(solver.clique_number(cycle(5)).value == 2);
    REQUIRE(solver.independence_number(path(3)).value == 2);
    REQUIRE(solver.independence_number(empty_graph(0)).value == 0);
    // the two defining identities
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(7, 0.2 + 0.1 * (t % 6), 900 + t);
        int n = g.num_vertices();
        REQUIRE(solver.independence_number(g).value
            == n - solver.vertex_cover_number(g).value);
        REQUIRE(solver.clique_number(g).value
            == solver.independence_number(complement(g)).value);
    }
}

TEST_CASE("graph_number dispatch")
{
    Graph c5 = cycle(5);
    REQUIRE(solver.graph_number(c5, GraphNumber::Chi).value == 3);
    REQUIRE(solver.graph_number(c5, GraphNumber::Beta).value == 3);
    REQUIRE(solver.graph_number(c5, GraphNumber::Alpha).value == 2);
    REQUIRE(solver.graph_number(c5, GraphNumber::Omega).value == 2);
    for (GraphNumber xi : all_graph_numbers)
        REQUIRE(solver.graph_number(empty_graph(0), xi).value == 0);
}

TEST_CASE("k-colorability decisions")
{
    REQUIRE_FALSE(solver.is_k_colorable(cycle(5), 2));
    REQUIRE(solver.is_k_colorable(cycle(5), 3));
    REQUIRE(solver.is_k_colorable(empty_graph(0), 0));
    REQUIRE_FALSE(solver.is_k_colorable(complete(1), 0));
}

TEST_CASE("solvers agree with the brute-force oracle exhaustively")
{
    for (int n = 0; n <= 5; ++n)
        for_each_graph(n, [&](const Graph& g) {
            for (GraphNumber xi : all_graph_numbers)
                REQUIRE(solver.value(g, xi) == oracle::graph_number(g, xi));
        });
}

TEST_CASE("witnesses re-verify for every solve")
{
    for (int t = 0; t < 120; ++t) {
        Graph g = random_graph(1 + t % 9, 0.15 + 0.1 * (t % 7), 3000 + t);
        auto chi = solver.chromatic_number(g);
        REQUIRE(valid_coloring(g, *chi.coloring, chi.value));
        auto beta = solver.vertex_cover_number(g);
        REQUIRE(valid_cover(g, *beta.vertex_set));
        REQUIRE(int(beta.vertex_set->size()) == beta.value);
        auto alpha = solver.independence_number(g);
        REQUIRE(valid_independent_set(g, *alpha.vertex_set));
        REQUIRE(int(alpha.vertex_set->size()) == alpha.value);
        auto omega = solver.clique_number(g);
        // clique witness lives in the complement's id space == g's
        REQUIRE(valid_clique(g, *omega.vertex_set));
        REQUIRE(int(omega.vertex_set->size()) == omega.value);
    }
}

TEST_CASE("deletion monotonicity for chi on all graphs up to 6 vertices")
{
    for (int n = 1; n <= 6; ++n)
        for_each_graph(n, [&](const Graph& g) {
            int chi = solver.value(g, GraphNumber::Chi);
            for (auto [u, v] : g.edges()) {
                int d = solver.value(delete_edge(g, u, v), GraphNumber::Chi)
                    - chi;
                REQUIRE((d == 0 || d == -1));
            }
            for (int v = 0; v < n; ++v) {
                int d = solver.value(delete_vertex(g, v), GraphNumber::Chi)
                    - chi;
                REQUIRE((d == 0 || d == -1));
            }
        });
}

TEST_CASE("identical inputs give identical witnesses")
{
    Graph g = random_graph(9, 0.4, 4242);
    auto a = solver.chromatic_number(g);
    auto b = solver.chromatic_number(g);
    REQUIRE(*a.coloring == *b.coloring);
    auto c = solver.vertex_cover_number(g);
    auto d = solver.vertex_cover_number(g);
    REQUIRE(*c.vertex_set == *d.vertex_set);
}

TEST_CASE("exhausting the budget raises, never a wrong answer")
{
    Budget tiny;
    tiny.max_nodes = 0;
    Solver strapped(tiny);
    Graph g = random_graph(12, 0.5, 99);
    REQUIRE_THROWS_AS(
        strapped.chromatic_number(g), BudgetExceeded);
    try {
        strapped.vertex_cover_number(g);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        REQUIRE(e.stats().nodes >= 1);
        REQUIRE(!e.query().empty());
    }
}

TEST_CASE("solver handles a comparison-pipeline-sized cover instance")
{
    // sparse gadget-heavy shape, about 160 vertices
    Graph g = random_graph(160, 0.02, 8);
    auto r = solver.vertex_cover_number(g);
    REQUIRE(valid_cover(g, *r.vertex_set));
    REQUIRE(int(r.vertex_set->size()) == r.value);
}
