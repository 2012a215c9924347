#include "stab/enumerate.hpp"
#include "stab/oracle.hpp"
#include "stab/reductions.hpp"
#include "stab/stability.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace stab;

static const Solver solver;

static CnfFormula eight_block() { return CnfFormula(3, full_block(1, 2, 3)); }

TEST_CASE("clause-tracking graph: chi tracks satisfiability")
{
    CnfFormula sat(3, {{1, 2, 3}});
    CaiMeyerGraph cm = cai_meyer_graph(sat);
    REQUIRE(cm.graph.num_vertices() == 2 + 2 * 3 + 9 * 1);
    REQUIRE(solver.value(cm.graph, GraphNumber::Chi) == 3);

    CaiMeyerGraph blk = cai_meyer_graph(eight_block());
    REQUIRE(solver.value(blk.graph, GraphNumber::Chi) == 4);
    // the block is minimally unsatisfiable: every t_{i1} deletion drops chi
    for (int t : blk.t1)
        REQUIRE(solver.value(delete_vertex(blk.graph, t), GraphNumber::Chi)
            == 3);

    REQUIRE_THROWS_AS(cai_meyer_graph(CnfFormula(2, {{1, 2}})),
        std::domain_error);
}

TEST_CASE("role labels on the clause-tracking graph")
{
    CnfFormula sat(3, {{1, 2, 3}});
    CaiMeyerGraph cm = cai_meyer_graph(sat);
    REQUIRE(cm.graph.vertex_by_label("vc") == cm.vc);
    REQUIRE(cm.graph.vertex_by_label("vs") == cm.vs);
    REQUIRE(cm.graph.vertex_by_label("t1_1") == cm.t1[0]);
    REQUIRE(cm.graph.has_edge(cm.vc, cm.vs));
}

TEST_CASE("replication pipeline for vertex-stability")
{
    CnfFormula sat(3, {{1, 2, 3}});
    Graph r = stable3cnf_to_vertex_stability(sat);
    CaiMeyerGraph cm = cai_meyer_graph(sat);
    int nv = cm.graph.num_vertices();
    REQUIRE(r.num_vertices() == 2 * nv - 1); // one clause
    REQUIRE(is_vertex_stable(r, GraphNumber::Chi, solver));

    Graph bad = stable3cnf_to_vertex_stability(eight_block());
    REQUIRE_FALSE(is_vertex_stable(bad, GraphNumber::Chi, solver));
}

TEST_CASE("self-join reduction")
{
    REQUIRE_FALSE(is_stable(vstab_to_stab(path(3)), GraphNumber::Chi, solver));
    Graph k3k3 = disjoint_union(complete(3), complete(3));
    REQUIRE(is_stable(vstab_to_stab(k3k3), GraphNumber::Chi, solver));
    REQUIRE(vstab_to_stab(empty_graph(0)) == empty_graph(0));
}

TEST_CASE("self-union reduction")
{
    Graph c5u = union_double(cycle(5));
    REQUIRE(solver.value(c5u, GraphNumber::Chi) == 3);
    REQUIRE(is_stable(c5u, GraphNumber::Chi, solver));
    REQUIRE(is_two_way_stable(c5u, GraphNumber::Chi, solver));

    Graph p3u = union_double(path(3));
    REQUIRE(is_stable(p3u, GraphNumber::Chi, solver));
    REQUIRE_FALSE(is_two_way_stable(p3u, GraphNumber::Chi, solver));

    REQUIRE(union_double(empty_graph(0)) == empty_graph(0));
}

TEST_CASE("two-way reduction form decides edgeless inputs directly")
{
    // K1 is vacuously unfrozen, yet K1 u K1 = I2 has a frozen nonedge;
    // the reduction form maps edgeless inputs to canonical instances
    REQUIRE(is_unfrozen(complete(1), GraphNumber::Chi, solver));
    REQUIRE_FALSE(is_two_way_stable(
        union_double(complete(1)), GraphNumber::Chi, solver));
    REQUIRE(is_two_way_stable(
        unfrozenness_to_two_way(complete(1)), GraphNumber::Chi, solver));
    REQUIRE_FALSE(is_two_way_stable(
        unfrozenness_to_two_way(empty_graph(3)), GraphNumber::Chi, solver));
}

TEST_CASE("beta-stability comparison instance")
{
    // gadget-side size identities (the stabilized side carries H)
    Graph k2 = complete(2);
    Graph hp = beta_stabilize_edges(k2, k2.edges()).graph;
    REQUIRE(hp.num_vertices() == 2 + 4);
    REQUIRE(solver.value(hp, GraphNumber::Beta)
        == solver.value(k2, GraphNumber::Beta) + 2);

    Graph s1 = compare_vc_to_beta_stability(k2, empty_graph(2)).graph;
    REQUIRE(is_stable(s1, GraphNumber::Beta, solver)); // beta 1 > 0

    Graph s2 = compare_vc_to_beta_stability(empty_graph(2), k2).graph;
    REQUIRE_FALSE(is_stable(s2, GraphNumber::Beta, solver)); // 0 <= 1

    Graph s3 = compare_vc_to_beta_stability(k2, k2).graph;
    REQUIRE_FALSE(is_stable(s3, GraphNumber::Beta, solver)); // tie
}

TEST_CASE("beta-unfrozenness comparison instance")
{
    Graph j = compare_vc_to_beta_unfrozenness(complete(2), complete(1)).graph;
    REQUIRE(j.num_vertices() == 12);
    REQUIRE(solver.value(j, GraphNumber::Beta) == 9);
    REQUIRE_FALSE(is_unfrozen(j, GraphNumber::Beta, solver)); // 1 > 0

    Graph j2 = compare_vc_to_beta_unfrozenness(empty_graph(2), complete(2))
                   .graph;
    REQUIRE(is_unfrozen(j2, GraphNumber::Beta, solver)); // 0 <= 1

    // H' = (I1 + K3) u I2 = K4 u I2 has beta 3 = beta(H) + g + h
    Graph hp = disjoint_union(
        join(complete(1), complete(3)), empty_graph(2));
    REQUIRE(solver.value(hp, GraphNumber::Beta) == 3);
}

TEST_CASE("beta two-way pipeline")
{
    auto i3 = beta_unfrozen_to_beta_twoway(empty_graph(3));
    REQUIRE(i3.graph == empty_graph(3));
    // I3 is vacuously beta-stable but its nonedges freeze, so it is not
    // beta-unfrozen and not two-way stable; the biconditional holds with
    // both sides false
    REQUIRE_FALSE(is_unfrozen(empty_graph(3), GraphNumber::Beta, solver));
    REQUIRE_FALSE(is_two_way_stable(i3.graph, GraphNumber::Beta, solver));

    auto i2 = beta_unfrozen_to_beta_twoway(empty_graph(2));
    REQUIRE_FALSE(is_two_way_stable(i2.graph, GraphNumber::Beta, solver));

    auto p3 = beta_unfrozen_to_beta_twoway(path(3));
    REQUIRE_FALSE(is_two_way_stable(p3.graph, GraphNumber::Beta, solver));
}

TEST_CASE("three-coloring reduction for comparisons")
{
    CnfFormula sat(3, {{1, 2, 3}});
    REQUIRE(solver.value(gjs_3col(sat), GraphNumber::Chi) == 3);
    REQUIRE(solver.value(gjs_3col(eight_block()), GraphNumber::Chi) == 4);
    REQUIRE_FALSE(solver.is_k_colorable(gjs_3col(sat), 2));
    // satisfiability tracks 3-colorability on random instances
    for (int t = 0; t < 25; ++t) {
        CnfFormula f = random_3cnf(3, 1 + t % 8, 700 + t);
        REQUIRE(solver.is_k_colorable(gjs_3col(f), 3) == is_satisfiable(f));
    }
}

TEST_CASE("colorability comparison instance")
{
    CnfFormula sat(3, {{1, 2, 3}});
    CnfFormula unsat = eight_block();
    auto [g, h] = compare_colorability_instance({sat}, {unsat});
    REQUIRE(solver.value(g, GraphNumber::Chi) == 3);
    REQUIRE(solver.value(h, GraphNumber::Chi) == 4);
    // more satisfiable members means smaller chi
    REQUIRE((solver.value(g, GraphNumber::Chi)
                <= solver.value(h, GraphNumber::Chi))
        == true);

    auto [g2, h2] = compare_colorability_instance({unsat}, {unsat});
    REQUIRE(solver.value(g2, GraphNumber::Chi)
        == solver.value(h2, GraphNumber::Chi));

    REQUIRE_THROWS_AS(compare_colorability_instance({sat}, {}),
        std::domain_error);
}

TEST_CASE("conditional unfrozenness machinery with the exact unfreezer")
{
    Unfreezer u = exact_clique_unfreezer(solver);
    Graph out1 = conditional_unfrozenness_reduction(complete(3), cycle(5), u);
    REQUIRE(is_unfrozen(out1, GraphNumber::Chi, solver)); // 3 <= 3
    Graph out2 = conditional_unfrozenness_reduction(complete(4), path(3), u);
    REQUIRE_FALSE(is_unfrozen(out2, GraphNumber::Chi, solver)); // 4 > 2

    // the G side always carries the frozen pair inherited from I_2
    Graph gp = join(complete(3), empty_graph(2));
    auto pair_status = nonedge_status(gp, {3, 4}, GraphNumber::Chi, solver);
    REQUIRE(pair_status.delta == 1);
}

TEST_CASE("unfreezer contract holds for the test-only unfreezer")
{
    Unfreezer u = exact_clique_unfreezer(solver);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(1 + t % 5, 0.4, 1200 + t);
        Graph fg = u.transform(g);
        REQUIRE(is_unfrozen(fg, GraphNumber::Chi, solver));
        REQUIRE(solver.value(fg, GraphNumber::Chi)
            == solver.value(g, GraphNumber::Chi) + u.shift(g));
    }
}
