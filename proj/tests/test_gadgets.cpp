#include "stab/gadgets.hpp"
#include "stab/oracle.hpp"
#include "stab/stability.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace stab;

static const Solver solver;

TEST_CASE("beta gadget on K2")
{
    auto r = beta_stabilize_edge(complete(2), {0, 1});
    REQUIRE(r.graph.num_vertices() == 6);
    REQUIRE(r.graph.num_edges() == 8);
    REQUIRE(r.value_shift == 2);
    REQUIRE(solver.value(r.graph, GraphNumber::Beta) == 3);
    for (auto e : r.graph.edges())
        REQUIRE(edge_status(r.graph, e, GraphNumber::Beta, solver)
                    .unchanged());
    REQUIRE_THROWS_AS(
        beta_stabilize_edge(empty_graph(2), {0, 1}), std::domain_error);
}

TEST_CASE("beta gadget keeps other K3 edges critical")
{
    auto r = beta_stabilize_edge(complete(3), {0, 1});
    REQUIRE(r.graph.num_vertices() == 7);
    REQUIRE(solver.value(r.graph, GraphNumber::Beta) == 4);
    REQUIRE_FALSE(edge_status(r.graph, {0, 2}, GraphNumber::Beta, solver)
                      .unchanged());
    REQUIRE_FALSE(edge_status(r.graph, {1, 2}, GraphNumber::Beta, solver)
                      .unchanged());
}

TEST_CASE("iterating the beta gadget over all K3 edges")
{
    auto r = beta_stabilize_edges(complete(3), complete(3).edges());
    REQUIRE(r.value_shift == 6);
    REQUIRE(solver.value(r.graph, GraphNumber::Beta) == 8);
    REQUIRE(is_stable(r.graph, GraphNumber::Beta, solver));
}

TEST_CASE("two-way gadget on K2")
{
    auto r = two_way_gadget_edge(complete(2), {0, 1});
    REQUIRE(r.graph.num_vertices() == 10);
    REQUIRE(r.value_shift == 6);
    REQUIRE(solver.value(r.graph, GraphNumber::Beta) == 7);
    REQUIRE(is_stable(r.graph, GraphNumber::Beta, solver));
    REQUIRE(is_unfrozen(r.graph, GraphNumber::Beta, solver));
    REQUIRE_THROWS_AS(
        two_way_gadget_edge(empty_graph(0), {0, 1}), std::domain_error);
}

TEST_CASE("two-way gadget preserves the untouched edge's status")
{
    Graph p3 = path(3);
    auto r = two_way_gadget_edge(p3, {0, 1});
    bool before
        = edge_status(p3, {1, 2}, GraphNumber::Beta, solver).unchanged();
    bool after
        = edge_status(r.graph, {1, 2}, GraphNumber::Beta, solver).unchanged();
    REQUIRE(before == after);
}

TEST_CASE("chi stabilization of one P3 edge")
{
    Graph p3 = path(3);
    auto r = chi_stabilize_edges(p3, {{0, 1}});
    REQUIRE(r.graph.num_vertices() == 15);
    REQUIRE(r.value_shift == 2);
    REQUIRE(solver.value(r.graph, GraphNumber::Chi) == 4);
    // the surviving edge is stable in the output exactly because it is in P3
    REQUIRE(edge_status(p3, {1, 2}, GraphNumber::Chi, solver).unchanged());
    REQUIRE(
        edge_status(r.graph, {1, 2}, GraphNumber::Chi, solver).unchanged());
    REQUIRE_THROWS_AS(chi_stabilize_edges(p3, {}), std::domain_error);
    REQUIRE_THROWS_AS(chi_stabilize_edges(p3, {{0, 2}}), std::domain_error);
}

TEST_CASE("chi stabilization of every K3 edge yields a stable graph")
{
    Graph k3 = complete(3);
    auto r = chi_stabilize_edges(k3, k3.edges());
    REQUIRE(solver.value(r.graph, GraphNumber::Chi) == 5);
    REQUIRE(is_stable(r.graph, GraphNumber::Chi, solver));
}

TEST_CASE("gadget vertices carry addressable labels")
{
    auto r = beta_stabilize_edge(complete(2), {0, 1});
    REQUIRE(r.graph.vertex_by_label("u1@0-1") == 2);
    auto c = chi_stabilize_edges(path(3), {{0, 1}});
    REQUIRE(c.graph.vertex_by_label("w1'") == 3);
    REQUIRE(c.graph.vertex_by_label("u'@0-1") != -1);
    REQUIRE(c.graph.vertex_by_label("v''2@0-1") != -1);
}

TEST_CASE("join AND combinator")
{
    auto r = join_and({cycle(5), cycle(5)}, AndFlavor::Unfrozenness);
    REQUIRE(solver.value(r.graph, GraphNumber::Chi) == 6);
    REQUIRE(is_unfrozen(r.graph, GraphNumber::Chi, solver));

    auto s = join_and({path(3), complete(2)}, AndFlavor::VertexStability);
    REQUIRE_FALSE(is_vertex_stable(s.graph, GraphNumber::Chi, solver));

    auto single = join_and({complete(1)}, AndFlavor::Unfrozenness);
    REQUIRE(single.graph == complete(1));
    REQUIRE_THROWS_AS(join_and({}, AndFlavor::Unfrozenness),
        std::domain_error);
}

TEST_CASE("stabilized join AND combinator")
{
    Graph k3k3 = disjoint_union(complete(3), complete(3));
    auto good = stabilized_join_and({k3k3, k3k3});
    REQUIRE(good.value_shift == 2);
    REQUIRE(is_stable(good.graph, GraphNumber::Chi, solver));

    auto bad = stabilized_join_and({cycle(5), k3k3});
    REQUIRE_FALSE(is_stable(bad.graph, GraphNumber::Chi, solver));

    // no join edges to stabilize: identity on the single input
    auto single = stabilized_join_and({complete(1)});
    REQUIRE(single.graph == complete(1));
}

TEST_CASE("provenance tags cover every output element exactly once")
{
    Graph p3 = path(3);
    auto r = beta_stabilize_edge(p3, {0, 1});
    long vertices = 0, edges = 0, original_edges = 0;
    for (const auto& [ref, tag] : r.element_provenance) {
        if (ref.kind == ElementKind::Vertex)
            ++vertices;
        if (ref.kind == ElementKind::Edge) {
            ++edges;
            if (tag.origin == Origin::Original) {
                ++original_edges;
                REQUIRE(tag.source.has_value());
                REQUIRE(p3.has_edge(tag.source->a, tag.source->b));
            }
        }
    }
    REQUIRE(vertices == r.graph.num_vertices());
    REQUIRE(edges == r.graph.num_edges());
    // surviving input edges biject with original-tagged edges
    REQUIRE(original_edges == 1); // {1,2} survives, {0,1} was replaced
}
