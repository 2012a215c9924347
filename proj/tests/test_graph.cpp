#include "stab/dimacs.hpp"
#include "stab/enumerate.hpp"
#include "stab/graph.hpp"
#include "stab/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace stab;

TEST_CASE("parse_dimacs reads the edge format")
{
    Graph p3 = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n");
    REQUIRE(p3.num_vertices() == 3);
    REQUIRE(p3.num_edges() == 2);
    REQUIRE(p3.has_edge(0, 1));
    REQUIRE(p3.has_edge(1, 2));
    REQUIRE_FALSE(p3.has_edge(0, 2));

    Graph i2 = parse_dimacs("p edge 2 0\n");
    REQUIRE(i2.num_vertices() == 2);
    REQUIRE(i2.num_edges() == 0);
}

TEST_CASE("parse_dimacs rejects malformed input with line numbers")
{
    try {
        parse_dimacs("p edge 2 1\ne 1 1\n");
        FAIL("self-loop accepted");
    } catch (const ParseError& e) {
        REQUIRE(e.line() == 2);
        REQUIRE(std::string(e.what()).find("self-loop") != std::string::npos);
    }
    REQUIRE_THROWS_AS(parse_dimacs("p edges x\n"), ParseError);
    REQUIRE_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), ParseError);
    REQUIRE_THROWS_AS(
        parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n"), ParseError);
    REQUIRE_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);
}

TEST_CASE("dimacs round-trips graphs with labels")
{
    Graph g = path(4);
    g.set_label(0, "start");
    g.set_label(3, "end");
    Graph back = parse_dimacs(write_dimacs(g));
    REQUIRE(back == g);
    REQUIRE(*back.label(0) == "start");
    REQUIRE(*back.label(3) == "end");
    REQUIRE(back.vertex_by_label("end") == 3);

    // round-trip as a property over the exhaustive n<=4 family
    for_each_graph(4, [&](const Graph& h) {
        REQUIRE(parse_dimacs(write_dimacs(h)) == h);
    });
}

TEST_CASE("disjoint union")
{
    Graph k3k3 = disjoint_union(complete(3), complete(3));
    REQUIRE(k3k3.num_vertices() == 6);
    REQUIRE(k3k3.num_edges() == 6);
    REQUIRE(oracle::chromatic_number(k3k3) == 3);

    Graph g = path(3);
    Graph same = disjoint_union(g, empty_graph(0));
    REQUIRE(same == g);

    REQUIRE(disjoint_union(empty_graph(2), empty_graph(3))
        == empty_graph(5));
}

TEST_CASE("join")
{
    REQUIRE(join(complete(2), complete(3)) == complete(5));
    REQUIRE(join(empty_graph(2), empty_graph(2)).num_edges() == 4); // C4
    Graph p3k1 = join(path(3), complete(1));
    REQUIRE(p3k1.num_vertices() == 4);
    REQUIRE(p3k1.num_edges() == 5);
    REQUIRE(oracle::chromatic_number(p3k1) == 3);
}

TEST_CASE("complement")
{
    REQUIRE(complement(complete(4)) == empty_graph(4));
    REQUIRE(complement(empty_graph(0)) == empty_graph(0));
    // C5 is self-complementary (up to relabeling; this labeling realizes it)
    Graph c5 = cycle(5);
    Graph co = complement(c5);
    REQUIRE(co.num_edges() == 5);
    REQUIRE(oracle::chromatic_number(co) == 3);
    for (int v = 0; v < 5; ++v)
        REQUIRE(co.degree(v) == 2);
    // involution as a property
    for_each_graph(4, [&](const Graph& g) {
        REQUIRE(complement(complement(g)) == g);
    });
}

TEST_CASE("element edits")
{
    Graph k3 = complete(3);
    Graph p3 = delete_edge(k3, 0, 2);
    REQUIRE(p3.num_edges() == 2);
    REQUIRE(oracle::chromatic_number(p3) == 2);

    REQUIRE(delete_vertex(path(3), 1) == empty_graph(2));
    REQUIRE(add_vertex(path(3), {0, 1, 2}) == join(path(3), complete(1)));
    REQUIRE(add_edge(path(3), 0, 2) == complete(3));

    REQUIRE_THROWS_AS(delete_edge(path(3), 0, 2), std::domain_error);
    REQUIRE_THROWS_AS(delete_vertex(path(3), 7), std::domain_error);
    REQUIRE_THROWS_AS(add_edge(path(3), 0, 1), std::domain_error);
}

TEST_CASE("vertex deletion compacts ids and shifts labels")
{
    Graph g = path(4);
    g.set_label(3, "tail");
    Graph h = delete_vertex(g, 1);
    REQUIRE(h.num_vertices() == 3);
    REQUIRE(h.has_edge(1, 2)); // old 2-3 edge
    REQUIRE(*h.label(2) == "tail");
}

TEST_CASE("replication")
{
    // replicating the middle of P3 yields C4
    Graph r = replicate_vertex(path(3), 1);
    REQUIRE(r.num_vertices() == 4);
    REQUIRE(r.num_edges() == 4);
    REQUIRE(oracle::chromatic_number(r) == 2);

    REQUIRE(replicate_vertex(complete(1), 0) == empty_graph(2));

    Graph rk3 = replicate_vertex(complete(3), 0);
    REQUIRE(rk3.num_vertices() == 4);
    REQUIRE(rk3.num_edges() == 5);
    REQUIRE(oracle::chromatic_number(rk3) == 3);
}

TEST_CASE("canonical families")
{
    REQUIRE(complete(4).num_edges() == 6);
    REQUIRE(empty_graph(0).num_vertices() == 0);
    REQUIRE(oracle::chromatic_number(empty_graph(0)) == 0);
    REQUIRE(oracle::vertex_cover_number(empty_graph(0)) == 0);
    REQUIRE(oracle::chromatic_number(complete(1)) == 1);
    REQUIRE(oracle::vertex_cover_number(complete(1)) == 0);
}

TEST_CASE("union and join chromatic identities on small pairs")
{
    std::vector<Graph> pool;
    for_each_graph(3, [&](const Graph& g) { pool.push_back(g); });
    pool.push_back(cycle(4));
    pool.push_back(path(4));
    for (const auto& g : pool)
        for (const auto& h : pool) {
            int cg = oracle::chromatic_number(g);
            int ch = oracle::chromatic_number(h);
            REQUIRE(oracle::chromatic_number(disjoint_union(g, h))
                == std::max(cg, ch));
            REQUIRE(oracle::chromatic_number(join(g, h)) == cg + ch);
        }
}

TEST_CASE("cover and independence complement each other")
{
    for (int n = 0; n <= 6; ++n)
        for (int t = 0; t < 20; ++t) {
            Graph g = random_graph(n, 0.4, 50 * n + t);
            REQUIRE(oracle::vertex_cover_number(g)
                    + oracle::independence_number(g)
                == n);
        }
}
