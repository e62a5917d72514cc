#include <doctest.h>

#include "oracles.hpp"
#include "trifree/embedding.hpp"
#include "trifree/fixtures.hpp"
#include "trifree/graph_io.hpp"
#include "trifree/isomorphism.hpp"

using namespace trifree;

TEST_CASE("faces of a cycle") {
    const PlaneGraph g = fixtures::c5();
    CHECK(g.num_vertices() == 5);
    CHECK(g.num_edges() == 5);
    REQUIRE(g.faces().size() == 2);
    for (const Face& f : g.faces()) {
        CHECK(f.length() == 5);
        CHECK(f.is_cycle());
    }
    CHECK(g.has_outer_face());
    CHECK(is_triangle_free(g));
}

TEST_CASE("Euler count on every corpus graph") {
    for (const PlaneGraph& g :
         {fixtures::p2(), fixtures::c5_dagger(), fixtures::c5_ddagger(), fixtures::cube(),
          fixtures::c6_chord(), fixtures::c6_hub()}) {
        const long v = static_cast<long>(g.num_vertices());
        const long e = static_cast<long>(g.num_edges());
        const long f = static_cast<long>(g.faces().size());
        CHECK(v - e + f == 2);
        std::size_t darts = 0;
        for (const Face& face : g.faces()) darts += face.length();
        CHECK(darts == 2 * g.num_edges());
    }
}

TEST_CASE("single vertex and edge") {
    const PlaneGraph one(Rotation{{1, {}}});
    // An isolated vertex has no darts, hence no face walk; Euler counts it
    // as one face on its own.
    CHECK(one.faces().empty());
    CHECK(is_genus_zero(one.rotation()));
    const PlaneGraph p2 = fixtures::p2();
    REQUIRE(p2.faces().size() == 1);
    CHECK(p2.faces()[0].length() == 2);
    CHECK_FALSE(p2.faces()[0].is_cycle());
}

TEST_CASE("invalid rotations are rejected") {
    CHECK_THROWS_AS(PlaneGraph(Rotation{{1, {2}}, {2, {}}}), InputError);
    CHECK_THROWS_AS(PlaneGraph(Rotation{{1, {2, 2}}, {2, {1, 1}}}), InputError);
    CHECK_THROWS_AS(PlaneGraph(Rotation{{1, {1}}}), InputError);
    // K4 with a rotation of genus 1.
    Rotation k4{{1, {2, 3, 4}}, {2, {1, 3, 4}}, {3, {1, 2, 4}}, {4, {1, 2, 3}}};
    CHECK_THROWS_AS(PlaneGraph{k4}, InputError);
    CHECK_FALSE(is_genus_zero(k4));
}

TEST_CASE("K3,3 has no embedding, by either route") {
    SimpleGraph k33 = SimpleGraph::with_vertices(6);
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
    CHECK_FALSE(embed(k33).has_value());
    CHECK_FALSE(embed_exhaustive(k33).has_value());
    k33.adj.assign(6, 0);
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b)
            if (a + 3 != b) k33.add_edge(a, b);
    CHECK(embed(k33).has_value());
    CHECK(embed_exhaustive(k33).has_value());
}

TEST_CASE("triangle detection") {
    CHECK_FALSE(is_triangle_free(fixtures::cycle(3)));
    CHECK(is_triangle_free(fixtures::cycle(4)));
    CHECK(is_triangle_free(fixtures::cube()));
}

TEST_CASE("paths_between agrees with exhaustive DFS") {
    for (const PlaneGraph& g : {fixtures::cube(), fixtures::c5_ddagger(), fixtures::c6_hub()}) {
        const auto vs = g.vertices();
        for (Vertex a : vs)
            for (Vertex b : vs) {
                if (a == b) continue;
                for (int len = 1; len <= 4; ++len)
                    CHECK(paths_between(g, a, b, len).size() ==
                          static_cast<std::size_t>(oracle::count_paths(g, a, b, len)));
            }
    }
}

TEST_CASE("cycles_up_to agrees with exhaustive DFS") {
    const PlaneGraph q3 = fixtures::cube();
    CHECK(cycles_up_to(q3, 4).size() == 6);
    for (const PlaneGraph& g : {q3, fixtures::c5_ddagger(), fixtures::c6_hub(), fixtures::c6_chord()})
        for (int len = 3; len <= 6; ++len)
            CHECK(cycles_up_to(g, len).size() ==
                  static_cast<std::size_t>(oracle::count_cycles(g, len)));
    for (const Cycle& c : cycles_up_to(q3, 6)) CHECK(is_cycle_of(q3, c));
}

TEST_CASE("disk subgraph of a face boundary is the cycle") {
    const PlaneGraph g = fixtures::c6_hub();
    for (const Face& f : g.faces()) {
        if (f == g.outer_face()) continue;
        const Cycle c = f.boundary();
        CHECK(cycle_bounds_face(c, f));
        const DiskSubgraph d = disk_subgraph(g, c);
        CHECK(d.subgraph.num_vertices() == c.size());
        CHECK(d.subgraph.num_edges() == c.size());
        CHECK(d.subgraph.outer_face().vertex_set() == VertexSet(c.begin(), c.end()));
    }
}

TEST_CASE("disk subgraphs of C6,v drawn with a 4-face outside") {
    const PlaneGraph g = fixtures::c6_hub();
    PlaneGraph h = g;
    for (const Face& f : g.faces())
        if (f.vertex_set() == VertexSet{1, 2, 3, 7}) h = re_embed(g, f);
    REQUIRE(h.outer_face().vertex_set() == VertexSet{1, 2, 3, 7});
    // The rim now bounds an inner face.
    const DiskSubgraph rim = disk_subgraph(h, {1, 2, 3, 4, 5, 6});
    CHECK(rim.subgraph.num_vertices() == 6);
    CHECK(rim.subgraph.num_edges() == 6);
    // 3 4 5 6 1 7 encloses two 4-faces sharing the edge 5-7.
    const DiskSubgraph two = disk_subgraph(h, {1, 6, 5, 4, 3, 7});
    CHECK(two.subgraph.num_vertices() == 6);
    CHECK(two.subgraph.num_edges() == 7);
    CHECK(two.subgraph.adjacent(5, 7));
    CHECK_THROWS_AS(disk_subgraph(h, {1, 2, 3, 7}), PreconditionError);
}

TEST_CASE("induced subgraphs keep cyclic order") {
    const PlaneGraph g = fixtures::cube();
    const PlaneGraph h = g.induced({1, 2, 3, 4, 5});
    CHECK(h.num_vertices() == 5);
    CHECK(h.num_edges() == 5);
    CHECK(g.components().size() == 1);
    CHECK(g.induced({1, 3, 6, 8}).components().size() == 4);
}

TEST_CASE("serialize / parse round trip") {
    for (const PlaneGraph& g : {fixtures::c5(), fixtures::c5_ddagger(), fixtures::cube(),
                                fixtures::c6_hub(), fixtures::p2()}) {
        const std::string text = serialize(g);
        const PlaneGraph back = parse_graph(text);
        CHECK(serialize(back) == text);
        CHECK(canonical_form(back) == canonical_form(g));
        CHECK(back.has_outer_face() == g.has_outer_face());
        if (g.has_outer_face()) CHECK(back.outer_face().length() == g.outer_face().length());
    }
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_graph(""), InputError);
    CHECK_THROWS_AS(parse_graph("2 1\n1: 2\n"), InputError);
    CHECK_THROWS_AS(parse_graph("2 1\n1: 2\n2: 3\n"), InputError);
    CHECK_THROWS_AS(parse_graph("2 2\n1: 2\n2: 1\n"), InputError);
    CHECK_THROWS_AS(parse_graph("2 1\n1: 2\n2:\n"), InputError);
    CHECK_THROWS_AS(parse_graph("3 3\n1: 2 3\n2: 1 3\n3: 1 2\nouter: 1 3 2 1\n"), InputError);
    CHECK_NOTHROW(parse_graph("# comment\n2 1\n1: 2\n2: 1\n"));
}

TEST_CASE("several graphs in one stream") {
    const std::string text = serialize(fixtures::c5()) + serialize(fixtures::cube());
    const auto graphs = parse_graphs(text);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].num_vertices() == 5);
    CHECK(graphs[1].num_vertices() == 8);
}
