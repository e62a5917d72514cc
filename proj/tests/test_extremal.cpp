#include <doctest.h>

#include "oracles.hpp"
#include "trifree/corpus.hpp"
#include "trifree/extremal.hpp"
#include "trifree/fixtures.hpp"
#include "trifree/isomorphism.hpp"
#include "trifree/reductions.hpp"
#include "trifree/solver.hpp"

using namespace trifree;

TEST_CASE("diamond counts match a brute-force scan") {
    CHECK(find_diamonds(fixtures::c5()).empty());
    for (const PlaneGraph& g : {fixtures::c5_dagger(), fixtures::c5_ddagger(), fixtures::cube(),
                                generate_member(4, 2), generate_member(6, 3)})
        CHECK(find_diamonds(g).size() == static_cast<std::size_t>(oracle::count_diamonds(g)));
    CHECK(find_diamonds(fixtures::c5_dagger()).size() == 4);
    CHECK(find_diamonds(fixtures::c5_ddagger()).size() == 2);
}

TEST_CASE("path-diamond replacement builds the small members") {
    const PlaneGraph c5 = fixtures::c5();
    for (const Path& p : qualifying_paths(c5)) {
        const PlaneGraph g = path_diamond_replacement(c5, p).graph;
        CHECK(g.num_vertices() == 8);
        CHECK(is_triangle_free(g));
        CHECK(isomorphic_small(g, fixtures::c5_dagger()));
    }
    const PlaneGraph dagger = fixtures::c5_dagger();
    for (const Path& p : qualifying_paths(dagger)) {
        const PlaneGraph g = path_diamond_replacement(dagger, p).graph;
        CHECK(g.num_vertices() == 11);
        CHECK(isomorphic_small(g, fixtures::c5_ddagger()));
    }
    CHECK(qualifying_paths(fixtures::p2()).empty());
    CHECK_THROWS_AS(path_diamond_replacement(fixtures::p2(), {1, 2}), PreconditionError);
    CHECK_THROWS_AS(path_diamond_replacement(fixtures::cube(), {1, 2, 3, 4}), PreconditionError);
}

TEST_CASE("diamond to path and back are inverse up to isomorphism") {
    for (int steps = 1; steps <= 7; ++steps) {
        const PlaneGraph g = generate_member(steps, 100 + steps);
        for (const Diamond& d : find_diamonds(g)) {
            const PathReplacement rep = replace_diamond_with_path(g, d);
            CHECK(rep.graph.num_vertices() + 3 == g.num_vertices());
            CHECK(is_triangle_free(rep.graph));
            const PlaneGraph back =
                path_diamond_replacement(rep.graph, {rep.x1, rep.v1, rep.v2, rep.x2}).graph;
            CHECK(canonical_form(back) == canonical_form(g));
        }
    }
    CHECK_THROWS_AS(replace_diamond_with_path(fixtures::c5(), Diamond{1, 2, 3, 4, 5, 6, 7}),
                    PreconditionError);
}

TEST_CASE("membership examples") {
    const auto c5 = is_member(fixtures::c5());
    CHECK(c5.terminal == Terminal::C5);
    CHECK(c5.steps.empty());
    const auto ddag = is_member(fixtures::c5_ddagger());
    CHECK(ddag.terminal == Terminal::C5);
    CHECK(ddag.steps.size() == 2);
    CHECK(is_member(fixtures::p2()).terminal == Terminal::P2);
    CHECK(is_member(fixtures::cube()).terminal == Terminal::NOT_MEMBER);
    CHECK(is_member(fixtures::c6_hub()).terminal == Terminal::NOT_MEMBER);
    CHECK(is_member(fixtures::cycle(8)).terminal == Terminal::NOT_MEMBER);
}

TEST_CASE("trace serialization and replay") {
    const PlaneGraph g = generate_member(4, 8);
    const auto t = is_member(g);
    REQUIRE(t.member());
    const std::string text = t.serialize();
    CHECK(text.rfind("replace ", 0) == 0);
    CHECK(text.find(" -> path ") != std::string::npos);
    CHECK(text.find("terminal C5\n") != std::string::npos);
    CHECK(canonical_form(replay(g, t)) == canonical_form(g));
    MembershipTrace broken = t;
    broken.steps.front().v1 += 1000;
    CHECK_THROWS_AS(member_max_independent_set(g, broken), PreconditionError);
}

TEST_CASE("generate_member is deterministic and has the right size") {
    CHECK(generate_member(0, 5) == fixtures::c5());
    CHECK(isomorphic_small(generate_member(1, 17), fixtures::c5_dagger()));
    for (std::uint64_t seed : {1, 2, 3}) {
        const PlaneGraph g = generate_member(2, seed);
        CHECK(g.num_vertices() == 11);
        CHECK(oracle::alpha(g) == 4);
    }
    CHECK(generate_member(6, 42) == generate_member(6, 42));
    CHECK_THROWS_AS(generate_member(-1, 0), PreconditionError);
}

TEST_CASE("member independent sets have size (n+1)/3") {
    for (int steps = 0; steps <= 6; ++steps) {
        const PlaneGraph g = generate_member(steps, 7 * steps + 1);
        const auto t = is_member(g);
        REQUIRE(t.member());
        const VertexSet s = member_max_independent_set(g, t);
        CHECK(oracle::independent(g, s));
        CHECK(3 * s.size() == g.num_vertices() + 1);
        if (g.num_vertices() <= 22) CHECK(static_cast<int>(s.size()) == oracle::alpha(g));
    }
    const PlaneGraph p2 = fixtures::p2();
    CHECK(member_max_independent_set(p2, is_member(p2)).size() == 1);
}

TEST_CASE("avoiding sets on the 11-vertex member") {
    const PlaneGraph g = fixtures::c5_ddagger();
    const auto faces = qualifying_faces(g);
    REQUIRE(faces.size() == 2);
    std::set<VertexSet> face_sets;
    for (const Face& f : faces) face_sets.insert(f.vertex_set());
    CHECK(face_sets == std::set<VertexSet>{{1, 2, 6, 7, 9}, {1, 5, 6, 7, 8}});
    for (const Face& f : faces) {
        const VertexSet s = avoiding_independent_set(g, f);
        CHECK(s.size() == 4);
        CHECK(oracle::independent(g, s));
        for (Vertex v : s) CHECK_FALSE(f.contains(v));
        if (f.vertex_set() == VertexSet{1, 2, 6, 7, 9}) CHECK(s == VertexSet{3, 5, 8, 10});
        else CHECK(s == VertexSet{2, 4, 9, 11});
    }
}

TEST_CASE("avoiding sets on larger members") {
    for (int steps = 3; steps <= 6; ++steps) {
        const PlaneGraph g = generate_member(steps, 1000 + steps);
        for (const Face& f : qualifying_faces(g)) {
            const VertexSet s = avoiding_independent_set(g, f);
            CHECK(oracle::independent(g, s));
            CHECK(3 * s.size() == g.num_vertices() + 1);
            for (Vertex v : s) CHECK_FALSE(f.contains(v));
        }
    }
}

TEST_CASE("avoiding set preconditions") {
    const PlaneGraph dagger = fixtures::c5_dagger();
    CHECK(qualifying_faces(dagger).empty());
    CHECK_THROWS_AS(avoiding_independent_set(dagger, dagger.faces().front()), PreconditionError);
    const PlaneGraph q3 = fixtures::cube();
    CHECK_THROWS_AS(avoiding_independent_set(q3, q3.faces().front()), PreconditionError);
}

TEST_CASE("non-members of the small corpus are exactly the non-tight graphs") {
    for (const PlaneGraph& g : enumerate_small(9)) {
        const bool member = is_member(g).member();
        const int a = oracle::alpha(g);
        CHECK(member == (3 * a <= static_cast<int>(g.num_vertices()) + 1));
    }
}

TEST_CASE("every diamond of a member leads to a member") {
    // Replacement order does not matter on these members.
    for (int steps = 1; steps <= 6; ++steps) {
        const PlaneGraph g = generate_member(steps, 500 + steps);
        for (const Diamond& d : find_diamonds(g))
            CHECK(is_member(replace_diamond_with_path(g, d).graph).member());
    }
}
