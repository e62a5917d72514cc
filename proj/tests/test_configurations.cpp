#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

#include "oracles.hpp"
#include "trifree/configurations.hpp"
#include "trifree/corpus.hpp"
#include "trifree/fixtures.hpp"

using namespace trifree;

namespace {

PlaneGraph dodecahedron() {
    std::vector<std::pair<Vertex, Vertex>> e;
    auto o = [](int k) { return 1 + (k % 5); };
    auto m = [](int k) { return 6 + (k % 10); };
    auto i = [](int k) { return 16 + (k % 5); };
    for (int k = 0; k < 5; ++k) {
        e.emplace_back(o(k), o(k + 1));
        e.emplace_back(i(k), i(k + 1));
        e.emplace_back(o(k), m(2 * k));
        e.emplace_back(m(2 * k + 1), i(k));
    }
    for (int k = 0; k < 10; ++k) e.emplace_back(m(k), m(k + 1));
    return fixtures::from_edges(20, e);
}

PlaneGraph star(int leaves) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int k = 2; k <= leaves + 1; ++k) e.emplace_back(1, k);
    return fixtures::from_edges(leaves + 1, e);
}

// Instance keys that do not depend on the finder's choice of labelling.
using Key = std::vector<int>;

Key key_of(const Configuration& c) {
    return std::visit(
        [](const auto& x) -> Key {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ConfC1>) {
                return {1, x.v};
            } else if constexpr (std::is_same_v<T, ConfC2>) {
                return {2, x.v, x.u, x.w, x.w2};
            } else if constexpr (std::is_same_v<T, ConfC4>) {
                Key k{4};
                k.insert(k.end(), x.face.begin(), x.face.end());
                return k;
            } else {
                std::set<Vertex> face(x.face.begin(), x.face.end());
                const int kind = std::is_same_v<T, ConfC3> ? 3 : 5;
                const Vertex a = x.face[0], b = x.face[kind == 3 ? 2 : 1];
                Key k{kind, std::min(a, b), std::max(a, b)};
                k.insert(k.end(), face.begin(), face.end());
                return k;
            }
        },
        c);
}

std::set<Key> library_keys(const PlaneGraph& g) {
    std::set<Key> out;
    for (const auto& c : find_all(g)) out.insert(key_of(c));
    return out;
}

Vertex third(const PlaneGraph& g, Vertex v, Vertex a, Vertex b) {
    for (Vertex u : g.neighbors(v))
        if (u != a && u != b) return u;
    return -1;
}

std::set<Key> naive_keys(const PlaneGraph& g) {
    std::set<Key> out;
    for (Vertex v : g.vertices()) {
        if (g.degree(v) <= 2) out.insert({1, v});
        if (g.degree(v) != 3) continue;
        for (Vertex u : g.neighbors(v))
            for (Vertex w : g.neighbors(v))
                for (Vertex w2 : g.neighbors(v))
                    if (u != w && u != w2 && w < w2 && oracle::count_paths(g, w, w2, 3) == 0)
                        out.insert({2, v, u, w, w2});
    }
    for (const Face& f : g.faces()) {
        if (!f.is_cycle()) continue;
        const auto b = f.boundary();
        const std::set<Vertex> vs(b.begin(), b.end());
        const int len = static_cast<int>(b.size());
        if (len == 4) {
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    if (i >= j || g.degree(b[i]) != 3 || g.degree(b[j]) != 3) continue;
                    const int kind = (j - i == 2) ? 3 : 5;
                    Key k{kind, std::min(b[i], b[j]), std::max(b[i], b[j])};
                    k.insert(k.end(), vs.begin(), vs.end());
                    out.insert(k);
                }
        }
        if (len == 5) {
            for (int dir : {1, 4})
                for (int s = 0; s < 5; ++s) {
                    Vertex v[5], u[4];
                    for (int i = 0; i < 5; ++i) v[i] = b[(s + dir * i) % 5];
                    bool ok = true;
                    for (int i = 0; i < 4 && ok; ++i) ok = g.degree(v[i]) == 3;
                    if (!ok) continue;
                    for (int i = 0; i < 4; ++i) u[i] = third(g, v[i], v[(i + 4) % 5], v[(i + 1) % 5]);
                    // u's pairwise distinct: see the C4 note in the README.
                    if (std::set<Vertex>(u, u + 4).size() != 4) continue;
                    if (g.adjacent(u[0], u[1]) || g.adjacent(u[2], u[3])) continue;
                    if (g.adjacent(u[0], u[3]) || oracle::count_paths(g, u[0], u[3], 2, vs)) continue;
                    if (g.adjacent(u[1], u[2]) || oracle::count_paths(g, u[1], u[2], 3, vs)) continue;
                    out.insert({4, v[0], v[1], v[2], v[3], v[4]});
                }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("C1 examples") {
    CHECK(find_c1(fixtures::c5()).size() == 5);
    CHECK(find_c1(fixtures::cube()).empty());
    const PlaneGraph dagger = fixtures::c5_dagger();
    std::size_t low = 0;
    for (Vertex v : dagger.vertices()) low += dagger.degree(v) <= 2;
    CHECK(find_c1(dagger).size() == low);
    CHECK(low == 4);
}

TEST_CASE("C2 examples") {
    CHECK(find_c2(star(3)).size() == 3);
    // The cube is bipartite: w, w' are on one side, so no odd path joins them.
    CHECK(find_c2(fixtures::cube()).size() == 24);
    bool hub_instance = false;
    for (const auto& c : find_c2(fixtures::c6_hub())) {
        const auto& x = std::get<ConfC2>(c);
        if (x.v == 7 && x.w == 1 && x.w2 == 3) hub_instance = true;
    }
    CHECK(hub_instance);
    CHECK(oracle::count_paths(fixtures::c6_hub(), 1, 3, 3) == 0);
}

TEST_CASE("C3 and C5 examples") {
    CHECK(find_c3(fixtures::cube()).size() == 12);
    CHECK(find_c5(fixtures::cube()).size() == 24);
    CHECK(find_c3(fixtures::c5()).empty());
    CHECK(find_c5(fixtures::c5()).empty());
    CHECK(find_c3(fixtures::c6_chord()).empty());
    CHECK_FALSE(find_c5(fixtures::c6_hub()).empty());
}

TEST_CASE("C4 examples") {
    CHECK(find_c4(fixtures::c5()).empty());
    const PlaneGraph d = dodecahedron();
    CHECK(naive_keys(d) == library_keys(d));
    // Every vertex has degree 3 and every face is a 5-cycle with distinct,
    // pairwise far outside neighbours: each face in each of 10 orientations.
    CHECK(find_c4(d).size() == 12 * 10);
}

TEST_CASE("finders agree with naive loops on the small corpus") {
    for (const PlaneGraph& g : enumerate_small(8)) REQUIRE(library_keys(g) == naive_keys(g));
}

TEST_CASE("finders agree with naive loops on random graphs") {
    std::mt19937_64 rng(5);
    int c4_seen = 0;
    for (int t = 0; t < 150; ++t) {
        const PlaneGraph g = grow_random(8 + t % 13, rng);
        REQUIRE(library_keys(g) == naive_keys(g));
        c4_seen += !find_c4(g).empty();
    }
    CHECK(c4_seen > 0);
}

TEST_CASE("find_any order") {
    CHECK(kind_of(find_any(fixtures::c5())) == ConfigKind::C1);
    CHECK(kind_of(find_any(fixtures::cube())) == ConfigKind::C2);
    for (const PlaneGraph& g : enumerate_small(9)) CHECK_NOTHROW(find_any(g));
}

TEST_CASE("c5_to_c2 produces a valid C2") {
    const PlaneGraph hub = fixtures::c6_hub();
    for (const auto& c : find_c5(hub)) {
        const ConfC2 c2 = c5_to_c2(hub, std::get<ConfC5>(c));
        CHECK(holds(hub, c2));
    }
    const PlaneGraph q3 = fixtures::cube();
    for (const auto& c : find_c5(q3)) CHECK(holds(q3, c5_to_c2(q3, std::get<ConfC5>(c))));
}

TEST_CASE("C5 implies C2 on the corpus") {
    for (const PlaneGraph& g : enumerate_small(9)) {
        const auto c5s = find_c5(g);
        if (c5s.empty()) continue;
        CHECK_FALSE(find_c2(g).empty());
        for (const auto& c : c5s) CHECK(holds(g, c5_to_c2(g, std::get<ConfC5>(c))));
    }
}

TEST_CASE("interference") {
    CHECK_FALSE(interferes(ConfC1{3}, VertexSet{1, 2}));
    CHECK(interferes(ConfC2{4, 5, 1, 6}, VertexSet{1, 2}));
    CHECK_FALSE(interferes(ConfC2{4, 1, 5, 6}, VertexSet{1, 2}));  // u may touch K
    CHECK_FALSE(interferes(ConfC4{{10, 11, 12, 13, 14}, {20, 21, 22, 23}}, VertexSet{14, 1}));
    CHECK(interferes(ConfC4{{10, 11, 12, 13, 14}, {20, 21, 22, 23}}, VertexSet{23}));
    // Monotone in K.
    const Configuration c = ConfC3{{1, 2, 3, 4}};
    VertexSet k{2};
    CHECK_FALSE(interferes(c, k));
    k.insert(3);
    CHECK(interferes(c, k));
    k.insert(9);
    CHECK(interferes(c, k));
}

TEST_CASE("stale configurations are detected") {
    const PlaneGraph g = fixtures::cube();
    CHECK_FALSE(holds(g, ConfC1{1}));
    CHECK_FALSE(holds(g, ConfC3{{1, 2, 3, 5}}));
    CHECK(holds(g, find_c3(g).front()));
}
