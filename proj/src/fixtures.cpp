#include "trifree/fixtures.hpp"

#include "trifree/diamond.hpp"
#include "trifree/embedding.hpp"
#include "trifree/isomorphism.hpp"

namespace trifree::fixtures {

PlaneGraph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                      std::size_t outer_length) {
    SimpleGraph s = SimpleGraph::with_vertices(n);
    for (const auto& [a, b] : edges) s.add_edge(a - 1, b - 1);
    auto g = embed(s);
    if (!g) throw PreconditionError("fixture is not planar");
    if (outer_length == 0) return *g;
    for (const Face& f : g->faces())
        if (f.length() == outer_length) return re_embed(*g, f);
    throw PreconditionError("fixture has no face of the requested length");
}

PlaneGraph p2() { return from_edges(2, {{1, 2}}); }

PlaneGraph cycle(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
    return from_edges(n, e, static_cast<std::size_t>(n));
}

PlaneGraph c5() { return cycle(5); }

PlaneGraph c5_dagger() { return path_diamond_replacement(c5(), {1, 2, 3, 4}).graph; }

PlaneGraph c5_ddagger() {
    return from_edges(11, {{2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 2}, {2, 6}, {6, 5}, {6, 7},
                           {9, 1}, {1, 8}, {8, 7}, {7, 9}, {9, 10}, {10, 11}, {11, 8}});
}

PlaneGraph c6_chord() {
    return from_edges(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 4}}, 6);
}

PlaneGraph c6_hub() {
    return from_edges(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {7, 1}, {7, 3}, {7, 5}},
                      6);
}

PlaneGraph cube() {
    return from_edges(8, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 5},
                          {1, 5}, {2, 6}, {3, 7}, {4, 8}},
                      4);
}

}  // namespace trifree::fixtures
