#include "trifree/embedding.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace trifree {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

}  // namespace

std::optional<PlaneGraph> embed(const SimpleGraph& g) {
    BoostGraph bg(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.has_edge(i, j)) boost::add_edge(i, j, bg);
    int index = 0;
    for (auto [it, end] = boost::edges(bg); it != end; ++it)
        boost::put(boost::edge_index, bg, *it, index++);

    std::vector<std::vector<BoostEdge>> storage(static_cast<std::size_t>(g.n));
    auto embedding =
        boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
    const bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = embedding);
    if (!planar) return std::nullopt;

    Rotation rot;
    for (int v = 0; v < g.n; ++v) {
        auto& nbrs = rot[g.labels[v]];
        for (const BoostEdge& e : storage[v]) {
            int s = static_cast<int>(boost::source(e, bg));
            int t = static_cast<int>(boost::target(e, bg));
            nbrs.push_back(g.labels[s == v ? t : s]);
        }
    }
    return PlaneGraph(std::move(rot));
}

std::optional<PlaneGraph> embed_exhaustive(const SimpleGraph& g) {
    if (g.n > 10) throw PreconditionError("exhaustive embedding is limited to 10 vertices");
    std::vector<std::vector<Vertex>> nbrs(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v)
        for (int u = 0; u < g.n; ++u)
            if (g.has_edge(v, u)) nbrs[v].push_back(g.labels[u]);

    // Odometer over rotations; the first neighbour stays fixed at each vertex.
    auto build = [&]() {
        Rotation rot;
        for (int v = 0; v < g.n; ++v) rot[g.labels[v]] = nbrs[v];
        return rot;
    };
    for (;;) {
        Rotation rot = build();
        if (is_genus_zero(rot)) return PlaneGraph(std::move(rot));
        int v = 0;
        for (; v < g.n; ++v) {
            auto& r = nbrs[v];
            if (r.size() >= 3 && std::next_permutation(r.begin() + 1, r.end())) break;
        }
        if (v == g.n) return std::nullopt;
    }
}

bool is_planar(const SimpleGraph& g) { return embed(g).has_value(); }

}  // namespace trifree
