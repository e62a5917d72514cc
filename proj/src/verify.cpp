#include "trifree/verify.hpp"

#include <algorithm>

namespace trifree {

std::optional<std::pair<Vertex, Vertex>> independence_violation(const PlaneGraph& g,
                                                                const VertexSet& s) {
    for (Vertex v : s) {
        if (!g.has_vertex(v)) return std::pair{v, v};
        for (Vertex u : g.neighbors(v))
            if (s.count(u)) return std::pair{std::min(u, v), std::max(u, v)};
    }
    return std::nullopt;
}

}  // namespace trifree
