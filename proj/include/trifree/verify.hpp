#pragma once

#include <optional>
#include <utility>

#include "trifree/plane_graph.hpp"

namespace trifree {

/// Adjacency scan. Returns an edge inside `s` (or a pair naming a vertex
/// missing from the graph twice) when `s` is not an independent set of `g`.
std::optional<std::pair<Vertex, Vertex>> independence_violation(const PlaneGraph& g,
                                                                const VertexSet& s);

inline bool is_independent(const PlaneGraph& g, const VertexSet& s) {
    return !independence_violation(g, s).has_value();
}

}  // namespace trifree
