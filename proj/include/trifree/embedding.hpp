#pragma once

#include <optional>

#include "trifree/isomorphism.hpp"
#include "trifree/plane_graph.hpp"

namespace trifree {

/// A plane embedding of an abstract graph (vertex ids taken from g.labels),
/// or nullopt when the graph is not planar. Backed by Boyer–Myrvold.
std::optional<PlaneGraph> embed(const SimpleGraph& g);

/// Exhaustive rotation-system search; n <= 10 only. Independent of embed().
std::optional<PlaneGraph> embed_exhaustive(const SimpleGraph& g);

bool is_planar(const SimpleGraph& g);

}  // namespace trifree
