#pragma once

#include <array>
#include <string>
#include <vector>

#include "trifree/plane_graph.hpp"

namespace trifree {

/// A 5-cycle u1 z1 z2 u2 w with deg(u1)=deg(u2)=deg(w)=3, deg(z1)=deg(z2)=2,
/// x1 the common neighbour of u1,u2 off the cycle and x2 the third
/// neighbour of w.
struct Diamond {
    Vertex u1 = 0, z1 = 0, z2 = 0, u2 = 0, w = 0;
    Vertex x1 = 0, x2 = 0;

    std::array<Vertex, 5> cycle() const { return {u1, z1, z2, u2, w}; }
    VertexSet vertex_set() const { return {u1, z1, z2, u2, w}; }
    /// The same diamond read the other way round (u1<->u2, z1<->z2).
    Diamond mirrored() const { return {u2, z2, z1, u1, w, x1, x2}; }

    friend bool operator==(const Diamond&, const Diamond&) = default;
};

std::string to_string(const Diamond& d);

bool is_diamond(const PlaneGraph& g, const Diamond& d);

/// All diamonds, one per reflection class (z1 < z2), ordered by (z1, z2, w).
std::vector<Diamond> find_diamonds(const PlaneGraph& g);

/// Result of replacing a diamond by the path x1 v1 v2 x2.
struct PathReplacement {
    PlaneGraph graph;
    Vertex x1 = 0, v1 = 0, v2 = 0, x2 = 0;
};

/// Replaces the diamond by a fresh path; v1 takes the slot of u1 (or u2) at
/// x1 and v2 the slot of w at x2 when that is planar.
PathReplacement replace_diamond_with_path(const PlaneGraph& g, const Diamond& d);

/// Every distinct planar placement of the replacing path, preferred first.
std::vector<PathReplacement> path_placements(const PlaneGraph& g, const Diamond& d);

/// Directed paths x1 v1 v2 x2 with deg(v1) = deg(v2) = 2 (x1 is the end
/// that receives u1 and u2 on replacement). Sorted.
std::vector<Path> qualifying_paths(const PlaneGraph& g);

struct DiamondInsertion {
    PlaneGraph graph;
    Diamond diamond;
};

/// Deletes v1,v2 and inserts a diamond: the 5-cycle u1 z1 z2 u2 w plus the
/// edges x1u1, x1u2, x2w, with fresh labels u1,z1,z2,u2,w in that order.
DiamondInsertion path_diamond_replacement(const PlaneGraph& g, const Path& path);

}  // namespace trifree
