#pragma once

#include <utility>
#include <vector>

#include "trifree/plane_graph.hpp"

namespace trifree::fixtures {

/// Plane graph on labels 1..n with the given edges. The outer face, when
/// requested, is the first face of that length.
PlaneGraph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                      std::size_t outer_length = 0);

PlaneGraph p2();
PlaneGraph cycle(int n);  // outer face is the cycle
PlaneGraph c5();
PlaneGraph c5_dagger();
/// Labels follow the drawing of the 11-vertex member: 1=x1 2=u1 3=z1 4=z2
/// 5=u2 6=w 7=x2 8=a1 9=a2 10=a3 11=a4.
PlaneGraph c5_ddagger();
/// 6-cycle 1..6 (outer) with chord 1-4.
PlaneGraph c6_chord();
/// 6-cycle 1..6 (outer) with hub 7 adjacent to 1, 3, 5.
PlaneGraph c6_hub();
PlaneGraph cube();

}  // namespace trifree::fixtures
