#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "trifree/plane_graph.hpp"

namespace trifree {

// Text format, line oriented, '#' starts a comment:
//
//   n m
//   v: a b c ...        (n lines, clockwise rotation at v, vertices 1..n)
//   outer: v1 v2 ...    (optional boundary walk of the outer face)
//
// Several graphs may be concatenated in one stream; each header starts a new one.

PlaneGraph parse_graph(std::string_view text);
std::vector<PlaneGraph> parse_graphs(std::string_view text);
PlaneGraph read_graph_file(const std::string& path);

/// Writes vertices relabelled to 1..n in ascending order, each rotation
/// starting from its smallest neighbour.
std::string serialize(const PlaneGraph& g);
void write_graph_file(const std::string& path, const PlaneGraph& g);

}  // namespace trifree
