#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trifree/diamond.hpp"
#include "trifree/plane_graph.hpp"

namespace trifree {

enum class Terminal { P2, C5, NOT_MEMBER };
std::string terminal_name(Terminal t);

/// One diamond-to-path replacement, in the order it was applied to the input.
struct MembershipStep {
    Diamond diamond;
    Vertex x1 = 0, v1 = 0, v2 = 0, x2 = 0;
};

struct MembershipTrace {
    std::vector<MembershipStep> steps;
    Terminal terminal = Terminal::NOT_MEMBER;

    bool member() const { return terminal != Terminal::NOT_MEMBER; }
    /// One `replace u1 z1 z2 u2 w -> path x1 v1 v2 x2` line per step, then
    /// `terminal <P2|C5|NOT_MEMBER>`.
    std::string serialize() const;
};

/// Backtracks over diamond choices until P2 or C5 is reached. Failed
/// intermediate graphs are memoised by canonical form.
MembershipTrace is_member(const PlaneGraph& g);

/// Rebuilds the terminal of a member trace and replays the path-diamond
/// replacements; the result is isomorphic to the traced graph.
PlaneGraph replay(const PlaneGraph& g, const MembershipTrace& trace);

/// C5 followed by `steps` path-diamond replacements on uniformly chosen
/// qualifying paths.
PlaneGraph generate_member(int steps, std::uint64_t seed);

/// Independent set of size (n+1)/3, lifted through the trace.
VertexSet member_max_independent_set(const PlaneGraph& g, const MembershipTrace& trace);

/// Independent set of size (n+1)/3 avoiding V(f), for a member and a face f
/// with no vertex of degree <= 2.
VertexSet avoiding_independent_set(const PlaneGraph& g, const Face& f);

/// Faces with no incident vertex of degree <= 2.
std::vector<Face> qualifying_faces(const PlaneGraph& g);

}  // namespace trifree
