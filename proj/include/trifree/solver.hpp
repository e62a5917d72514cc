#pragma once

#include <string>
#include <vector>

#include "trifree/extremal.hpp"
#include "trifree/plane_graph.hpp"
#include "trifree/reductions.hpp"

namespace trifree {

struct AlphaResult {
    int alpha = 0;
    VertexSet witness;
};

/// Branch and bound on at most 40 vertices.
AlphaResult exact_alpha(const PlaneGraph& g);

struct SolveResult {
    VertexSet independent_set;
    std::vector<ReductionStep> trace;
    /// Sum over components of ceil((n+1)/3) for members, ceil((n+2)/3) otherwise.
    int guarantee = 0;
    bool met = false;
};

/// Components with at most this many vertices are solved exactly.
inline constexpr std::size_t kExactBaseSize = 8;

SolveResult solve(const PlaneGraph& g);

struct BoundsReport {
    std::size_t n = 0;
    int alpha = 0;
    bool member = false;
    bool weak_ok = false;    // 3 alpha >= n + 1
    bool strong_ok = false;  // member, or 3 alpha >= n + 2
    bool tight_ok = false;   // not a member, or 3 alpha == n + 1

    bool ok() const { return weak_ok && strong_ok && tight_ok; }
    std::string to_string() const;
};

BoundsReport check_theorem_bounds(const PlaneGraph& g);

}  // namespace trifree
