#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trifree/configurations.hpp"
#include "trifree/diamond.hpp"
#include "trifree/plane_graph.hpp"

namespace trifree {

struct Identification {
    Vertex a = 0, b = 0, merged = 0;
};

struct ReductionStep {
    ConfigKind kind = ConfigKind::C1;
    Configuration config;
    VertexSet removed;
    std::optional<Identification> identified;
    std::vector<std::pair<Vertex, Vertex>> added_edges;
    int gain_k = 0;
    std::size_t host_size_before = 0;
    std::size_t host_size_after = 0;
    std::shared_ptr<const PlaneGraph> host;
    std::shared_ptr<const PlaneGraph> reduced;

    /// `C3 removed={...} k=2` plus identification/added-edge fields when present.
    std::string to_string() const;
};

struct Reduction {
    PlaneGraph reduced;
    ReductionStep step;
};

/// Applies the reduction of a C1..C4 configuration. C5 must first go
/// through c5_to_c2. The configuration is re-verified against `g`.
Reduction reduce(const PlaneGraph& g, const Configuration& c);

struct LiftOutcome {
    VertexSet set;
    /// The C4 lift needed the derived candidate {v1,u2,u3} because the
    /// printed candidate {v1,u3,u4} was not independent.
    bool used_fallback = false;
};

/// Lifts an independent set of the reduced graph to one of the host with
/// gain_k more vertices. Every candidate is verified before returning.
LiftOutcome lift_detailed(const ReductionStep& step, const VertexSet& reduced_set);
VertexSet lift(const ReductionStep& step, const VertexSet& reduced_set);

struct DiamondLiftContext {
    std::shared_ptr<const PlaneGraph> host;
    std::shared_ptr<const PlaneGraph> reduced;
    Diamond diamond;
    Vertex x1 = 0, v1 = 0, v2 = 0, x2 = 0;
};

struct DiamondReduction {
    PlaneGraph reduced;
    DiamondLiftContext context;
};

DiamondReduction diamond_reduce(const PlaneGraph& g, const Diamond& d);
/// Same, using a particular path placement from path_placements().
DiamondReduction diamond_reduce(const PlaneGraph& g, const Diamond& d,
                                const PathReplacement& placement);

/// S' ∪ {z2} with v1 swapped for u1 and v2 for w.
VertexSet diamond_lift(const DiamondLiftContext& ctx, const VertexSet& reduced_set);

/// Maps an independent set of the host to one of replace_diamond_with_path(g, d)
/// with one vertex fewer, after extending it to a maximal independent set.
VertexSet diamond_project(const PlaneGraph& g, const Diamond& d, const VertexSet& s);

/// Planar, triangle-free and alpha <= (n+1)/3.
bool check_tight(const PlaneGraph& g, int alpha);

}  // namespace trifree
