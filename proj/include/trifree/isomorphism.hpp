#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "trifree/plane_graph.hpp"

namespace trifree {

/// Dense adjacency-bitset view of an abstract graph (embedding dropped).
/// Index i corresponds to labels[i]; supports up to 64 vertices.
struct SimpleGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;
    std::vector<Vertex> labels;

    static SimpleGraph from(const PlaneGraph& g);
    static SimpleGraph with_vertices(int n);

    bool has_edge(int i, int j) const { return (adj[i] >> j) & 1U; }
    void add_edge(int i, int j) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
    }
    int degree(int i) const;
    int num_edges() const;
};

/// Canonical labelling by colour refinement plus individualisation; two
/// graphs are isomorphic iff their forms are equal.
using CanonicalForm = std::vector<std::uint64_t>;
CanonicalForm canonical_form(const SimpleGraph& g);
CanonicalForm canonical_form(const PlaneGraph& g);

/// Abstract-graph isomorphism for graphs with at most 12 vertices.
bool isomorphic_small(const PlaneGraph& g, const PlaneGraph& h);

/// Enumerates isomorphisms a -> b (mapping[i] = image of vertex i) until
/// `visit` returns true. Optional per-vertex colours must be preserved.
void for_each_isomorphism(const SimpleGraph& a, const SimpleGraph& b,
                          const std::function<bool(const std::vector<int>&)>& visit,
                          const std::vector<int>& a_colour = {},
                          const std::vector<int>& b_colour = {});

}  // namespace trifree
