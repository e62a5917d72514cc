#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trifree {

using Vertex = int;
using VertexSet = std::set<Vertex>;

/// Malformed or invalid input (bad file, asymmetric rotation, non-planar rotation, ...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A property that should hold by construction did not; indicates a bug or
/// an input that silently violates a theorem's hypotheses.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Dart {
    Vertex tail = 0;
    Vertex head = 0;

    Dart reversed() const { return {head, tail}; }
    friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Cyclic clockwise neighbour order at every vertex.
using Rotation = std::map<Vertex, std::vector<Vertex>>;

/// A face walk, normalised to start at its lexicographically smallest dart.
struct Face {
    std::vector<Dart> walk;

    std::size_t length() const { return walk.size(); }
    /// Tails of the walk in order (may repeat for non-2-connected boundaries).
    std::vector<Vertex> boundary() const;
    VertexSet vertex_set() const;
    bool contains(Vertex v) const;
    bool contains_edge(Vertex a, Vertex b) const;
    /// True iff the walk visits pairwise distinct vertices and has length >= 3.
    bool is_cycle() const;

    friend bool operator==(const Face&, const Face&) = default;
};

/// A simple cycle given by its vertex sequence (consecutive entries adjacent,
/// last adjacent to first).
using Cycle = std::vector<Vertex>;
using Path = std::vector<Vertex>;

/// A combinatorial plane graph: a rotation system with an optional
/// designated outer face. Immutable once constructed; the constructor
/// validates simplicity, symmetry and genus 0 per connected component.
class PlaneGraph {
public:
    PlaneGraph() = default;
    explicit PlaneGraph(Rotation rotation, std::optional<Dart> outer = std::nullopt,
                        Vertex next_label = 0);

    const Rotation& rotation() const { return rotation_; }
    std::vector<Vertex> vertices() const;
    std::size_t num_vertices() const { return rotation_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    bool empty() const { return rotation_.empty(); }

    bool has_vertex(Vertex v) const { return rotation_.count(v) != 0; }
    int degree(Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const;
    bool adjacent(Vertex a, Vertex b) const;
    /// Edges as (min, max) pairs in ascending order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Neighbour following `from` in the rotation at `at`.
    Vertex successor(Vertex at, Vertex from) const;
    Vertex predecessor(Vertex at, Vertex from) const;

    /// Smallest label strictly greater than every label ever used in this
    /// graph's history; fresh vertices are drawn from here.
    Vertex next_label() const { return next_label_; }

    const std::vector<Face>& faces() const { return faces_; }
    /// Index into faces() of the face containing the dart.
    std::size_t face_of(Dart d) const;
    /// Index of a face with the same walk, if any.
    std::optional<std::size_t> find_face(const Face& f) const;

    bool has_outer_face() const { return outer_.has_value(); }
    std::optional<Dart> outer_dart() const { return outer_; }
    const Face& outer_face() const;
    std::optional<std::size_t> outer_face_index() const;

    /// Vertex sets of the connected components, ordered by smallest vertex.
    std::vector<VertexSet> components() const;
    bool connected() const { return components().size() <= 1; }

    /// Same rotation restricted to `keep` (sub-rotations preserve cyclic order).
    PlaneGraph induced(const VertexSet& keep) const;

    friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
        return a.rotation_ == b.rotation_ && a.outer_ == b.outer_;
    }

private:
    void validate() const;
    void trace_faces();

    Rotation rotation_;
    std::optional<Dart> outer_;
    Vertex next_label_ = 1;
    std::size_t num_edges_ = 0;
    std::vector<Face> faces_;
    std::map<Dart, std::size_t> dart_face_;
};

/// Checks V - E + F = 2 on every connected component of a rotation system.
/// Does not check symmetry or simplicity.
bool is_genus_zero(const Rotation& rotation);

bool is_triangle_free(const PlaneGraph& g);

/// All simple paths from a to b with exactly `length` edges whose interior
/// avoids `forbidden`; lexicographic order of vertex sequences.
std::vector<Path> paths_between(const PlaneGraph& g, Vertex a, Vertex b, int length,
                                const VertexSet& forbidden = {});

/// Every simple cycle with at most `max_len` edges, once each: the sequence
/// starts at its smallest vertex and the second entry is smaller than the last.
std::vector<Cycle> cycles_up_to(const PlaneGraph& g, int max_len);

bool is_cycle_of(const PlaneGraph& g, const Cycle& c);

/// The same rotation system with `f` as the outer face.
PlaneGraph re_embed(const PlaneGraph& g, const Face& f);

struct DiskSubgraph {
    Cycle cycle;
    PlaneGraph subgraph;
};

/// The subgraph drawn in the closed disk bounded by `c`, on the side away
/// from the designated outer face. The result has `c` as its outer face.
DiskSubgraph disk_subgraph(const PlaneGraph& g, const Cycle& c);

/// True iff the cycle is exactly the boundary of face `f` (as an edge set).
bool cycle_bounds_face(const Cycle& c, const Face& f);

std::string to_string(const VertexSet& s);

}  // namespace trifree
