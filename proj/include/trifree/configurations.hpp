#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "trifree/plane_graph.hpp"

namespace trifree {

enum class ConfigKind { C1, C2, C3, C4, C5 };

/// A vertex of degree at most two.
struct ConfC1 {
    Vertex v = 0;
    friend bool operator==(const ConfC1&, const ConfC1&) = default;
};

/// A degree-3 vertex v with neighbours u, w, w2 and no path of length 3
/// between w and w2 (w < w2).
struct ConfC2 {
    Vertex v = 0, u = 0, w = 0, w2 = 0;
    friend bool operator==(const ConfC2&, const ConfC2&) = default;
};

/// A 4-face v1 v2 v3 v4 with deg(v1) = deg(v3) = 3.
struct ConfC3 {
    std::array<Vertex, 4> face{};
    friend bool operator==(const ConfC3&, const ConfC3&) = default;
};

/// A 5-face v1..v5 with deg(v1..v4) = 3; outside[i] is the neighbour of
/// face[i] off the face.
struct ConfC4 {
    std::array<Vertex, 5> face{};
    std::array<Vertex, 4> outside{};
    friend bool operator==(const ConfC4&, const ConfC4&) = default;
};

/// A 4-face v1 v2 v3 v4 with deg(v1) = deg(v2) = 3.
struct ConfC5 {
    std::array<Vertex, 4> face{};
    friend bool operator==(const ConfC5&, const ConfC5&) = default;
};

using Configuration = std::variant<ConfC1, ConfC2, ConfC3, ConfC4, ConfC5>;

ConfigKind kind_of(const Configuration& c);
std::string kind_name(ConfigKind k);

/// `KIND v=... roles=...`
std::string to_string(const Configuration& c);

std::vector<Configuration> find_c1(const PlaneGraph& g);
std::vector<Configuration> find_c2(const PlaneGraph& g);
std::vector<Configuration> find_c3(const PlaneGraph& g);
std::vector<Configuration> find_c4(const PlaneGraph& g);
std::vector<Configuration> find_c5(const PlaneGraph& g);

/// Every instance of every kind, in kind order.
std::vector<Configuration> find_all(const PlaneGraph& g);

/// First instance in the order C1, C2, C3, C4, C5. Throws InvariantError
/// ("NONE_FOUND") when there is none, which cannot happen for a nonempty
/// plane triangle-free graph.
Configuration find_any(const PlaneGraph& g);

/// Re-checks every side condition of `c` against `g`.
bool holds(const PlaneGraph& g, const Configuration& c);

/// Converts a C5 into a C2 at v1 (diagonal v2,v4) or at v2 (diagonal v1,v3).
ConfC2 c5_to_c2(const PlaneGraph& g, const ConfC5& c);

/// Vertices that must avoid the outer cycle for the configuration not to interfere.
VertexSet interference_set(const Configuration& c);
bool interferes(const Configuration& c, const VertexSet& outer_vertices);
bool interferes(const Configuration& c, const Face& outer);

/// Vertices whose neighbourhood the configuration inspects (used for
/// locating configurations near a given element).
VertexSet role_vertices(const Configuration& c);

}  // namespace trifree
