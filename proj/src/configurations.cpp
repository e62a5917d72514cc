#include "trifree/configurations.hpp"

#include <algorithm>
#include <sstream>

namespace trifree {

ConfigKind kind_of(const Configuration& c) { return static_cast<ConfigKind>(c.index()); }

std::string kind_name(ConfigKind k) {
    static const char* names[] = {"C1", "C2", "C3", "C4", "C5"};
    return names[static_cast<int>(k)];
}

namespace {

template <std::size_t N>
std::string join(const std::array<Vertex, N>& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < N; ++i) os << (i ? "," : "") << a[i];
    return os.str();
}

Vertex third_neighbor(const PlaneGraph& g, Vertex v, Vertex a, Vertex b) {
    for (Vertex u : g.neighbors(v))
        if (u != a && u != b) return u;
    return 0;
}

// 4- and 5-faces bounded by cycles, each cycle once.
std::vector<std::vector<Vertex>> cycle_faces(const PlaneGraph& g, std::size_t len) {
    std::vector<std::vector<Vertex>> out;
    std::vector<VertexSet> seen;
    for (const Face& f : g.faces()) {
        if (f.length() != len || !f.is_cycle()) continue;
        VertexSet s = f.vertex_set();
        if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
        seen.push_back(s);
        out.push_back(f.boundary());
    }
    return out;
}

bool face_is_present(const PlaneGraph& g, const std::vector<Vertex>& cyc) {
    for (const Face& f : g.faces()) {
        if (f.length() != cyc.size() || !f.is_cycle()) continue;
        bool all = true;
        for (std::size_t i = 0; i < cyc.size() && all; ++i)
            all = f.contains_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
        if (all) return true;
    }
    return false;
}

bool c4_side_conditions(const PlaneGraph& g, const ConfC4& c) {
    const auto& [u1, u2, u3, u4] = c.outside;
    if (VertexSet{u1, u2, u3, u4}.size() != 4) return false;
    const VertexSet face(c.face.begin(), c.face.end());
    for (Vertex u : c.outside)
        if (face.count(u)) return false;
    if (g.adjacent(u1, u2) || g.adjacent(u3, u4)) return false;
    if (g.adjacent(u1, u4) || !paths_between(g, u1, u4, 2, face).empty()) return false;
    if (g.adjacent(u2, u3) || !paths_between(g, u2, u3, 3, face).empty()) return false;
    return true;
}

}  // namespace

std::string to_string(const Configuration& c) {
    std::ostringstream os;
    std::visit(
        [&os](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ConfC1>) {
                os << "C1 v=" << x.v;
            } else if constexpr (std::is_same_v<T, ConfC2>) {
                os << "C2 v=" << x.v << " roles=u:" << x.u << ",w:" << x.w << ",w':" << x.w2;
            } else if constexpr (std::is_same_v<T, ConfC3>) {
                os << "C3 v=" << join(x.face);
            } else if constexpr (std::is_same_v<T, ConfC4>) {
                os << "C4 v=" << join(x.face) << " roles=u:" << join(x.outside);
            } else {
                os << "C5 v=" << join(x.face);
            }
        },
        c);
    return os.str();
}

std::vector<Configuration> find_c1(const PlaneGraph& g) {
    std::vector<Configuration> out;
    for (Vertex v : g.vertices())
        if (g.degree(v) <= 2) out.push_back(ConfC1{v});
    return out;
}

std::vector<Configuration> find_c2(const PlaneGraph& g) {
    std::vector<Configuration> out;
    for (Vertex v : g.vertices()) {
        if (g.degree(v) != 3) continue;
        std::vector<Vertex> nb = g.neighbors(v);
        std::sort(nb.begin(), nb.end());
        for (int i = 0; i < 3; ++i) {
            const Vertex u = nb[i];
            const Vertex w = nb[i == 0 ? 1 : 0];
            const Vertex w2 = nb[i == 2 ? 1 : 2];
            if (paths_between(g, w, w2, 3).empty()) out.push_back(ConfC2{v, u, w, w2});
        }
    }
    return out;
}

std::vector<Configuration> find_c3(const PlaneGraph& g) {
    std::vector<Configuration> out;
    for (const auto& f : cycle_faces(g, 4)) {
        for (int s = 0; s < 2; ++s) {
            if (g.degree(f[s]) == 3 && g.degree(f[s + 2]) == 3)
                out.push_back(ConfC3{{f[s], f[s + 1], f[s + 2], f[(s + 3) % 4]}});
        }
    }
    return out;
}

std::vector<Configuration> find_c4(const PlaneGraph& g) {
    std::vector<Configuration> out;
    for (auto f : cycle_faces(g, 5)) {
        for (int orientation = 0; orientation < 2; ++orientation) {
            if (orientation == 1) std::reverse(f.begin(), f.end());
            for (int s = 0; s < 5; ++s) {
                ConfC4 c;
                for (int i = 0; i < 5; ++i) c.face[i] = f[(s + i) % 5];
                bool degrees = true;
                for (int i = 0; i < 4 && degrees; ++i) degrees = g.degree(c.face[i]) == 3;
                if (!degrees) continue;
                for (int i = 0; i < 4; ++i)
                    c.outside[i] =
                        third_neighbor(g, c.face[i], c.face[(i + 4) % 5], c.face[(i + 1) % 5]);
                if (c4_side_conditions(g, c)) out.push_back(c);
            }
        }
    }
    return out;
}

std::vector<Configuration> find_c5(const PlaneGraph& g) {
    std::vector<Configuration> out;
    for (const auto& f : cycle_faces(g, 4)) {
        for (int s = 0; s < 4; ++s) {
            if (g.degree(f[s]) == 3 && g.degree(f[(s + 1) % 4]) == 3)
                out.push_back(ConfC5{{f[s], f[(s + 1) % 4], f[(s + 2) % 4], f[(s + 3) % 4]}});
        }
    }
    return out;
}

std::vector<Configuration> find_all(const PlaneGraph& g) {
    std::vector<Configuration> out;
    for (auto finder : {find_c1, find_c2, find_c3, find_c4, find_c5}) {
        auto part = finder(g);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Configuration find_any(const PlaneGraph& g) {
    for (auto finder : {find_c1, find_c2, find_c3, find_c4, find_c5}) {
        auto part = finder(g);
        if (!part.empty()) return part.front();
    }
    throw InvariantError("NONE_FOUND: no reducible configuration in a graph with " +
                         std::to_string(g.num_vertices()) + " vertices");
}

bool holds(const PlaneGraph& g, const Configuration& c) {
    for (Vertex v : role_vertices(c))
        if (!g.has_vertex(v)) return false;
    return std::visit(
        [&g](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ConfC1>) {
                return g.degree(x.v) <= 2;
            } else if constexpr (std::is_same_v<T, ConfC2>) {
                if (g.degree(x.v) != 3) return false;
                for (Vertex n : {x.u, x.w, x.w2})
                    if (!g.adjacent(x.v, n)) return false;
                if (VertexSet{x.u, x.w, x.w2}.size() != 3) return false;
                return paths_between(g, x.w, x.w2, 3).empty();
            } else if constexpr (std::is_same_v<T, ConfC3>) {
                std::vector<Vertex> f(x.face.begin(), x.face.end());
                return face_is_present(g, f) && g.degree(x.face[0]) == 3 &&
                       g.degree(x.face[2]) == 3;
            } else if constexpr (std::is_same_v<T, ConfC4>) {
                std::vector<Vertex> f(x.face.begin(), x.face.end());
                if (!face_is_present(g, f)) return false;
                for (int i = 0; i < 4; ++i) {
                    if (g.degree(x.face[i]) != 3) return false;
                    if (x.outside[i] != third_neighbor(g, x.face[i], x.face[(i + 4) % 5],
                                                       x.face[(i + 1) % 5]))
                        return false;
                }
                return c4_side_conditions(g, x);
            } else {
                std::vector<Vertex> f(x.face.begin(), x.face.end());
                return face_is_present(g, f) && g.degree(x.face[0]) == 3 &&
                       g.degree(x.face[1]) == 3;
            }
        },
        c);
}

ConfC2 c5_to_c2(const PlaneGraph& g, const ConfC5& c) {
    if (!holds(g, c)) throw PreconditionError("stale C5 configuration");
    const auto [v1, v2, v3, v4] = c.face;
    auto at = [&g](Vertex v, Vertex a, Vertex b) {
        return ConfC2{v, third_neighbor(g, v, a, b), std::min(a, b), std::max(a, b)};
    };
    auto through_v1 = paths_between(g, v2, v4, 3);
    if (through_v1.empty()) return at(v1, v2, v4);
    auto through_v2 = paths_between(g, v1, v3, 3);
    if (through_v2.empty()) return at(v2, v1, v3);

    std::ostringstream os;
    os << "C5 " << to_string(Configuration{c})
       << ": both diagonals joined by length-3 paths (input not plane triangle-free?) witnesses";
    for (Vertex x : through_v1.front()) os << ' ' << x;
    os << " /";
    for (Vertex x : through_v2.front()) os << ' ' << x;
    throw InvariantError(os.str());
}

VertexSet interference_set(const Configuration& c) {
    return std::visit(
        [](const auto& x) -> VertexSet {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ConfC1>) {
                return {x.v};
            } else if constexpr (std::is_same_v<T, ConfC2>) {
                return {x.v, x.w, x.w2};
            } else if constexpr (std::is_same_v<T, ConfC3>) {
                return {x.face[0], x.face[2]};
            } else if constexpr (std::is_same_v<T, ConfC4>) {
                VertexSet s(x.outside.begin(), x.outside.end());
                s.insert(x.face.begin(), x.face.begin() + 4);
                return s;
            } else {
                return {x.face[0], x.face[1]};
            }
        },
        c);
}

bool interferes(const Configuration& c, const VertexSet& outer_vertices) {
    for (Vertex v : interference_set(c))
        if (outer_vertices.count(v)) return true;
    return false;
}

bool interferes(const Configuration& c, const Face& outer) {
    return interferes(c, outer.vertex_set());
}

VertexSet role_vertices(const Configuration& c) {
    return std::visit(
        [](const auto& x) -> VertexSet {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ConfC1>) {
                return {x.v};
            } else if constexpr (std::is_same_v<T, ConfC2>) {
                return {x.v, x.u, x.w, x.w2};
            } else if constexpr (std::is_same_v<T, ConfC4>) {
                VertexSet s(x.outside.begin(), x.outside.end());
                s.insert(x.face.begin(), x.face.end());
                return s;
            } else {
                return VertexSet(x.face.begin(), x.face.end());
            }
        },
        c);
}

}  // namespace trifree
