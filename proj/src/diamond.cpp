#include "trifree/diamond.hpp"

#include <algorithm>
#include <sstream>

namespace trifree {

std::string to_string(const Diamond& d) {
    std::ostringstream os;
    os << d.u1 << ' ' << d.z1 << ' ' << d.z2 << ' ' << d.u2 << ' ' << d.w;
    return os.str();
}

namespace {

Vertex other_neighbor(const PlaneGraph& g, Vertex v, Vertex not_this) {
    for (Vertex u : g.neighbors(v))
        if (u != not_this) return u;
    return 0;
}

std::vector<Vertex> sorted_neighbors(const PlaneGraph& g, Vertex v) {
    std::vector<Vertex> out = g.neighbors(v);
    std::sort(out.begin(), out.end());
    return out;
}

// Position at which an entry removed from `original` would sit in `reduced`.
std::size_t slot_of(const std::vector<Vertex>& original, Vertex removed,
                    const VertexSet& gone) {
    std::size_t slot = 0;
    for (Vertex u : original) {
        if (u == removed) return slot;
        if (!gone.count(u)) ++slot;
    }
    return slot;
}

std::vector<Vertex> without(const std::vector<Vertex>& r, const VertexSet& gone) {
    std::vector<Vertex> out;
    for (Vertex u : r)
        if (!gone.count(u)) out.push_back(u);
    return out;
}

}  // namespace

bool is_diamond(const PlaneGraph& g, const Diamond& d) {
    for (Vertex v : {d.u1, d.z1, d.z2, d.u2, d.w, d.x1, d.x2})
        if (!g.has_vertex(v)) return false;
    if (d.vertex_set().size() != 5) return false;
    if (d.vertex_set().count(d.x1) || d.vertex_set().count(d.x2) || d.x1 == d.x2) return false;
    const auto c = d.cycle();
    for (std::size_t i = 0; i < 5; ++i)
        if (!g.adjacent(c[i], c[(i + 1) % 5])) return false;
    if (!g.adjacent(d.x1, d.u1) || !g.adjacent(d.x1, d.u2) || !g.adjacent(d.x2, d.w)) return false;
    return g.degree(d.u1) == 3 && g.degree(d.u2) == 3 && g.degree(d.w) == 3 &&
           g.degree(d.z1) == 2 && g.degree(d.z2) == 2;
}

std::vector<Diamond> find_diamonds(const PlaneGraph& g) {
    std::vector<Diamond> out;
    for (Vertex z1 : g.vertices()) {
        if (g.degree(z1) != 2) continue;
        for (Vertex z2 : sorted_neighbors(g, z1)) {
            if (z2 <= z1 || g.degree(z2) != 2) continue;
            const Vertex u1 = other_neighbor(g, z1, z2);
            const Vertex u2 = other_neighbor(g, z2, z1);
            if (u1 == u2 || g.degree(u1) != 3 || g.degree(u2) != 3) continue;
            for (Vertex w : sorted_neighbors(g, u1)) {
                if (w == z1 || !g.adjacent(w, u2) || g.degree(w) != 3) continue;
                Vertex x1 = 0;
                for (Vertex c : g.neighbors(u1))
                    if (c != z1 && c != w) x1 = c;
                Vertex x2 = 0;
                for (Vertex c : g.neighbors(w))
                    if (c != u1 && c != u2) x2 = c;
                Diamond d{u1, z1, z2, u2, w, x1, x2};
                if (is_diamond(g, d)) out.push_back(d);
            }
        }
    }
    return out;
}

std::vector<PathReplacement> path_placements(const PlaneGraph& g, const Diamond& d) {
    if (!is_diamond(g, d)) throw PreconditionError("not a diamond: " + to_string(d));
    const VertexSet gone = d.vertex_set();
    Rotation base;
    for (const auto& [v, nbrs] : g.rotation())
        if (!gone.count(v)) base[v] = without(nbrs, gone);

    const Vertex v1 = g.next_label();
    const Vertex v2 = v1 + 1;
    const auto& r1 = base.at(d.x1);
    const auto& r2 = base.at(d.x2);

    std::vector<std::size_t> slots1{slot_of(g.neighbors(d.x1), d.u1, gone),
                                    slot_of(g.neighbors(d.x1), d.u2, gone)};
    for (std::size_t i = 0; i < std::max<std::size_t>(r1.size(), 1); ++i) slots1.push_back(i);
    std::vector<std::size_t> slots2{slot_of(g.neighbors(d.x2), d.w, gone)};
    for (std::size_t i = 0; i < std::max<std::size_t>(r2.size(), 1); ++i) slots2.push_back(i);

    std::vector<PathReplacement> out;
    std::vector<Rotation> seen;
    for (std::size_t s1 : slots1) {
        for (std::size_t s2 : slots2) {
            Rotation rot = base;
            auto& a = rot[d.x1];
            a.insert(a.begin() + static_cast<long>(std::min(s1, a.size())), v1);
            auto& b = rot[d.x2];
            b.insert(b.begin() + static_cast<long>(std::min(s2, b.size())), v2);
            rot[v1] = {d.x1, v2};
            rot[v2] = {v1, d.x2};
            if (!is_genus_zero(rot)) continue;
            if (std::find(seen.begin(), seen.end(), rot) != seen.end()) continue;
            seen.push_back(rot);
            out.push_back({PlaneGraph(std::move(rot), std::nullopt, v2 + 1), d.x1, v1, v2, d.x2});
        }
    }
    return out;
}

PathReplacement replace_diamond_with_path(const PlaneGraph& g, const Diamond& d) {
    auto all = path_placements(g, d);
    if (all.empty()) throw InvariantError("no planar placement for path replacing " + to_string(d));
    return std::move(all.front());
}

std::vector<Path> qualifying_paths(const PlaneGraph& g) {
    std::vector<Path> out;
    for (Vertex v1 : g.vertices()) {
        if (g.degree(v1) != 2) continue;
        for (Vertex v2 : g.neighbors(v1)) {
            if (g.degree(v2) != 2) continue;
            const Vertex x1 = other_neighbor(g, v1, v2);
            const Vertex x2 = other_neighbor(g, v2, v1);
            if (x1 == x2) continue;
            out.push_back({x1, v1, v2, x2});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

DiamondInsertion path_diamond_replacement(const PlaneGraph& g, const Path& path) {
    if (path.size() != 4) throw PreconditionError("path must be x1 v1 v2 x2");
    const Vertex x1 = path[0], v1 = path[1], v2 = path[2], x2 = path[3];
    for (Vertex v : path)
        if (!g.has_vertex(v)) throw PreconditionError("path vertex not in graph");
    if (VertexSet(path.begin(), path.end()).size() != 4 || !g.adjacent(x1, v1) ||
        !g.adjacent(v1, v2) || !g.adjacent(v2, x2))
        throw PreconditionError("not a path of the graph");
    if (g.degree(v1) != 2 || g.degree(v2) != 2)
        throw PreconditionError("path interior must have degree 2");

    const Vertex u1 = g.next_label(), z1 = u1 + 1, z2 = u1 + 2, u2 = u1 + 3, w = u1 + 4;
    const VertexSet gone{v1, v2};
    Rotation base;
    for (const auto& [v, nbrs] : g.rotation())
        if (!gone.count(v)) base[v] = nbrs;

    for (bool mirrored : {false, true}) {
        Rotation rot = base;
        auto& a = rot[x1];
        auto it = std::find(a.begin(), a.end(), v1);
        *it = mirrored ? u1 : u2;
        a.insert(it + 1, mirrored ? u2 : u1);
        std::replace(rot[x2].begin(), rot[x2].end(), v2, w);
        rot[u1] = {x1, z1, w};
        rot[z1] = {u1, z2};
        rot[z2] = {z1, u2};
        rot[u2] = {w, z2, x1};
        rot[w] = {u1, u2, x2};
        if (mirrored)
            for (Vertex v : {u1, u2, w}) std::reverse(rot[v].begin(), rot[v].end());
        if (!is_genus_zero(rot)) continue;
        return {PlaneGraph(std::move(rot), std::nullopt, w + 1), Diamond{u1, z1, z2, u2, w, x1, x2}};
    }
    throw InvariantError("diamond insertion produced no planar rotation");
}

}  // namespace trifree
