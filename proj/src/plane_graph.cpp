#include "trifree/plane_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace trifree {

std::vector<Vertex> Face::boundary() const {
    std::vector<Vertex> out;
    out.reserve(walk.size());
    for (const Dart& d : walk) out.push_back(d.tail);
    return out;
}

VertexSet Face::vertex_set() const {
    VertexSet out;
    for (const Dart& d : walk) out.insert(d.tail);
    return out;
}

bool Face::contains(Vertex v) const {
    return std::any_of(walk.begin(), walk.end(), [v](const Dart& d) { return d.tail == v; });
}

bool Face::contains_edge(Vertex a, Vertex b) const {
    return std::any_of(walk.begin(), walk.end(), [a, b](const Dart& d) {
        return (d.tail == a && d.head == b) || (d.tail == b && d.head == a);
    });
}

bool Face::is_cycle() const {
    if (walk.size() < 3) return false;
    return vertex_set().size() == walk.size();
}

PlaneGraph::PlaneGraph(Rotation rotation, std::optional<Dart> outer, Vertex next_label)
    : rotation_(std::move(rotation)), outer_(outer) {
    std::size_t darts = 0;
    Vertex max_id = 0;
    for (const auto& [v, nbrs] : rotation_) {
        darts += nbrs.size();
        max_id = std::max(max_id, v);
    }
    num_edges_ = darts / 2;
    next_label_ = std::max({next_label, max_id + 1, Vertex{1}});
    validate();
    trace_faces();
    if (outer_ && !adjacent(outer_->tail, outer_->head))
        throw InputError("outer face dart is not an edge");
}

void PlaneGraph::validate() const {
    for (const auto& [v, nbrs] : rotation_) {
        std::vector<Vertex> sorted = nbrs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("parallel edge at vertex " + std::to_string(v));
        for (Vertex u : nbrs) {
            if (u == v) throw InputError("loop at vertex " + std::to_string(v));
            auto it = rotation_.find(u);
            if (it == rotation_.end())
                throw InputError("vertex " + std::to_string(v) + " lists unknown neighbour " +
                                 std::to_string(u));
            if (std::find(it->second.begin(), it->second.end(), v) == it->second.end())
                throw InputError("asymmetric rotation: " + std::to_string(v) + " lists " +
                                 std::to_string(u) + " but not conversely");
        }
    }
    if (!is_genus_zero(rotation_))
        throw InputError("rotation system is not planar (Euler characteristic != 2)");
}

namespace {

Vertex rotation_successor(const Rotation& rot, Vertex at, Vertex from) {
    const auto& nbrs = rot.at(at);
    auto it = std::find(nbrs.begin(), nbrs.end(), from);
    if (it == nbrs.end()) throw PreconditionError("not adjacent");
    ++it;
    return it == nbrs.end() ? nbrs.front() : *it;
}

}  // namespace

void PlaneGraph::trace_faces() {
    std::vector<Dart> all;
    all.reserve(2 * num_edges_);
    for (const auto& [v, nbrs] : rotation_)
        for (Vertex u : nbrs) all.push_back({v, u});
    std::sort(all.begin(), all.end());
    for (const Dart& start : all) {
        if (dart_face_.count(start)) continue;
        Face f;
        Dart d = start;
        do {
            f.walk.push_back(d);
            dart_face_[d] = faces_.size();
            d = Dart{d.head, rotation_successor(rotation_, d.head, d.tail)};
        } while (d != start);
        faces_.push_back(std::move(f));
    }
}

std::vector<Vertex> PlaneGraph::vertices() const {
    std::vector<Vertex> out;
    out.reserve(rotation_.size());
    for (const auto& entry : rotation_) out.push_back(entry.first);
    return out;
}

int PlaneGraph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

const std::vector<Vertex>& PlaneGraph::neighbors(Vertex v) const {
    auto it = rotation_.find(v);
    if (it == rotation_.end()) throw PreconditionError("unknown vertex " + std::to_string(v));
    return it->second;
}

bool PlaneGraph::adjacent(Vertex a, Vertex b) const {
    auto it = rotation_.find(a);
    if (it == rotation_.end()) return false;
    return std::find(it->second.begin(), it->second.end(), b) != it->second.end();
}

std::vector<std::pair<Vertex, Vertex>> PlaneGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& [v, nbrs] : rotation_)
        for (Vertex u : nbrs)
            if (v < u) out.emplace_back(v, u);
    std::sort(out.begin(), out.end());
    return out;
}

Vertex PlaneGraph::successor(Vertex at, Vertex from) const {
    return rotation_successor(rotation_, at, from);
}

Vertex PlaneGraph::predecessor(Vertex at, Vertex from) const {
    const auto& nbrs = neighbors(at);
    auto it = std::find(nbrs.begin(), nbrs.end(), from);
    if (it == nbrs.end()) throw PreconditionError("not adjacent");
    return it == nbrs.begin() ? nbrs.back() : *std::prev(it);
}

std::size_t PlaneGraph::face_of(Dart d) const {
    auto it = dart_face_.find(d);
    if (it == dart_face_.end()) throw PreconditionError("dart is not an edge of the graph");
    return it->second;
}

std::optional<std::size_t> PlaneGraph::find_face(const Face& f) const {
    if (f.walk.empty()) return std::nullopt;
    auto it = dart_face_.find(f.walk.front());
    if (it == dart_face_.end()) return std::nullopt;
    if (faces_[it->second] != f) return std::nullopt;
    return it->second;
}

const Face& PlaneGraph::outer_face() const {
    if (!outer_) throw PreconditionError("graph has no designated outer face");
    return faces_[face_of(*outer_)];
}

std::optional<std::size_t> PlaneGraph::outer_face_index() const {
    if (!outer_) return std::nullopt;
    return face_of(*outer_);
}

std::vector<VertexSet> PlaneGraph::components() const {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (const auto& entry : rotation_) {
        Vertex s = entry.first;
        if (seen.count(s)) continue;
        VertexSet comp;
        std::vector<Vertex> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (Vertex u : rotation_.at(v))
                if (seen.insert(u).second) stack.push_back(u);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

PlaneGraph PlaneGraph::induced(const VertexSet& keep) const {
    Rotation rot;
    for (Vertex v : keep) {
        auto& nbrs = rot[v];
        for (Vertex u : neighbors(v))
            if (keep.count(u)) nbrs.push_back(u);
    }
    return PlaneGraph(std::move(rot), std::nullopt, next_label_);
}

bool is_genus_zero(const Rotation& rotation) {
    // Union-find style component labelling, then per-component V, E, F.
    std::map<Vertex, Vertex> comp;
    for (const auto& entry : rotation) {
        if (comp.count(entry.first)) continue;
        std::vector<Vertex> stack{entry.first};
        comp[entry.first] = entry.first;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : rotation.at(v)) {
                if (!rotation.count(u)) return false;
                if (comp.emplace(u, entry.first).second) stack.push_back(u);
            }
        }
    }
    std::map<Vertex, long> vcount, dcount, fcount;
    for (const auto& [v, nbrs] : rotation) {
        ++vcount[comp[v]];
        dcount[comp[v]] += static_cast<long>(nbrs.size());
    }
    std::set<Dart> seen;
    for (const auto& [v, nbrs] : rotation) {
        for (Vertex u : nbrs) {
            Dart start{v, u};
            if (seen.count(start)) continue;
            Dart d = start;
            std::size_t guard = 0;
            do {
                if (!seen.insert(d).second) return false;
                const auto& at = rotation.at(d.head);
                auto it = std::find(at.begin(), at.end(), d.tail);
                if (it == at.end()) return false;
                ++it;
                d = Dart{d.head, it == at.end() ? at.front() : *it};
                if (++guard > 4 * rotation.size() * rotation.size() + 8) return false;
            } while (d != start);
            ++fcount[comp[v]];
        }
    }
    for (const auto& [root, n] : vcount) {
        long e = dcount[root] / 2;
        long f = e == 0 ? 1 : fcount[root];
        if (n - e + f != 2) return false;
    }
    return true;
}

bool is_triangle_free(const PlaneGraph& g) {
    for (const auto& [v, nbrs] : g.rotation()) {
        for (Vertex u : nbrs) {
            if (u <= v) continue;
            for (Vertex w : g.neighbors(u))
                if (w != v && g.adjacent(v, w)) return false;
        }
    }
    return true;
}

namespace {

void extend_paths(const PlaneGraph& g, Vertex b, int length, const VertexSet& forbidden,
                  std::vector<Vertex>& path, std::vector<Path>& out) {
    Vertex cur = path.back();
    const int edges_so_far = static_cast<int>(path.size()) - 1;
    std::vector<Vertex> nbrs = g.neighbors(cur);
    std::sort(nbrs.begin(), nbrs.end());
    for (Vertex next : nbrs) {
        if (edges_so_far + 1 == length) {
            if (next == b) {
                path.push_back(next);
                out.push_back(path);
                path.pop_back();
            }
            continue;
        }
        if (next == b || forbidden.count(next)) continue;
        if (std::find(path.begin(), path.end(), next) != path.end()) continue;
        path.push_back(next);
        extend_paths(g, b, length, forbidden, path, out);
        path.pop_back();
    }
}

void extend_cycles(const PlaneGraph& g, int max_len, std::vector<Vertex>& path,
                   std::vector<Cycle>& out) {
    const Vertex start = path.front();
    const Vertex cur = path.back();
    std::vector<Vertex> nbrs = g.neighbors(cur);
    std::sort(nbrs.begin(), nbrs.end());
    for (Vertex next : nbrs) {
        if (next == start) {
            if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
            continue;
        }
        if (next < start || static_cast<int>(path.size()) >= max_len) continue;
        if (std::find(path.begin(), path.end(), next) != path.end()) continue;
        path.push_back(next);
        extend_cycles(g, max_len, path, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<Path> paths_between(const PlaneGraph& g, Vertex a, Vertex b, int length,
                                const VertexSet& forbidden) {
    if (a == b) throw PreconditionError("paths_between needs distinct endpoints");
    if (length < 1 || length > 6) throw PreconditionError("path length must be in 1..6");
    std::vector<Path> out;
    if (!g.has_vertex(a) || !g.has_vertex(b)) return out;
    std::vector<Vertex> path{a};
    extend_paths(g, b, length, forbidden, path, out);
    return out;
}

std::vector<Cycle> cycles_up_to(const PlaneGraph& g, int max_len) {
    if (max_len > 6) throw PreconditionError("cycle enumeration is limited to length 6");
    std::vector<Cycle> out;
    for (Vertex s : g.vertices()) {
        std::vector<Vertex> path{s};
        extend_cycles(g, max_len, path, out);
    }
    return out;
}

bool is_cycle_of(const PlaneGraph& g, const Cycle& c) {
    if (c.size() < 3) return false;
    if (VertexSet(c.begin(), c.end()).size() != c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
    return true;
}

PlaneGraph re_embed(const PlaneGraph& g, const Face& f) {
    if (!g.find_face(f)) throw PreconditionError("face does not belong to this graph");
    return PlaneGraph(g.rotation(), f.walk.front(), g.next_label());
}

bool cycle_bounds_face(const Cycle& c, const Face& f) {
    if (!f.is_cycle() || f.length() != c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!f.contains_edge(c[i], c[(i + 1) % c.size()])) return false;
    return true;
}

DiskSubgraph disk_subgraph(const PlaneGraph& g, const Cycle& c) {
    if (!g.has_outer_face()) throw PreconditionError("disk_subgraph needs an outer face");
    if (!is_cycle_of(g, c)) throw PreconditionError("not a cycle of the graph");
    if (cycle_bounds_face(c, g.outer_face()))
        throw PreconditionError("cycle bounds the outer face");

    std::set<std::pair<Vertex, Vertex>> cycle_edges;
    for (std::size_t i = 0; i < c.size(); ++i) {
        Vertex a = c[i], b = c[(i + 1) % c.size()];
        cycle_edges.insert({std::min(a, b), std::max(a, b)});
    }

    const auto& faces = g.faces();
    std::vector<std::size_t> parent(faces.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : g.edges()) {
        if (cycle_edges.count({a, b})) continue;
        parent[find(g.face_of({a, b}))] = find(g.face_of({b, a}));
    }
    const std::size_t outside = find(*g.outer_face_index());
    const VertexSet comp = [&] {
        for (auto& s : g.components())
            if (s.count(c.front())) return s;
        return VertexSet{};
    }();
    if (!comp.count(g.outer_dart()->tail))
        throw PreconditionError("outer face lies in a different component than the cycle");

    VertexSet keep(c.begin(), c.end());
    std::set<std::pair<Vertex, Vertex>> keep_edges = cycle_edges;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (!comp.count(faces[i].walk.front().tail) || find(i) == outside) continue;
        for (const Dart& d : faces[i].walk) {
            keep.insert(d.tail);
            keep_edges.insert({std::min(d.tail, d.head), std::max(d.tail, d.head)});
        }
    }
    Rotation rot;
    for (Vertex v : keep) {
        auto& nbrs = rot[v];
        for (Vertex u : g.neighbors(v))
            if (keep_edges.count({std::min(u, v), std::max(u, v)})) nbrs.push_back(u);
    }
    std::optional<Dart> outer;
    for (std::size_t i = 0; i < c.size() && !outer; ++i) {
        Dart d{c[i], c[(i + 1) % c.size()]};
        for (Dart cand : {d, d.reversed()})
            if (find(g.face_of(cand)) == outside) {
                outer = cand;
                break;
            }
    }
    return DiskSubgraph{c, PlaneGraph(std::move(rot), outer, g.next_label())};
}

std::string to_string(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Vertex v : s) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace trifree
