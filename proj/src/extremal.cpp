#include "trifree/extremal.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "trifree/fixtures.hpp"
#include "trifree/isomorphism.hpp"
#include "trifree/reductions.hpp"
#include "trifree/verify.hpp"

namespace trifree {

std::string terminal_name(Terminal t) {
    switch (t) {
        case Terminal::P2: return "P2";
        case Terminal::C5: return "C5";
        case Terminal::NOT_MEMBER: break;
    }
    return "NOT_MEMBER";
}

std::string MembershipTrace::serialize() const {
    std::ostringstream os;
    for (const auto& s : steps)
        os << "replace " << to_string(s.diamond) << " -> path " << s.x1 << ' ' << s.v1 << ' '
           << s.v2 << ' ' << s.x2 << '\n';
    os << "terminal " << terminal_name(terminal) << '\n';
    return os.str();
}

namespace {

std::optional<Terminal> terminal_of(const PlaneGraph& g) {
    if (g.num_vertices() == 2 && g.num_edges() == 1) return Terminal::P2;
    if (g.num_vertices() == 5 && g.num_edges() == 5 && g.connected()) {
        const auto vs = g.vertices();
        if (std::all_of(vs.begin(), vs.end(), [&g](Vertex v) { return g.degree(v) == 2; }))
            return Terminal::C5;
    }
    return std::nullopt;
}

// Members other than P2 have n = 5 + 3k and m = 5 + 5k.
bool plausible(const PlaneGraph& g) {
    const auto n = static_cast<long>(g.num_vertices());
    const auto m = static_cast<long>(g.num_edges());
    return n >= 8 && (n - 5) % 3 == 0 && m == 5 + 5 * (n - 5) / 3 && g.connected();
}

bool search(const PlaneGraph& g, MembershipTrace& trace, std::set<CanonicalForm>& failed) {
    if (auto t = terminal_of(g)) {
        trace.terminal = *t;
        return true;
    }
    if (!plausible(g)) return false;
    const bool memo = g.num_vertices() <= 64;
    CanonicalForm key;
    if (memo) {
        key = canonical_form(g);
        if (failed.count(key)) return false;
    }
    for (const Diamond& d : find_diamonds(g)) {
        PathReplacement rep = replace_diamond_with_path(g, d);
        trace.steps.push_back({d, rep.x1, rep.v1, rep.v2, rep.x2});
        if (search(rep.graph, trace, failed)) return true;
        trace.steps.pop_back();
    }
    if (memo) failed.insert(std::move(key));
    return false;
}

struct Unwound {
    std::vector<DiamondLiftContext> contexts;
    PlaneGraph terminal;
};

Unwound unwind(const PlaneGraph& g, const MembershipTrace& trace) {
    if (!trace.member()) throw PreconditionError("trace does not certify membership");
    Unwound out;
    PlaneGraph cur = g;
    for (const auto& s : trace.steps) {
        if (!is_diamond(cur, s.diamond))
            throw PreconditionError("trace invalid: " + to_string(s.diamond) + " is not a diamond");
        DiamondReduction r = diamond_reduce(cur, s.diamond);
        const auto& c = r.context;
        if (c.x1 != s.x1 || c.v1 != s.v1 || c.v2 != s.v2 || c.x2 != s.x2)
            throw PreconditionError("trace invalid: path of " + to_string(s.diamond) + " differs");
        out.contexts.push_back(c);
        cur = std::move(r.reduced);
    }
    if (terminal_of(cur) != trace.terminal)
        throw PreconditionError("trace invalid: terminal is not " + terminal_name(trace.terminal));
    out.terminal = std::move(cur);
    return out;
}

}  // namespace

MembershipTrace is_member(const PlaneGraph& g) {
    MembershipTrace trace;
    std::set<CanonicalForm> failed;
    if (!search(g, trace, failed)) {
        trace.steps.clear();
        trace.terminal = Terminal::NOT_MEMBER;
    }
    return trace;
}

namespace {

// Renames the fresh diamond back to the traced labels so that earlier steps,
// whose paths may run through it, still apply.
PlaneGraph rename_diamond(const DiamondInsertion& ins, const Diamond& to) {
    const Diamond& from = ins.diamond;
    std::map<Vertex, Vertex> m{{from.u1, to.u1}, {from.z1, to.z1}, {from.z2, to.z2},
                               {from.u2, to.u2}, {from.w, to.w}};
    auto at = [&m](Vertex v) {
        const auto it = m.find(v);
        return it == m.end() ? v : it->second;
    };
    Rotation rot;
    Vertex top = ins.graph.next_label();
    for (const auto& [v, nbrs] : ins.graph.rotation()) {
        std::vector<Vertex> r;
        for (Vertex u : nbrs) r.push_back(at(u));
        rot[at(v)] = std::move(r);
        top = std::max(top, at(v) + 1);
    }
    std::optional<Dart> outer;
    if (const auto d = ins.graph.outer_dart()) outer = Dart{at(d->tail), at(d->head)};
    return PlaneGraph(std::move(rot), outer, top);
}

}  // namespace

PlaneGraph replay(const PlaneGraph& g, const MembershipTrace& trace) {
    Unwound u = unwind(g, trace);
    PlaneGraph cur = u.terminal;
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it)
        cur = rename_diamond(path_diamond_replacement(cur, {it->x1, it->v1, it->v2, it->x2}),
                             it->diamond);
    return cur;
}

PlaneGraph generate_member(int steps, std::uint64_t seed) {
    if (steps < 0) throw PreconditionError("steps must be non-negative");
    std::mt19937_64 rng(seed);
    PlaneGraph g = fixtures::c5();
    for (int i = 0; i < steps; ++i) {
        const auto paths = qualifying_paths(g);
        std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
        g = path_diamond_replacement(g, paths[pick(rng)]).graph;
    }
    return g;
}

VertexSet member_max_independent_set(const PlaneGraph& g, const MembershipTrace& trace) {
    Unwound u = unwind(g, trace);
    const Vertex first = u.terminal.vertices().front();
    VertexSet s{first};
    if (trace.terminal == Terminal::C5) {
        const Vertex a = u.terminal.neighbors(first).front();
        s.insert(u.terminal.successor(a, first));
    }
    for (auto it = u.contexts.rbegin(); it != u.contexts.rend(); ++it) s = diamond_lift(*it, s);
    if (3 * s.size() != g.num_vertices() + 1 || !is_independent(g, s))
        throw InvariantError("member set has the wrong size or is not independent");
    return s;
}

std::vector<Face> qualifying_faces(const PlaneGraph& g) {
    std::vector<Face> out;
    for (const Face& f : g.faces()) {
        const auto vs = f.vertex_set();
        if (std::all_of(vs.begin(), vs.end(), [&g](Vertex v) { return g.degree(v) > 2; }))
            out.push_back(f);
    }
    return out;
}

namespace {

// The 11-vertex member in fixtures::c5_ddagger() labels; each qualifying
// face paired with the unique size-4 independent set avoiding it.
struct BaseCase {
    VertexSet face;
    VertexSet set;
};
const BaseCase kBase[] = {
    {{1, 2, 6, 7, 9}, {3, 5, 8, 10}},
    {{1, 5, 6, 7, 8}, {2, 4, 9, 11}},
};

std::optional<VertexSet> base_case(const PlaneGraph& g, const VertexSet& fv) {
    static const PlaneGraph base_graph = fixtures::c5_ddagger();
    const SimpleGraph a = SimpleGraph::from(base_graph);
    const SimpleGraph b = SimpleGraph::from(g);
    std::optional<VertexSet> found;
    auto image = [&](const VertexSet& s, const std::vector<int>& map) {
        VertexSet out;
        for (Vertex v : s) {
            const auto i = std::find(a.labels.begin(), a.labels.end(), v) - a.labels.begin();
            out.insert(b.labels[map[i]]);
        }
        return out;
    };
    for_each_isomorphism(a, b, [&](const std::vector<int>& map) {
        for (const auto& bc : kBase) {
            if (image(bc.face, map) == fv) {
                found = image(bc.set, map);
                return true;
            }
        }
        return false;
    });
    return found;
}

std::optional<VertexSet> avoid(const PlaneGraph& g, const Face& f) {
    const VertexSet fv = f.vertex_set();
    if (g.num_vertices() < 11) return std::nullopt;
    if (g.num_vertices() == 11) return base_case(g, fv);
    for (const Diamond& d : find_diamonds(g)) {
        const VertexSet dv = d.vertex_set();
        if (std::any_of(dv.begin(), dv.end(), [&fv](Vertex v) { return fv.count(v) != 0; }))
            continue;
        for (const PathReplacement& p : path_placements(g, d)) {
            if (!p.graph.find_face(f)) continue;
            auto sub = avoid(p.graph, f);
            if (!sub) continue;
            return diamond_lift(diamond_reduce(g, d, p).context, *sub);
        }
    }
    return std::nullopt;
}

}  // namespace

VertexSet avoiding_independent_set(const PlaneGraph& g, const Face& f) {
    if (!g.find_face(f)) throw PreconditionError("not a face of the graph");
    for (Vertex v : f.vertex_set())
        if (g.degree(v) <= 2)
            throw PreconditionError("face is incident with vertex " + std::to_string(v) +
                                    " of degree " + std::to_string(g.degree(v)));
    if (!is_member(g).member()) throw PreconditionError("graph is not a member of the class");
    auto s = avoid(g, f);
    if (!s) throw InvariantError("no diamond avoiding the face leads to the base case");
    const VertexSet fv = f.vertex_set();
    for (Vertex v : *s)
        if (fv.count(v)) throw InvariantError("avoiding set meets the face at " + std::to_string(v));
    if (3 * s->size() != g.num_vertices() + 1 || !is_independent(g, *s))
        throw InvariantError("avoiding set has the wrong size or is not independent");
    return *s;
}

}  // namespace trifree
