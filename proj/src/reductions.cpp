#include "trifree/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "trifree/verify.hpp"

namespace trifree {

std::string ReductionStep::to_string() const {
    std::ostringstream os;
    os << kind_name(kind) << " removed=" << trifree::to_string(removed);
    if (identified)
        os << " identified=(" << identified->a << ',' << identified->b << ")->" << identified->merged;
    for (const auto& [a, b] : added_edges) os << " added=" << a << '-' << b;
    os << " k=" << gain_k;
    return os.str();
}

namespace {

std::vector<Vertex> starting_after(const std::vector<Vertex>& r, Vertex pivot) {
    auto it = std::find(r.begin(), r.end(), pivot);
    std::vector<Vertex> out(it + 1, r.end());
    out.insert(out.end(), r.begin(), it);
    return out;
}

std::vector<Vertex> filtered(const std::vector<Vertex>& r, const VertexSet& gone) {
    std::vector<Vertex> out;
    for (Vertex u : r)
        if (!gone.count(u)) out.push_back(u);
    return out;
}

Rotation delete_vertices(const Rotation& rot, const VertexSet& gone) {
    Rotation out;
    for (const auto& [v, nbrs] : rot)
        if (!gone.count(v)) out[v] = filtered(nbrs, gone);
    return out;
}

// Merges a and b into z. wa / wb are the rotations of a and b read from
// just after the removed path vertex, already filtered of deleted vertices.
// Parallel edges keep the copy coming from b.
void identify(Rotation& rot, Vertex a, const std::vector<Vertex>& wa, Vertex b,
              const std::vector<Vertex>& wb, Vertex z) {
    const VertexSet from_b(wb.begin(), wb.end());
    std::vector<Vertex> merged;
    for (Vertex x : wa) {
        if (from_b.count(x)) {
            auto& rx = rot[x];
            rx.erase(std::find(rx.begin(), rx.end(), a));
        } else {
            merged.push_back(x);
            std::replace(rot[x].begin(), rot[x].end(), a, z);
        }
    }
    for (Vertex x : wb) {
        merged.push_back(x);
        std::replace(rot[x].begin(), rot[x].end(), b, z);
    }
    rot.erase(a);
    rot.erase(b);
    rot[z] = std::move(merged);
}

std::size_t slot_of(const std::vector<Vertex>& original, Vertex removed, const VertexSet& gone) {
    std::size_t slot = 0;
    for (Vertex u : original) {
        if (u == removed) return slot;
        if (!gone.count(u)) ++slot;
    }
    return slot;
}

VertexSet closed_neighborhood(const PlaneGraph& g, Vertex v) {
    VertexSet s(g.neighbors(v).begin(), g.neighbors(v).end());
    s.insert(v);
    return s;
}

Reduction finish(const PlaneGraph& g, const Configuration& c, Rotation rot, VertexSet removed,
                 std::optional<Identification> ident,
                 std::vector<std::pair<Vertex, Vertex>> added, int k, Vertex next_label) {
    PlaneGraph reduced(std::move(rot), std::nullopt, next_label);
    if (!is_triangle_free(reduced))
        throw InvariantError("reduction of " + to_string(c) + " created a triangle");
    ReductionStep step;
    step.kind = kind_of(c);
    step.config = c;
    step.removed = std::move(removed);
    step.identified = ident;
    step.added_edges = std::move(added);
    step.gain_k = k;
    step.host_size_before = g.num_vertices();
    step.host_size_after = reduced.num_vertices();
    step.host = std::make_shared<const PlaneGraph>(g);
    step.reduced = std::make_shared<const PlaneGraph>(reduced);
    return Reduction{std::move(reduced), std::move(step)};
}

Reduction reduce_c2(const PlaneGraph& g, const ConfC2& c) {
    const VertexSet gone{c.u, c.v};
    const Vertex z = g.next_label();
    auto wa = filtered(starting_after(g.neighbors(c.w), c.v), gone);
    auto wb = filtered(starting_after(g.neighbors(c.w2), c.v), gone);
    Rotation rot = delete_vertices(g.rotation(), gone);
    identify(rot, c.w, wa, c.w2, wb, z);
    return finish(g, c, std::move(rot), {c.u, c.v, c.w, c.w2}, Identification{c.w, c.w2, z}, {}, 1,
                  z + 1);
}

Reduction reduce_c4(const PlaneGraph& g, const ConfC4& c) {
    const auto& [v1, v2, v3, v4, v5] = c.face;
    const auto& [u1, u2, u3, u4] = c.outside;
    const VertexSet gone(c.face.begin(), c.face.end());
    const Vertex z = g.next_label();

    auto wa = filtered(starting_after(g.neighbors(u2), v2), gone);
    auto wb = filtered(starting_after(g.neighbors(u3), v3), gone);
    Rotation base = delete_vertices(g.rotation(), gone);
    identify(base, u2, wa, u3, wb, z);
    if (!is_genus_zero(base))
        throw InvariantError("identification in " + to_string(c) + " broke planarity");

    const auto& r1 = base.at(u1);
    const auto& r4 = base.at(u4);
    std::vector<std::size_t> slots1{slot_of(g.neighbors(u1), v1, gone)};
    std::vector<std::size_t> slots4{slot_of(g.neighbors(u4), v4, gone)};
    for (std::size_t i = 0; i < std::max<std::size_t>(r1.size(), 1); ++i) slots1.push_back(i);
    for (std::size_t i = 0; i < std::max<std::size_t>(r4.size(), 1); ++i) slots4.push_back(i);
    for (std::size_t s1 : slots1) {
        for (std::size_t s4 : slots4) {
            Rotation rot = base;
            auto& a = rot[u1];
            a.insert(a.begin() + static_cast<long>(std::min(s1, a.size())), u4);
            auto& b = rot[u4];
            b.insert(b.begin() + static_cast<long>(std::min(s4, b.size())), u1);
            if (!is_genus_zero(rot)) continue;
            VertexSet removed(c.face.begin(), c.face.end());
            removed.insert({u2, u3});
            return finish(g, c, std::move(rot), std::move(removed), Identification{u2, u3, z},
                          {{std::min(u1, u4), std::max(u1, u4)}}, 2, z + 1);
        }
    }
    (void)v5;
    throw InvariantError("no planar position for the added edge in " + to_string(c));
}

}  // namespace

Reduction reduce(const PlaneGraph& g, const Configuration& c) {
    if (kind_of(c) == ConfigKind::C5)
        throw PreconditionError("C5 has no reduction of its own; convert with c5_to_c2 first");
    if (!holds(g, c)) throw PreconditionError("stale configuration: " + to_string(c));

    if (const auto* c1 = std::get_if<ConfC1>(&c)) {
        VertexSet gone = closed_neighborhood(g, c1->v);
        return finish(g, c, delete_vertices(g.rotation(), gone), gone, std::nullopt, {}, 1,
                      g.next_label());
    }
    if (const auto* c2 = std::get_if<ConfC2>(&c)) return reduce_c2(g, *c2);
    if (const auto* c3 = std::get_if<ConfC3>(&c)) {
        VertexSet gone(c3->face.begin(), c3->face.end());
        for (Vertex v : {c3->face[0], c3->face[2]}) {
            VertexSet n = closed_neighborhood(g, v);
            gone.insert(n.begin(), n.end());
        }
        return finish(g, c, delete_vertices(g.rotation(), gone), gone, std::nullopt, {}, 2,
                      g.next_label());
    }
    return reduce_c4(g, std::get<ConfC4>(c));
}

namespace {

bool acceptable(const PlaneGraph& host, const VertexSet& s, std::size_t expected) {
    return s.size() == expected && is_independent(host, s);
}

[[noreturn]] void lift_failure(const ReductionStep& step, const VertexSet& candidate) {
    auto bad = independence_violation(*step.host, candidate);
    std::ostringstream os;
    os << "lift of " << step.to_string() << " failed: candidate " << to_string(candidate);
    if (bad) os << " contains edge " << bad->first << '-' << bad->second;
    else os << " has the wrong size";
    throw InvariantError(os.str());
}

}  // namespace

LiftOutcome lift_detailed(const ReductionStep& step, const VertexSet& reduced_set) {
    if (!step.host || !step.reduced) throw PreconditionError("reduction step has no graphs attached");
    if (!is_independent(*step.reduced, reduced_set))
        throw PreconditionError("set is not independent in the reduced graph");
    const std::size_t expected = reduced_set.size() + static_cast<std::size_t>(step.gain_k);
    const PlaneGraph& host = *step.host;
    auto with = [&reduced_set](std::initializer_list<Vertex> extra, std::optional<Vertex> drop) {
        VertexSet s = reduced_set;
        if (drop) s.erase(*drop);
        s.insert(extra);
        return s;
    };

    VertexSet candidate;
    switch (step.kind) {
        case ConfigKind::C1:
            candidate = with({std::get<ConfC1>(step.config).v}, std::nullopt);
            break;
        case ConfigKind::C2: {
            const auto& c = std::get<ConfC2>(step.config);
            const Vertex z = step.identified->merged;
            candidate = reduced_set.count(z) ? with({c.w, c.w2}, z) : with({c.v}, std::nullopt);
            break;
        }
        case ConfigKind::C3: {
            const auto& c = std::get<ConfC3>(step.config);
            candidate = with({c.face[0], c.face[2]}, std::nullopt);
            break;
        }
        case ConfigKind::C4: {
            auto c = std::get<ConfC4>(step.config);
            // u1u4 is an edge of the reduced graph, so reflecting the labelling
            // makes u1 absent from the set.
            if (reduced_set.count(c.outside[0])) {
                c.face = {c.face[3], c.face[2], c.face[1], c.face[0], c.face[4]};
                c.outside = {c.outside[3], c.outside[2], c.outside[1], c.outside[0]};
            }
            const auto& [v1, v2, v3, v4, v5] = c.face;
            const auto& [u1, u2, u3, u4] = c.outside;
            const Vertex z = step.identified->merged;
            if (!reduced_set.count(z)) {
                candidate = with({v1, v3}, std::nullopt);
                break;
            }
            VertexSet printed = with({v1, u3, u4}, z);
            if (acceptable(host, printed, expected)) return {printed, false};
            candidate = with({v1, u2, u3}, z);
            if (acceptable(host, candidate, expected)) return {candidate, true};
            lift_failure(step, candidate);
        }
        case ConfigKind::C5:
            throw PreconditionError("C5 steps do not exist");
    }
    if (!acceptable(host, candidate, expected)) lift_failure(step, candidate);
    return {candidate, false};
}

VertexSet lift(const ReductionStep& step, const VertexSet& reduced_set) {
    return lift_detailed(step, reduced_set).set;
}

DiamondReduction diamond_reduce(const PlaneGraph& g, const Diamond& d) {
    return diamond_reduce(g, d, replace_diamond_with_path(g, d));
}

DiamondReduction diamond_reduce(const PlaneGraph& g, const Diamond& d,
                                const PathReplacement& placement) {
    if (!is_diamond(g, d)) throw PreconditionError("not a diamond: " + to_string(d));
    DiamondLiftContext ctx{std::make_shared<const PlaneGraph>(g),
                           std::make_shared<const PlaneGraph>(placement.graph),
                           d,
                           placement.x1,
                           placement.v1,
                           placement.v2,
                           placement.x2};
    return DiamondReduction{placement.graph, std::move(ctx)};
}

VertexSet diamond_lift(const DiamondLiftContext& ctx, const VertexSet& reduced_set) {
    if (!is_independent(*ctx.reduced, reduced_set))
        throw PreconditionError("set is not independent in the reduced graph");
    VertexSet s = reduced_set;
    s.insert(ctx.diamond.z2);
    if (s.erase(ctx.v1)) s.insert(ctx.diamond.u1);
    if (s.erase(ctx.v2)) s.insert(ctx.diamond.w);
    if (s.size() != reduced_set.size() + 1 || !is_independent(*ctx.host, s)) {
        auto bad = independence_violation(*ctx.host, s);
        throw InvariantError("diamond lift failed for " + to_string(ctx.diamond) +
                             (bad ? " at edge " + std::to_string(bad->first) + "-" +
                                        std::to_string(bad->second)
                                  : std::string(" (size)")));
    }
    return s;
}

VertexSet diamond_project(const PlaneGraph& g, const Diamond& d, const VertexSet& s) {
    if (!is_diamond(g, d)) throw PreconditionError("not a diamond: " + to_string(d));
    if (!is_independent(g, s)) throw PreconditionError("set is not independent");

    VertexSet maximal = s;
    for (Vertex v : g.vertices()) {
        if (maximal.count(v)) continue;
        bool free = std::none_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                                 [&](Vertex u) { return maximal.count(u) != 0; });
        if (free) maximal.insert(v);
    }

    Diamond dd = d;
    if (maximal.count(dd.u1) && maximal.count(dd.u2)) {
        maximal.erase(dd.u2);
        maximal.insert(dd.z2);
    }
    if (!maximal.count(dd.z2)) dd = dd.mirrored();
    if (!maximal.count(dd.z2))
        throw InvariantError("maximal independent set misses both z1 and z2 of " + to_string(d));

    const PathReplacement rep = replace_diamond_with_path(g, d);
    VertexSet out = maximal;
    out.erase(dd.z2);
    if (out.erase(dd.u1)) out.insert(rep.v1);
    if (out.erase(dd.w)) out.insert(rep.v2);
    if (out.size() + 1 != maximal.size() || !is_independent(rep.graph, out))
        throw InvariantError("diamond projection produced an invalid set");
    return out;
}

bool check_tight(const PlaneGraph& g, int alpha) {
    // Any PlaneGraph is planar by construction.
    return is_triangle_free(g) && 3 * alpha <= static_cast<int>(g.num_vertices()) + 1;
}

}  // namespace trifree
