#include "trifree/discharging.hpp"

#include <algorithm>
#include <sstream>

#include "trifree/fixtures.hpp"
#include "trifree/isomorphism.hpp"

namespace trifree {

std::string to_string(const Element& e) {
    return (e.kind == Element::Kind::Vertex ? "v" : "f") + std::to_string(e.id);
}

std::string to_string(const Charge& c) {
    return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

Charge ChargeLedger::total_initial() const {
    Charge s = 0;
    for (const auto& [e, c] : initial) s += c;
    return s;
}

Charge ChargeLedger::total_final() const {
    Charge s = 0;
    for (const auto& [e, c] : final) s += c;
    return s;
}

std::string ChargeLedger::format(const Transfer& t) {
    return "R" + std::to_string(t.rule) + " " + to_string(t.source) + " -> " +
           to_string(t.target) + " " + to_string(t.amount);
}

ChargeLedger initial_charges(const PlaneGraph& g) {
    if (!g.connected()) throw PreconditionError("discharging needs a connected graph");
    ChargeLedger l;
    for (Vertex v : g.vertices()) l.initial[Element::vertex(v)] = g.degree(v) - 4;
    for (std::size_t i = 0; i < g.faces().size(); ++i)
        l.initial[Element::face(i)] = static_cast<std::int64_t>(g.faces()[i].length()) - 4;
    l.final = l.initial;
    return l;
}

namespace {

const Face& checked_outer(const PlaneGraph& g) {
    if (!g.has_outer_face()) throw PreconditionError("no outer face designated");
    const Face& k = g.outer_face();
    if (!k.is_cycle() || k.length() > 6)
        throw PreconditionError("outer face is not bounded by a cycle of length at most 6");
    return k;
}

}  // namespace

ChargeLedger apply_rules(const PlaneGraph& g) {
    ChargeLedger l = initial_charges(g);
    const Face& outer = checked_outer(g);
    const VertexSet k_vertices = outer.vertex_set();
    const std::size_t outer_index = *g.outer_face_index();
    auto on_k = [&](Vertex v) { return k_vertices.count(v) != 0; };
    auto internal3 = [&](Vertex v) { return !on_k(v) && g.degree(v) == 3; };
    const Charge third(1, 3);
    auto send = [&l](int rule, Element from, Element to, Charge amount) {
        l.transfers.push_back({rule, from, to, amount});
        l.final[from] -= amount;
        l.final[to] += amount;
    };

    for (std::size_t fi = 0; fi < g.faces().size(); ++fi) {
        if (fi == outer_index) continue;
        const Face& f = g.faces()[fi];
        const VertexSet vs = f.vertex_set();
        const Element fe = Element::face(fi);

        for (Vertex v : vs)
            if (on_k(v) && g.degree(v) == 2) send(0, fe, Element::vertex(v), third);
        for (Vertex v : vs)
            if (internal3(v)) send(1, fe, Element::vertex(v), third);

        if (f.length() == 4) {
            const auto k = std::count_if(vs.begin(), vs.end(), on_k);
            if (k >= 1 && std::any_of(vs.begin(), vs.end(), internal3))
                for (Vertex v : vs)
                    if (on_k(v)) send(2, Element::vertex(v), fe, Charge(1, 3 * k));
        }

        if (f.length() == 5) {
            for (const Dart& d : f.walk) {
                if (!internal3(d.tail) || !internal3(d.head)) continue;
                const std::size_t other = g.face_of(d.reversed());
                if (other != fi && g.faces()[other].length() == 6)
                    send(3, Element::face(other), fe, third);
            }
            for (Vertex u : vs) {
                if (!internal3(u)) continue;
                for (Vertex v : g.neighbors(u))
                    if (!vs.count(v) && on_k(v)) send(4, Element::vertex(v), fe, third);
            }
        }
    }
    return l;
}

std::optional<std::string> exceptional_kind(const PlaneGraph& h, const Cycle& outer) {
    const VertexSet rim(outer.begin(), outer.end());
    if (h.num_vertices() == rim.size() && h.num_edges() == rim.size()) return "cycle";
    if (rim.size() != 6) return std::nullopt;

    const SimpleGraph b = SimpleGraph::from(h);
    std::vector<int> b_colour;
    for (Vertex v : b.labels) b_colour.push_back(rim.count(v) ? 1 : 0);
    const std::pair<const char*, PlaneGraph> candidates[] = {{"C6,c", fixtures::c6_chord()},
                                                             {"C6,v", fixtures::c6_hub()}};
    for (const auto& [name, model] : candidates) {
        if (model.num_vertices() != h.num_vertices() || model.num_edges() != h.num_edges()) continue;
        const SimpleGraph a = SimpleGraph::from(model);
        const VertexSet model_rim = model.outer_face().vertex_set();
        std::vector<int> a_colour;
        for (Vertex v : a.labels) a_colour.push_back(model_rim.count(v) ? 1 : 0);
        bool found = false;
        for_each_isomorphism(
            a, b, [&found](const std::vector<int>&) { return found = true; }, a_colour, b_colour);
        if (found) return std::string(name);
    }
    return std::nullopt;
}

std::vector<DangerousCycle> dangerous_cycles(const PlaneGraph& g) {
    if (!g.connected()) throw PreconditionError("dangerous-cycle search needs a connected graph");
    if (!g.has_outer_face()) throw PreconditionError("no outer face designated");
    const Face& outer = g.outer_face();
    if (!outer.is_cycle()) throw PreconditionError("outer face is not bounded by a cycle");

    std::vector<DangerousCycle> out;
    for (const Cycle& c : cycles_up_to(g, 6)) {
        if (cycle_bounds_face(c, outer)) continue;
        DiskSubgraph disk = disk_subgraph(g, c);
        if (exceptional_kind(disk.subgraph, c)) continue;
        std::ostringstream why;
        why << "disk has " << disk.subgraph.num_vertices() - c.size() << " interior vertices and "
            << disk.subgraph.num_edges() - c.size() << " non-cycle edges";
        if (c.size() == 6) why << "; not C6,c or C6,v";
        out.push_back({c, std::move(disk), why.str()});
    }
    return out;
}

bool AuditReport::claims_hold() const {
    return std::all_of(claims.begin(), claims.end(), [](const ChargeClaim& c) { return c.holds; });
}

bool AuditReport::consistent() const { return !hypotheses_hold() || !non_interfering.empty(); }

std::string AuditReport::to_string() const {
    std::ostringstream os;
    if (!hypotheses_hold()) {
        os << "hypotheses: FAILED\n";
        for (const auto& h : hypothesis_violations) os << "  " << h << '\n';
    } else {
        os << "hypotheses: ok\n";
    }
    if (ledger)
        os << "charge: initial " << trifree::to_string(ledger->total_initial()) << " final "
           << trifree::to_string(ledger->total_final()) << '\n';
    int violated = 0;
    for (const auto& c : claims) {
        if (c.holds) continue;
        ++violated;
        os << "  claim violated: " << trifree::to_string(c.element) << " final "
           << trifree::to_string(c.final) << (c.exact ? " != " : " < ")
           << trifree::to_string(c.bound) << '\n';
    }
    os << "claims: " << claims.size() - violated << "/" << claims.size() << " hold\n";
    for (const auto& e : explanations) os << "  " << e << '\n';
    os << "non-interfering configurations: " << non_interfering.size();
    if (!non_interfering.empty()) os << " (first: " << trifree::to_string(non_interfering.front()) << ")";
    os << '\n';
    return os.str();
}

AuditReport audit(const PlaneGraph& g) {
    AuditReport r;
    if (!g.connected()) r.hypothesis_violations.push_back("graph is disconnected");
    if (!is_triangle_free(g)) r.hypothesis_violations.push_back("graph contains a triangle");
    if (!g.has_outer_face()) {
        r.hypothesis_violations.push_back("no outer face designated");
        return r;
    }
    const Face& outer = g.outer_face();
    if (!outer.is_cycle() || outer.length() > 6) {
        r.hypothesis_violations.push_back("outer face is not bounded by a cycle of length <= 6");
        return r;
    }
    const Cycle k = outer.boundary();
    if (auto kind = exceptional_kind(g, k)) r.hypothesis_violations.push_back("graph is " + *kind);
    if (!g.connected()) return r;
    for (const auto& d : dangerous_cycles(g)) {
        std::ostringstream os;
        os << "dangerous cycle";
        for (Vertex v : d.cycle) os << ' ' << v;
        os << " (" << d.verdict_reason << ")";
        r.hypothesis_violations.push_back(os.str());
    }

    r.ledger = apply_rules(g);
    const VertexSet k_vertices = outer.vertex_set();
    const std::size_t outer_index = *g.outer_face_index();
    for (const auto& [e, final] : r.ledger->final) {
        ChargeClaim c{e, final, 0, false, false};
        if (e.kind == Element::Kind::Face && static_cast<std::size_t>(e.id) == outer_index) {
            c.bound = static_cast<std::int64_t>(k.size()) - 4;
            c.exact = true;
            c.holds = final == c.bound;
        } else {
            if (e.kind == Element::Kind::Vertex && k_vertices.count(e.id)) c.bound = Charge(-5, 3);
            c.holds = final >= c.bound;
        }
        r.claims.push_back(c);
    }

    for (const auto& c : find_all(g))
        if (!interferes(c, k_vertices)) r.non_interfering.push_back(c);

    for (const auto& c : r.claims) {
        if (c.holds) continue;
        VertexSet near;
        if (c.element.kind == Element::Kind::Vertex) {
            near.insert(c.element.id);
            for (Vertex u : g.neighbors(c.element.id)) near.insert(u);
        } else {
            near = g.faces()[static_cast<std::size_t>(c.element.id)].vertex_set();
        }
        std::string line = trifree::to_string(c.element) + ": ";
        auto hit = std::find_if(r.non_interfering.begin(), r.non_interfering.end(),
                                [&near](const Configuration& conf) {
                                    const VertexSet roles = role_vertices(conf);
                                    return std::any_of(roles.begin(), roles.end(),
                                                       [&near](Vertex v) { return near.count(v); });
                                });
        if (hit != r.non_interfering.end()) line += "nearby " + trifree::to_string(*hit);
        else if (!r.non_interfering.empty()) line += "no configuration touches it; elsewhere " +
                                                     trifree::to_string(r.non_interfering.front());
        else line += "no non-interfering configuration anywhere";
        r.explanations.push_back(line);
    }
    return r;
}

}  // namespace trifree
