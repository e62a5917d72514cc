#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "trifree/configurations.hpp"
#include "trifree/plane_graph.hpp"

namespace trifree {

using Charge = boost::rational<std::int64_t>;

/// A vertex (by label) or a face (by index into PlaneGraph::faces()).
struct Element {
    enum class Kind { Vertex, Face };
    Kind kind = Kind::Vertex;
    int id = 0;

    static Element vertex(Vertex v) { return {Kind::Vertex, v}; }
    static Element face(std::size_t i) { return {Kind::Face, static_cast<int>(i)}; }
    friend auto operator<=>(const Element&, const Element&) = default;
};
/// `v<label>` or `f<index>`.
std::string to_string(const Element& e);
std::string to_string(const Charge& c);

struct Transfer {
    int rule = 0;
    Element source, target;
    Charge amount;
};

struct ChargeLedger {
    std::map<Element, Charge> initial;
    std::vector<Transfer> transfers;
    std::map<Element, Charge> final;

    Charge total_initial() const;
    Charge total_final() const;
    /// `R<k> <src> -> <dst> <p>/<q>`
    static std::string format(const Transfer& t);
};

/// deg(v) - 4 and |f| - 4; `final` mirrors `initial`. Requires a connected graph.
ChargeLedger initial_charges(const PlaneGraph& g);

/// Applies rules 0..4 once per qualifying incidence. Requires a connected
/// graph whose designated outer face is bounded by a cycle of length <= 6.
ChargeLedger apply_rules(const PlaneGraph& g);

/// "cycle", "C6,c" or "C6,v" when `h`, with `outer` as its outer cycle, is
/// one of the exceptional disk graphs.
std::optional<std::string> exceptional_kind(const PlaneGraph& h, const Cycle& outer);

struct DangerousCycle {
    Cycle cycle;
    DiskSubgraph disk;
    std::string verdict_reason;
};

/// Cycles of length <= 6 not bounding the outer face whose disk graph is not
/// exceptional. Requires a connected graph with a cycle as outer boundary.
std::vector<DangerousCycle> dangerous_cycles(const PlaneGraph& g);

struct ChargeClaim {
    Element element;
    Charge final;
    Charge bound;
    bool exact = false;  // the outer face must keep its charge exactly
    bool holds = false;
};

struct AuditReport {
    std::vector<std::string> hypothesis_violations;
    std::optional<ChargeLedger> ledger;
    std::vector<ChargeClaim> claims;
    std::vector<Configuration> non_interfering;
    /// One line per violated claim naming a non-interfering configuration near it.
    std::vector<std::string> explanations;

    bool hypotheses_hold() const { return hypothesis_violations.empty(); }
    bool claims_hold() const;
    /// Hypotheses hold and some configuration avoids the outer face; also
    /// true when the hypotheses fail (nothing is claimed then).
    bool consistent() const;
    std::string to_string() const;
};

AuditReport audit(const PlaneGraph& g);

}  // namespace trifree
