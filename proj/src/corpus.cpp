#include "trifree/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "trifree/configurations.hpp"
#include "trifree/embedding.hpp"
#include "trifree/extremal.hpp"
#include "trifree/fixtures.hpp"
#include "trifree/isomorphism.hpp"
#include "trifree/solver.hpp"

namespace trifree {

std::optional<CorpusSpec::Mode> parse_mode(const std::string& s) {
    if (s == "exhaustive") return CorpusSpec::Mode::Exhaustive;
    if (s == "random") return CorpusSpec::Mode::Random;
    if (s == "extremal") return CorpusSpec::Mode::Extremal;
    return std::nullopt;
}

std::string mode_name(CorpusSpec::Mode m) {
    switch (m) {
        case CorpusSpec::Mode::Exhaustive: return "exhaustive";
        case CorpusSpec::Mode::Random: return "random";
        case CorpusSpec::Mode::Extremal: break;
    }
    return "extremal";
}

namespace {

// Every connected graph has a vertex whose removal leaves it connected, so
// extending each class of size n-1 by a vertex on every nonempty independent
// set reaches every class of size n.
std::vector<std::vector<PlaneGraph>> enumerate_levels(int n_max) {
    if (n_max < 1 || n_max > kMaxEnumerate)
        throw PreconditionError("enumeration bound must be in 1.." + std::to_string(kMaxEnumerate));
    std::vector<std::vector<PlaneGraph>> levels(1);
    levels[0].push_back(PlaneGraph(Rotation{{1, {}}}));
    for (int n = 2; n <= n_max; ++n) {
        std::map<CanonicalForm, PlaneGraph> accepted;
        std::set<CanonicalForm> rejected;
        for (const PlaneGraph& parent : levels.back()) {
            const SimpleGraph p = SimpleGraph::from(parent);
            const int k = p.n;
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
                bool independent = true;
                for (int i = 0; i < k && independent; ++i)
                    if ((mask >> i) & 1U) independent = (p.adj[i] & mask) == 0;
                if (!independent) continue;
                SimpleGraph child = SimpleGraph::with_vertices(k + 1);
                for (int i = 0; i < k; ++i) {
                    child.adj[i] = p.adj[i];
                    if ((mask >> i) & 1U) child.add_edge(i, k);
                }
                CanonicalForm key = canonical_form(child);
                if (accepted.count(key) || rejected.count(key)) continue;
                if (auto g = embed(child)) accepted.emplace(std::move(key), std::move(*g));
                else rejected.insert(std::move(key));
            }
        }
        std::vector<PlaneGraph> level;
        for (auto& [key, g] : accepted) level.push_back(std::move(g));
        levels.push_back(std::move(level));
    }
    return levels;
}

}  // namespace

std::vector<PlaneGraph> enumerate_exact(int n) { return enumerate_levels(n).back(); }

std::vector<PlaneGraph> enumerate_small(int n_max) {
    std::vector<PlaneGraph> out;
    for (auto& level : enumerate_levels(n_max))
        for (auto& g : level) out.push_back(std::move(g));
    return out;
}

namespace {

PlaneGraph subdivide(const PlaneGraph& g, std::mt19937_64& rng) {
    const auto edges = g.edges();
    const auto [u, v] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    const Vertex x = g.next_label();
    Rotation rot = g.rotation();
    std::replace(rot[u].begin(), rot[u].end(), v, x);
    std::replace(rot[v].begin(), rot[v].end(), u, x);
    rot[x] = {u, v};
    return PlaneGraph(std::move(rot), std::nullopt, x + 1);
}

std::optional<PlaneGraph> insert_in_face(const PlaneGraph& g, std::mt19937_64& rng) {
    const auto& faces = g.faces();
    const Face& f = faces[std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng)];

    // One corner per vertex (its first visit), in walk order.
    std::vector<Dart> corners;
    VertexSet seen;
    for (const Dart& d : f.walk)
        if (seen.insert(d.head).second) corners.push_back(d);

    std::vector<std::size_t> order(corners.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<bool> take(corners.size(), false);
    VertexSet chosen;
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i : order) {
        const Vertex c = corners[i].head;
        bool free = std::none_of(chosen.begin(), chosen.end(),
                                 [&](Vertex o) { return g.adjacent(o, c); });
        if (free && (chosen.empty() || coin(rng))) {
            chosen.insert(c);
            take[i] = true;
        }
    }

    const Vertex x = g.next_label();
    Rotation rot = g.rotation();
    std::vector<Vertex> ring;
    for (std::size_t i = 0; i < corners.size(); ++i) {
        if (!take[i]) continue;
        const Dart& d = corners[i];
        auto& r = rot[d.head];
        r.insert(std::find(r.begin(), r.end(), d.tail) + 1, x);
        ring.push_back(d.head);
    }
    for (int attempt = 0; attempt < 2; ++attempt) {
        rot[x] = ring;
        if (is_genus_zero(rot)) return PlaneGraph(rot, std::nullopt, x + 1);
        std::reverse(ring.begin(), ring.end());
    }
    return std::nullopt;
}

}  // namespace

PlaneGraph grow_random(int n, std::mt19937_64& rng) {
    if (n < 4) throw PreconditionError("random graphs start from C4");
    PlaneGraph g = fixtures::cycle(4);
    std::bernoulli_distribution pick_subdivision(0.5);
    while (static_cast<int>(g.num_vertices()) < n) {
        if (pick_subdivision(rng)) {
            g = subdivide(g, rng);
        } else if (auto h = insert_in_face(g, rng)) {
            g = std::move(*h);
        } else {
            throw InvariantError("face insertion produced no planar rotation");
        }
    }
    return g;
}

std::vector<PlaneGraph> gen_random(const CorpusSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::vector<PlaneGraph> out;
    for (int i = 0; i < spec.count; ++i) out.push_back(grow_random(spec.n_max, rng));
    return out;
}

std::vector<PlaneGraph> gen_extremal(const CorpusSpec& spec) {
    std::vector<PlaneGraph> out;
    for (int steps = 0; steps <= spec.n_max; ++steps)
        out.push_back(generate_member(steps, spec.seed + static_cast<std::uint64_t>(steps)));
    return out;
}

std::vector<PlaneGraph> build_corpus(const CorpusSpec& spec) {
    switch (spec.mode) {
        case CorpusSpec::Mode::Exhaustive: return enumerate_small(spec.n_max);
        case CorpusSpec::Mode::Random: return gen_random(spec);
        case CorpusSpec::Mode::Extremal: break;
    }
    return gen_extremal(spec);
}

PlaneGraph with_default_outer(const PlaneGraph& g) {
    if (g.faces().empty()) return g;
    for (const Face& f : g.faces())
        if (f.is_cycle() && f.length() <= 6) return re_embed(g, f);
    return re_embed(g, g.faces().front());
}

std::size_t SuiteReport::violations() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SuiteRow& r) {
        return !r.error.empty() || !r.met || !r.weak_ok || !r.strong_ok || !r.tight_ok;
    }));
}

std::string SuiteReport::table() const {
    struct Agg {
        std::size_t graphs = 0, tight = 0, members = 0, met = 0, weak_bad = 0, strong_bad = 0,
                    errors = 0;
    };
    std::map<std::size_t, Agg> by_n;
    for (const auto& r : rows) {
        Agg& a = by_n[r.n];
        ++a.graphs;
        if (r.alpha && 3 * *r.alpha <= static_cast<int>(r.n) + 1) ++a.tight;
        a.members += r.member;
        a.met += r.met;
        a.weak_bad += !r.weak_ok;
        a.strong_bad += !r.strong_ok || !r.tight_ok;
        a.errors += !r.error.empty();
    }
    std::ostringstream os;
    os << "   n  graphs   tight  members     met  weak!  strong!  errors\n";
    Agg total;
    auto line = [&os](const std::string& label, const Agg& a) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%4s %7zu %7zu %8zu %7zu %6zu %8zu %7zu\n", label.c_str(),
                      a.graphs, a.tight, a.members, a.met, a.weak_bad, a.strong_bad, a.errors);
        os << buf;
    };
    for (const auto& [n, a] : by_n) {
        line(std::to_string(n), a);
        total.graphs += a.graphs;
        total.tight += a.tight;
        total.members += a.members;
        total.met += a.met;
        total.weak_bad += a.weak_bad;
        total.strong_bad += a.strong_bad;
        total.errors += a.errors;
    }
    line("all", total);
    return os.str();
}

std::string SuiteReport::jsonl() const {
    std::ostringstream os;
    for (const auto& r : rows) {
        nlohmann::json j{{"index", r.index},   {"n", r.n},
                         {"m", r.m},           {"member", r.member},
                         {"solved", r.solved}, {"guarantee", r.guarantee},
                         {"met", r.met},       {"weak_ok", r.weak_ok},
                         {"strong_ok", r.strong_ok}, {"tight_ok", r.tight_ok},
                         {"config", r.config}};
        j["alpha"] = r.alpha ? nlohmann::json(*r.alpha) : nlohmann::json(nullptr);
        if (!r.error.empty()) j["error"] = r.error;
        os << j.dump() << '\n';
    }
    return os.str();
}

SuiteReport run_suite(const std::vector<PlaneGraph>& corpus,
                      const std::function<void(const SuiteRow&)>& progress) {
    SuiteReport report;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const PlaneGraph& g = corpus[i];
        SuiteRow row;
        row.index = i;
        row.n = g.num_vertices();
        row.m = g.num_edges();
        try {
            row.config = to_string(find_any(g));
            SolveResult s = solve(g);
            row.solved = s.independent_set.size();
            row.guarantee = s.guarantee;
            row.met = s.met;
            if (row.n <= 40) {
                BoundsReport b = check_theorem_bounds(g);
                row.alpha = b.alpha;
                row.member = b.member;
                row.weak_ok = b.weak_ok;
                row.strong_ok = b.strong_ok;
                row.tight_ok = b.tight_ok;
            } else {
                row.member = is_member(g).member();
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        if (progress) progress(row);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace trifree
