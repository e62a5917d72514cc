#include "trifree/solver.hpp"

#include <bit>
#include <cstdint>
#include <sstream>

#include "trifree/configurations.hpp"
#include "trifree/isomorphism.hpp"
#include "trifree/verify.hpp"

namespace trifree {

namespace {

using Mask = std::uint64_t;

class BranchAndBound {
public:
    explicit BranchAndBound(const SimpleGraph& g) : adj_(g.adj), n_(g.n) {}

    Mask run() {
        const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        branch(all, 0);
        return best_;
    }

private:
    // In a triangle-free graph a matching is a clique cover of its
    // endpoints, so alpha(cand) <= |cand| - |M| for any matching M.
    int upper_bound(Mask cand) const {
        int matched = 0;
        Mask free = cand;
        while (free) {
            const int v = std::countr_zero(free);
            free &= free - 1;
            const Mask nb = adj_[v] & free;
            if (nb) {
                free &= ~(Mask{1} << std::countr_zero(nb));
                ++matched;
            }
        }
        return std::popcount(cand) - matched;
    }

    void branch(Mask cand, Mask chosen) {
        // Degree 0 and 1 vertices always belong to some maximum set.
        for (bool changed = true; changed;) {
            changed = false;
            for (Mask rest = cand; rest; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                if (!((cand >> v) & 1U)) continue;
                if (std::popcount(adj_[v] & cand) <= 1) {
                    chosen |= Mask{1} << v;
                    cand &= ~(adj_[v] | (Mask{1} << v));
                    changed = true;
                }
            }
        }
        const int size = std::popcount(chosen);
        if (!cand) {
            if (size > std::popcount(best_)) best_ = chosen;
            return;
        }
        if (size + upper_bound(cand) <= std::popcount(best_)) return;

        int pivot = -1, pivot_degree = -1;
        for (Mask rest = cand; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int d = std::popcount(adj_[v] & cand);
            if (d > pivot_degree) pivot = v, pivot_degree = d;
        }
        const Mask bit = Mask{1} << pivot;
        branch(cand & ~bit & ~adj_[pivot], chosen | bit);
        branch(cand & ~bit, chosen);
    }

    std::vector<Mask> adj_;
    int n_;
    Mask best_ = 0;
};

void solve_into(const PlaneGraph& g, SolveResult& out, VertexSet& set);

VertexSet solve_component(const PlaneGraph& h, SolveResult& out) {
    if (h.num_vertices() <= kExactBaseSize) return exact_alpha(h).witness;
    Configuration c = find_any(h);
    if (const auto* c5 = std::get_if<ConfC5>(&c)) c = c5_to_c2(h, *c5);
    Reduction r = reduce(h, c);
    out.trace.push_back(r.step);
    VertexSet sub;
    solve_into(r.reduced, out, sub);
    return lift(r.step, sub);
}

void solve_into(const PlaneGraph& g, SolveResult& out, VertexSet& set) {
    for (const VertexSet& comp : g.components()) {
        VertexSet part = solve_component(g.induced(comp), out);
        set.insert(part.begin(), part.end());
    }
}

}  // namespace

AlphaResult exact_alpha(const PlaneGraph& g) {
    if (g.num_vertices() > 40)
        throw PreconditionError("exact_alpha is limited to 40 vertices, got " +
                                std::to_string(g.num_vertices()));
    const SimpleGraph s = SimpleGraph::from(g);
    const Mask best = BranchAndBound(s).run();
    AlphaResult r;
    for (int i = 0; i < s.n; ++i)
        if ((best >> i) & 1U) r.witness.insert(s.labels[i]);
    r.alpha = static_cast<int>(r.witness.size());
    return r;
}

SolveResult solve(const PlaneGraph& g) {
    if (!is_triangle_free(g)) throw PreconditionError("input graph contains a triangle");
    SolveResult out;
    solve_into(g, out, out.independent_set);
    if (auto bad = independence_violation(g, out.independent_set))
        throw InvariantError("solver produced a dependent set, edge " + std::to_string(bad->first) +
                             "-" + std::to_string(bad->second));
    for (const VertexSet& comp : g.components()) {
        const int n = static_cast<int>(comp.size());
        const bool member = is_member(g.induced(comp)).member();
        out.guarantee += member ? (n + 3) / 3 : (n + 4) / 3;
    }
    out.met = static_cast<int>(out.independent_set.size()) >= out.guarantee;
    return out;
}

std::string BoundsReport::to_string() const {
    std::ostringstream os;
    os << "n=" << n << " alpha=" << alpha << " member=" << (member ? "yes" : "no")
       << " weak=" << (weak_ok ? "ok" : "VIOLATED") << " strong=" << (strong_ok ? "ok" : "VIOLATED")
       << " tight=" << (tight_ok ? "ok" : "VIOLATED");
    return os.str();
}

BoundsReport check_theorem_bounds(const PlaneGraph& g) {
    BoundsReport r;
    r.n = g.num_vertices();
    r.alpha = exact_alpha(g).alpha;
    r.member = is_member(g).member();
    const long a3 = 3L * r.alpha;
    const long n = static_cast<long>(r.n);
    r.weak_ok = a3 >= n + 1;
    r.strong_ok = r.member || a3 >= n + 2;
    r.tight_ok = !r.member || a3 == n + 1;
    return r;
}

}  // namespace trifree
