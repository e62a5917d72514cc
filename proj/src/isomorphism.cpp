#include "trifree/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace trifree {

SimpleGraph SimpleGraph::with_vertices(int n) {
    if (n > 64) throw PreconditionError("SimpleGraph supports at most 64 vertices");
    SimpleGraph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) g.labels.push_back(i + 1);
    return g;
}

SimpleGraph SimpleGraph::from(const PlaneGraph& pg) {
    SimpleGraph g = with_vertices(static_cast<int>(pg.num_vertices()));
    g.labels = pg.vertices();
    std::map<Vertex, int> index;
    for (int i = 0; i < g.n; ++i) index[g.labels[i]] = i;
    for (const auto& [a, b] : pg.edges()) g.add_edge(index[a], index[b]);
    return g;
}

int SimpleGraph::degree(int i) const { return std::popcount(adj[i]); }

int SimpleGraph::num_edges() const {
    int total = 0;
    for (int i = 0; i < n; ++i) total += degree(i);
    return total / 2;
}

namespace {

using Colouring = std::vector<int>;

int count_colours(const Colouring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Equitable refinement; colours are re-ranked so they stay label invariant.
void refine(const SimpleGraph& g, Colouring& colour) {
    int before = -1;
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> keys(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> key{colour[v]};
            std::uint64_t nb = g.adj[v];
            std::vector<int> nc;
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                nc.push_back(colour[u]);
            }
            std::sort(nc.begin(), nc.end());
            key.insert(key.end(), nc.begin(), nc.end());
            keys[v] = {std::move(key), v};
        }
        std::vector<std::vector<int>> distinct;
        for (auto& k : keys) distinct.push_back(k.first);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < g.n; ++v)
            colour[v] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), keys[v].first) - distinct.begin());
        const int now = static_cast<int>(distinct.size());
        if (now == before) return;
        before = now;
    }
}

bool twins(const SimpleGraph& g, int a, int b) {
    std::uint64_t mask = ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
    return (g.adj[a] & mask) == (g.adj[b] & mask);
}

struct CanonSearch {
    const SimpleGraph& g;
    CanonicalForm best;
    bool have_best = false;

    CanonicalForm leaf_form(const Colouring& pos) const {
        std::vector<int> at(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) at[pos[v]] = v;
        CanonicalForm form{static_cast<std::uint64_t>(g.n)};
        std::uint64_t word = 0;
        int bits = 0;
        for (int i = 0; i < g.n; ++i) {
            for (int j = i + 1; j < g.n; ++j) {
                word = (word << 1) | (g.has_edge(at[i], at[j]) ? 1U : 0U);
                if (++bits == 64) {
                    form.push_back(word);
                    word = 0;
                    bits = 0;
                }
            }
        }
        if (bits) form.push_back(word << (64 - bits));
        return form;
    }

    void search(Colouring colour) {
        refine(g, colour);
        const int k = count_colours(colour);
        if (k == g.n) {
            CanonicalForm f = leaf_form(colour);
            if (!have_best || f > best) {
                best = std::move(f);
                have_best = true;
            }
            return;
        }
        std::vector<int> size(static_cast<std::size_t>(k), 0);
        for (int c : colour) ++size[c];
        int target = 0;
        while (size[target] == 1) ++target;
        std::vector<int> tried;
        for (int v = 0; v < g.n; ++v) {
            if (colour[v] != target) continue;
            if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(g, t, v); }))
                continue;
            tried.push_back(v);
            Colouring next(colour.size());
            for (int u = 0; u < g.n; ++u) next[u] = 2 * colour[u] + (u == v ? 0 : 1);
            search(std::move(next));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const SimpleGraph& g) {
    if (g.n == 0) return {0};
    CanonSearch s{g, {}, false};
    s.search(Colouring(static_cast<std::size_t>(g.n), 0));
    return s.best;
}

CanonicalForm canonical_form(const PlaneGraph& g) { return canonical_form(SimpleGraph::from(g)); }

bool isomorphic_small(const PlaneGraph& g, const PlaneGraph& h) {
    if (g.num_vertices() > 12 || h.num_vertices() > 12)
        throw PreconditionError("isomorphic_small is limited to 12 vertices");
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
    return canonical_form(g) == canonical_form(h);
}

void for_each_isomorphism(const SimpleGraph& a, const SimpleGraph& b,
                          const std::function<bool(const std::vector<int>&)>& visit,
                          const std::vector<int>& a_colour, const std::vector<int>& b_colour) {
    if (a.n != b.n || a.num_edges() != b.num_edges()) return;
    const int n = a.n;
    auto colour_of = [](const std::vector<int>& c, int v) { return c.empty() ? 0 : c[v]; };

    // Visit a's vertices in BFS order so every step is constrained by a mapped neighbour.
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    for (int s = 0; s < n; ++s) {
        if (placed[s]) continue;
        placed[s] = true;
        std::size_t head = order.size();
        order.push_back(s);
        while (head < order.size()) {
            int v = order[head++];
            for (int u = 0; u < n; ++u)
                if (a.has_edge(v, u) && !placed[u]) {
                    placed[u] = true;
                    order.push_back(u);
                }
        }
    }

    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    bool stop = false;
    std::function<void(int)> extend = [&](int depth) {
        if (stop) return;
        if (depth == n) {
            stop = visit(map);
            return;
        }
        const int v = order[depth];
        for (int w = 0; w < n && !stop; ++w) {
            if (used[w] || a.degree(v) != b.degree(w)) continue;
            if (colour_of(a_colour, v) != colour_of(b_colour, w)) continue;
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) {
                int p = order[i];
                ok = a.has_edge(v, p) == b.has_edge(w, map[p]);
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            extend(depth + 1);
            used[w] = false;
            map[v] = -1;
        }
    };
    extend(0);
}

}  // namespace trifree
