#pragma once
// Test-only reference implementations. They use nothing from the library
// beyond PlaneGraph's accessors, so agreement with the library is evidence.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "trifree/plane_graph.hpp"

namespace oracle {

using trifree::PlaneGraph;
using trifree::Vertex;
using trifree::VertexSet;

struct Dense {
    int n = 0;
    std::vector<Vertex> labels;
    std::vector<std::vector<bool>> adj;
};

inline Dense dense(const PlaneGraph& g) {
    Dense d;
    d.labels = g.vertices();
    d.n = static_cast<int>(d.labels.size());
    d.adj.assign(d.n, std::vector<bool>(d.n, false));
    std::map<Vertex, int> at;
    for (int i = 0; i < d.n; ++i) at[d.labels[i]] = i;
    for (const auto& [a, b] : g.edges()) d.adj[at[a]][at[b]] = d.adj[at[b]][at[a]] = true;
    return d;
}

inline bool independent(const PlaneGraph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (!g.has_vertex(v)) return false;
    for (const auto& [a, b] : g.edges())
        if (s.count(a) && s.count(b)) return false;
    return true;
}

/// Plain subset enumeration; n <= 22.
inline int alpha(const PlaneGraph& g) {
    const Dense d = dense(g);
    if (d.n > 22) throw std::runtime_error("oracle alpha limited to 22 vertices");
    std::vector<std::uint32_t> nb(d.n, 0);
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j)
            if (d.adj[i][j]) nb[i] |= 1U << j;
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << d.n); ++mask) {
        bool ok = true;
        for (int i = 0; i < d.n && ok; ++i)
            if ((mask >> i) & 1U) ok = (nb[i] & mask) == 0;
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

/// Every simple path a..b with exactly `len` edges, interior avoiding `avoid`.
inline int count_paths(const PlaneGraph& g, Vertex a, Vertex b, int len, const VertexSet& avoid = {}) {
    int count = 0;
    std::vector<Vertex> path{a};
    std::function<void()> dfs = [&]() {
        const Vertex last = path.back();
        const int used = static_cast<int>(path.size()) - 1;
        if (used == len) {
            count += last == b;
            return;
        }
        for (Vertex u : g.neighbors(last)) {
            if (std::find(path.begin(), path.end(), u) != path.end()) continue;
            const bool final_step = used + 1 == len;
            if (!final_step && (u == b || avoid.count(u))) continue;
            path.push_back(u);
            dfs();
            path.pop_back();
        }
    };
    dfs();
    return count;
}

/// Number of simple cycles with at most `max_len` edges.
inline int count_cycles(const PlaneGraph& g, int max_len) {
    int twice = 0;
    for (Vertex s : g.vertices()) {
        std::vector<Vertex> path{s};
        std::function<void()> dfs = [&]() {
            for (Vertex u : g.neighbors(path.back())) {
                if (u == s && path.size() >= 3) ++twice;
                if (u <= s || std::find(path.begin(), path.end(), u) != path.end()) continue;
                if (static_cast<int>(path.size()) >= max_len) continue;
                path.push_back(u);
                dfs();
                path.pop_back();
            }
        };
        dfs();
    }
    return twice / 2;  // both directions from the smallest vertex
}

/// Vertex permutations; n <= 9.
inline bool isomorphic(const PlaneGraph& g, const PlaneGraph& h) {
    const Dense a = dense(g), b = dense(h);
    if (a.n != b.n || g.num_edges() != h.num_edges()) return false;
    std::vector<int> p(a.n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < a.n && ok; ++i)
            for (int j = i + 1; j < a.n && ok; ++j) ok = a.adj[i][j] == b.adj[p[i]][p[j]];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Lexicographically largest upper-triangle adjacency string over all
/// permutations of an n-vertex graph given by adjacency matrix.
inline std::vector<bool> brute_canonical(const std::vector<std::vector<bool>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<bool> best;
    do {
        std::vector<bool> s;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s.push_back(adj[p[i]][p[j]]);
        if (s > best) best = s;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

/// 5-cycles u1 z1 z2 u2 w meeting the diamond degree pattern with the
/// attachment structure, counted once per reflection.
inline int count_diamonds(const PlaneGraph& g) {
    int count = 0;
    const auto vs = g.vertices();
    for (Vertex z1 : vs)
        for (Vertex z2 : vs) {
            if (z1 >= z2 || !g.adjacent(z1, z2) || g.degree(z1) != 2 || g.degree(z2) != 2) continue;
            for (Vertex u1 : vs)
                for (Vertex u2 : vs)
                    for (Vertex w : vs) {
                        std::set<Vertex> five{u1, z1, z2, u2, w};
                        if (five.size() != 5) continue;
                        if (!g.adjacent(u1, z1) || !g.adjacent(z2, u2) || !g.adjacent(u2, w) ||
                            !g.adjacent(w, u1))
                            continue;
                        if (g.degree(u1) != 3 || g.degree(u2) != 3 || g.degree(w) != 3) continue;
                        int common = 0;
                        for (Vertex x : vs)
                            if (!five.count(x) && g.adjacent(x, u1) && g.adjacent(x, u2)) ++common;
                        int outside_w = 0;
                        for (Vertex x : vs)
                            if (!five.count(x) && g.adjacent(x, w)) ++outside_w;
                        if (common == 1 && outside_w == 1) ++count;
                    }
        }
    return count;
}

}  // namespace oracle
