#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "trifree/corpus.hpp"
#include "trifree/embedding.hpp"
#include "trifree/graph_io.hpp"
#include "trifree/isomorphism.hpp"
#include "trifree/solver.hpp"

using namespace trifree;

namespace {

bool connected_dense(const std::vector<std::vector<bool>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
            if (adj[v][u] && !seen[u]) seen[u] = true, ++count, stack.push_back(u);
    }
    return count == n;
}

// Labelled graphs on n vertices, filtered and deduplicated by brute force;
// planarity through the exhaustive embedder.
std::size_t brute_count(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::set<std::vector<bool>> classes;
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if ((mask >> e) & 1U) adj[pairs[e].first][pairs[e].second] = adj[pairs[e].second][pairs[e].first] = true;
        bool triangle = false;
        for (int a = 0; a < n && !triangle; ++a)
            for (int b = a + 1; b < n && !triangle; ++b)
                for (int c = b + 1; c < n && !triangle; ++c)
                    triangle = adj[a][b] && adj[b][c] && adj[a][c];
        if (triangle || !connected_dense(adj)) continue;
        const auto form = oracle::brute_canonical(adj);
        if (classes.count(form)) continue;
        SimpleGraph s = SimpleGraph::with_vertices(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (adj[a][b]) s.add_edge(a, b);
        if (embed_exhaustive(s)) classes.insert(form);
    }
    return classes.size();
}

}  // namespace

TEST_CASE("enumeration matches a labelled brute force up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) CHECK(enumerate_exact(n).size() == brute_count(n));
}

TEST_CASE("enumeration counts") {
    // n <= 6 are covered above; 7 is 59 connected triangle-free graphs minus
    // the four containing K3,3 (pendant, K3,4, subdivided edge, bridged side).
    const std::vector<std::size_t> expect{1, 1, 1, 3, 6, 18, 55, 230, 1063};
    for (int n = 1; n <= 9; ++n) CHECK(enumerate_exact(n).size() == expect[n - 1]);
    CHECK_THROWS_AS(enumerate_exact(kMaxEnumerate + 1), PreconditionError);
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic and valid") {
    const auto graphs = enumerate_small(8);
    std::set<CanonicalForm> forms;
    for (const PlaneGraph& g : graphs) {
        CHECK(g.connected());
        CHECK(is_triangle_free(g));
        forms.insert(canonical_form(g));
    }
    CHECK(forms.size() == graphs.size());
}

TEST_CASE("random graphs are deterministic, plane and triangle-free") {
    CorpusSpec spec;
    spec.mode = CorpusSpec::Mode::Random;
    spec.n_max = 30;
    spec.seed = 12;
    spec.count = 10;
    const auto a = gen_random(spec), b = gen_random(spec);
    REQUIRE(a.size() == 10);
    CHECK(a == b);
    spec.seed = 13;
    CHECK(gen_random(spec) != a);
    for (const PlaneGraph& g : a) {
        CHECK(g.num_vertices() == 30);
        CHECK(g.connected());
        CHECK(is_triangle_free(g));
        CHECK(is_planar(SimpleGraph::from(g)));
    }
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(grow_random(3, rng), PreconditionError);
}

TEST_CASE("corpus modes") {
    CHECK(parse_mode("exhaustive") == CorpusSpec::Mode::Exhaustive);
    CHECK(parse_mode("extremal") == CorpusSpec::Mode::Extremal);
    CHECK_FALSE(parse_mode("nope"));
    CorpusSpec spec;
    spec.mode = CorpusSpec::Mode::Extremal;
    spec.n_max = 4;
    const auto members = build_corpus(spec);
    REQUIRE(members.size() == 5);
    for (int s = 0; s <= 4; ++s) CHECK(members[s].num_vertices() == static_cast<std::size_t>(5 + 3 * s));
}

TEST_CASE("emitted graphs survive a serialization round trip") {
    for (const PlaneGraph& g : enumerate_small(7)) {
        const PlaneGraph h = with_default_outer(g);
        const PlaneGraph back = parse_graph(serialize(h));
        CHECK(canonical_form(back) == canonical_form(h));
        CHECK(back.faces().size() == h.faces().size());
        CHECK(back.has_outer_face() == h.has_outer_face());
    }
}

TEST_CASE("suite report") {
    std::vector<PlaneGraph> corpus = enumerate_small(6);
    std::size_t seen = 0;
    const SuiteReport r = run_suite(corpus, [&](const SuiteRow&) { ++seen; });
    CHECK(seen == corpus.size());
    CHECK(r.violations() == 0);
    for (const SuiteRow& row : r.rows) {
        CHECK(row.met);
        CHECK(row.alpha == oracle::alpha(corpus[row.index]));
    }
    const std::string jl = r.jsonl();
    CHECK(static_cast<std::size_t>(std::count(jl.begin(), jl.end(), '\n')) == corpus.size());
    CHECK(jl.find("\"alpha\"") != std::string::npos);
    CHECK(r.table().find("members") != std::string::npos);
}
