#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trifree/plane_graph.hpp"

namespace trifree {

struct CorpusSpec {
    enum class Mode { Exhaustive, Random, Extremal };
    Mode mode = Mode::Exhaustive;
    int n_max = 9;  // exhaustive: vertex bound; random: target size; extremal: max steps
    std::uint64_t seed = 1;
    int count = 1;  // random mode only
};

std::optional<CorpusSpec::Mode> parse_mode(const std::string& s);
std::string mode_name(CorpusSpec::Mode m);

inline constexpr int kMaxEnumerate = 11;

/// Connected planar triangle-free graphs with exactly n vertices, one per
/// isomorphism class, ordered by canonical form. n <= 11.
std::vector<PlaneGraph> enumerate_exact(int n);

/// enumerate_exact(1) .. enumerate_exact(n_max), concatenated.
std::vector<PlaneGraph> enumerate_small(int n_max);

/// One random plane triangle-free graph on `n` >= 4 vertices grown from C4
/// by edge subdivisions and face insertions.
PlaneGraph grow_random(int n, std::mt19937_64& rng);

/// `count` graphs of size n_max, deterministic per seed.
std::vector<PlaneGraph> gen_random(const CorpusSpec& spec);

/// Members generated with steps = 0..n_max.
std::vector<PlaneGraph> gen_extremal(const CorpusSpec& spec);

std::vector<PlaneGraph> build_corpus(const CorpusSpec& spec);

/// Chooses the first face bounded by a cycle of length <= 6 (else the first
/// face) as the outer face.
PlaneGraph with_default_outer(const PlaneGraph& g);

struct SuiteRow {
    std::size_t index = 0;
    std::size_t n = 0, m = 0;
    std::optional<int> alpha;
    bool member = false;
    std::size_t solved = 0;
    int guarantee = 0;
    bool met = false;
    bool weak_ok = true, strong_ok = true, tight_ok = true;
    std::string config;  // first configuration found, or the error
    std::string error;
};

struct SuiteReport {
    std::vector<SuiteRow> rows;

    std::size_t violations() const;
    std::string table() const;
    /// One JSON object per line.
    std::string jsonl() const;
};

/// Solves, runs the oracle (n <= 40), checks membership and both bounds.
SuiteReport run_suite(const std::vector<PlaneGraph>& corpus,
                      const std::function<void(const SuiteRow&)>& progress = {});

}  // namespace trifree
