// trifree: command-line front end. Exit codes: 0 ok, 1 violation, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "trifree/configurations.hpp"
#include "trifree/corpus.hpp"
#include "trifree/discharging.hpp"
#include "trifree/extremal.hpp"
#include "trifree/graph_io.hpp"
#include "trifree/solver.hpp"
#include "trifree/verify.hpp"

using namespace trifree;

namespace {

constexpr int kOk = 0, kViolation = 1, kInputError = 2;

std::uint64_t default_seed() {
    if (const char* s = std::getenv("TRIFREE_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw InputError(std::string("TRIFREE_SEED is not a number: ") + s);
        }
    }
    return 1;
}

// "-" reads stdin. A file may hold several graphs.
std::vector<PlaneGraph> load(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    auto graphs = parse_graphs(text);
    if (graphs.empty()) throw InputError("no graph in " + path);
    return graphs;
}

PlaneGraph outer_or_default(const PlaneGraph& g) {
    return g.has_outer_face() ? g : with_default_outer(g);
}

void require_triangle_free(const PlaneGraph& g) {
    if (!is_triangle_free(g)) throw InputError("graph contains a triangle");
}

int cmd_solve(const std::string& path, bool trace) {
    int rc = kOk;
    for (const PlaneGraph& g : load(path)) {
        require_triangle_free(g);
        const SolveResult r = solve(g);
        const bool valid = is_independent(g, r.independent_set);
        if (trace)
            for (const auto& st : r.trace) std::cout << st.to_string() << '\n';
        std::cout << "set " << to_string(r.independent_set) << '\n'
                  << "size " << r.independent_set.size() << '\n'
                  << "guarantee " << r.guarantee << '\n'
                  << "met " << (r.met && valid ? "yes" : "no") << '\n';
        if (!r.met || !valid) rc = kViolation;
    }
    return rc;
}

int cmd_oracle(const std::string& path) {
    for (const PlaneGraph& g : load(path)) {
        const AlphaResult a = exact_alpha(g);
        std::cout << "alpha " << a.alpha << '\n' << "witness " << to_string(a.witness) << '\n';
    }
    return kOk;
}

int cmd_member(const std::string& path) {
    for (const PlaneGraph& g : load(path)) {
        require_triangle_free(g);
        const MembershipTrace t = is_member(g);
        std::cout << "member " << (t.member() ? "yes" : "no") << '\n' << t.serialize();
    }
    return kOk;
}

int cmd_find_configs(const std::string& path) {
    for (const PlaneGraph& g : load(path)) {
        require_triangle_free(g);
        for (const auto& c : find_all(g)) std::cout << to_string(c) << '\n';
    }
    return kOk;
}

int cmd_discharge(const std::string& path, bool ledger) {
    int rc = kOk;
    for (const PlaneGraph& raw : load(path)) {
        require_triangle_free(raw);
        const PlaneGraph g = outer_or_default(raw);
        const ChargeLedger l = apply_rules(g);
        std::cout << "initial " << to_string(l.total_initial()) << '\n'
                  << "final " << to_string(l.total_final()) << '\n';
        for (const auto& [e, c] : l.final) std::cout << to_string(e) << ' ' << to_string(c) << '\n';
        if (ledger)
            for (const auto& t : l.transfers) std::cout << ChargeLedger::format(t) << '\n';
        if (l.total_initial() != Charge(-8) || l.total_final() != Charge(-8)) rc = kViolation;
    }
    return rc;
}

int cmd_dangerous(const std::string& path) {
    for (const PlaneGraph& raw : load(path)) {
        const PlaneGraph g = outer_or_default(raw);
        const AuditReport r = audit(g);
        if (g.connected() && g.outer_face().is_cycle())
            for (const auto& d : dangerous_cycles(g)) {
                std::cout << "dangerous";
                for (Vertex v : d.cycle) std::cout << ' ' << v;
                std::cout << " : " << d.verdict_reason << '\n';
            }
        std::cout << r.to_string();
        if (!r.consistent()) return kViolation;
    }
    return kOk;
}

int cmd_validate(const std::string& path) {
    int rc = kOk;
    for (const PlaneGraph& g : load(path)) {
        const bool tf = is_triangle_free(g);
        std::cout << "n " << g.num_vertices() << " m " << g.num_edges() << " faces "
                  << g.faces().size() << " components " << g.components().size()
                  << " triangle-free " << (tf ? "yes" : "no") << '\n';
        if (!tf) rc = kViolation;
    }
    return rc;
}

int cmd_emit(const std::vector<PlaneGraph>& graphs) {
    for (const PlaneGraph& g : graphs) std::cout << serialize(g);
    return kOk;
}

int cmd_suite(const CorpusSpec& spec, const std::string& jsonl_path) {
    const SuiteReport r = run_suite(build_corpus(spec));
    std::cout << r.table();
    if (!jsonl_path.empty()) {
        std::ofstream out(jsonl_path);
        if (!out) throw InputError("cannot write " + jsonl_path);
        out << r.jsonl();
    }
    std::cout << "violations " << r.violations() << '\n';
    return r.violations() == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independent sets in plane triangle-free graphs"};
    app.require_subcommand(1);

    std::string file = "-";
    bool trace = false, ledger = false;
    int steps = 0, n = 0, count = 1;
    std::uint64_t seed = 0;
    std::string mode = "exhaustive", jsonl;
    int n_max = 9;

    auto with_file = [&](CLI::App* sub) { sub->add_option("file", file, "graph file, - for stdin"); };
    auto* solve_cmd = app.add_subcommand("solve", "independent set with the guaranteed size");
    with_file(solve_cmd);
    solve_cmd->add_flag("--trace", trace, "print the reduction log");
    auto* oracle_cmd = app.add_subcommand("oracle", "exact independence number (n <= 40)");
    with_file(oracle_cmd);
    auto* member_cmd = app.add_subcommand("member", "membership in the extremal family");
    with_file(member_cmd);
    auto* configs_cmd = app.add_subcommand("find-configs", "list reducible configurations");
    with_file(configs_cmd);
    auto* discharge_cmd = app.add_subcommand("discharge", "run the discharging rules");
    with_file(discharge_cmd);
    discharge_cmd->add_flag("--ledger", ledger, "print every transfer");
    auto* dangerous_cmd = app.add_subcommand("dangerous", "dangerous cycles and audit");
    with_file(dangerous_cmd);
    auto* validate_cmd = app.add_subcommand("validate", "parse and check a graph file");
    with_file(validate_cmd);

    auto* gen_ext = app.add_subcommand("gen-extremal", "member of the extremal family");
    gen_ext->add_option("--steps", steps)->required()->check(CLI::NonNegativeNumber);
    gen_ext->add_option("--seed", seed);
    auto* gen_rand = app.add_subcommand("gen-random", "random plane triangle-free graphs");
    gen_rand->add_option("--n", n)->required()->check(CLI::Range(4, 100000));
    gen_rand->add_option("--count", count)->check(CLI::PositiveNumber);
    gen_rand->add_option("--seed", seed);
    auto* enum_cmd = app.add_subcommand("enumerate", "all graphs with exactly n vertices");
    enum_cmd->add_option("--n", n)->required()->check(CLI::Range(1, kMaxEnumerate));
    auto* suite_cmd = app.add_subcommand("suite", "solve, oracle and bound checks on a corpus");
    suite_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "random", "extremal"}));
    suite_cmd->add_option("--n-max", n_max);
    suite_cmd->add_option("--count", count)->check(CLI::PositiveNumber);
    suite_cmd->add_option("--seed", seed);
    suite_cmd->add_option("--jsonl", jsonl, "write one JSON record per graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        auto seed_or_default = [&](CLI::App* sub) {
            return sub->count("--seed") ? seed : default_seed();
        };
        if (*solve_cmd) return cmd_solve(file, trace);
        if (*oracle_cmd) return cmd_oracle(file);
        if (*member_cmd) return cmd_member(file);
        if (*configs_cmd) return cmd_find_configs(file);
        if (*discharge_cmd) return cmd_discharge(file, ledger);
        if (*dangerous_cmd) return cmd_dangerous(file);
        if (*validate_cmd) return cmd_validate(file);
        if (*gen_ext) return cmd_emit({generate_member(steps, seed_or_default(gen_ext))});
        if (*gen_rand) {
            CorpusSpec spec{CorpusSpec::Mode::Random, n, seed_or_default(gen_rand), count};
            return cmd_emit(gen_random(spec));
        }
        if (*enum_cmd) return cmd_emit(enumerate_exact(n));
        if (*suite_cmd) {
            CorpusSpec spec{*parse_mode(mode), n_max, seed_or_default(suite_cmd), count};
            return cmd_suite(spec, jsonl);
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "violation: " << e.what() << '\n';
        return kViolation;
    }
    return kOk;
}
