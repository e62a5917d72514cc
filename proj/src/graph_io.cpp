#include "trifree/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace trifree {

namespace {

struct LineCursor {
    std::vector<std::string> lines;
    std::vector<int> numbers;
    std::size_t pos = 0;

    bool done() const { return pos >= lines.size(); }
    const std::string& peek() const { return lines[pos]; }
    std::string where() const {
        return "line " + std::to_string(pos < numbers.size() ? numbers[pos] : -1);
    }
};

LineCursor tokenize_lines(std::string_view text) {
    LineCursor cur;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        cur.lines.push_back(line.substr(first, last - first + 1));
        cur.numbers.push_back(number);
    }
    return cur;
}

std::vector<int> read_ints(const std::string& s, const std::string& where) {
    std::istringstream in(s);
    std::vector<int> out;
    int x;
    while (in >> x) out.push_back(x);
    if (!in.eof()) throw InputError(where + ": expected integers");
    return out;
}

PlaneGraph parse_one(LineCursor& cur) {
    const std::string where = cur.where();
    auto header = read_ints(cur.peek(), where);
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        throw InputError(where + ": header must be 'n m'");
    ++cur.pos;
    const int n = header[0];
    const int m = header[1];

    Rotation rot;
    for (int i = 0; i < n; ++i) {
        if (cur.done()) throw InputError("unexpected end of input: missing rotation lines");
        const std::string& line = cur.peek();
        auto colon = line.find(':');
        if (colon == std::string::npos || line.rfind("outer", 0) == 0)
            throw InputError(cur.where() + ": expected 'v: neighbours'");
        auto head = read_ints(line.substr(0, colon), cur.where());
        if (head.size() != 1) throw InputError(cur.where() + ": bad vertex label");
        const int v = head[0];
        if (v < 1 || v > n) throw InputError(cur.where() + ": vertex out of range 1..n");
        if (rot.count(v)) throw InputError(cur.where() + ": duplicate rotation for vertex");
        auto nbrs = read_ints(line.substr(colon + 1), cur.where());
        for (int u : nbrs)
            if (u < 1 || u > n) throw InputError(cur.where() + ": neighbour out of range 1..n");
        rot[v] = std::move(nbrs);
        ++cur.pos;
    }

    std::vector<int> outer_walk;
    if (!cur.done() && cur.peek().rfind("outer", 0) == 0) {
        const std::string& line = cur.peek();
        auto colon = line.find(':');
        if (colon == std::string::npos) throw InputError(cur.where() + ": expected 'outer:'");
        outer_walk = read_ints(line.substr(colon + 1), cur.where());
        ++cur.pos;
    }

    std::size_t darts = 0;
    for (const auto& entry : rot) darts += entry.second.size();
    if (darts % 2 != 0 || static_cast<int>(darts / 2) != m) {
        // Asymmetric rotations also show up here; let the validator name them.
        PlaneGraph probe(rot);
        throw InputError("edge count mismatch: header says " + std::to_string(m) + ", rotation has " +
                         std::to_string(probe.num_edges()));
    }

    std::optional<Dart> outer;
    if (!outer_walk.empty()) {
        if (outer_walk.size() < 2) throw InputError("outer walk needs at least two vertices");
        outer = Dart{outer_walk[0], outer_walk[1]};
    }
    PlaneGraph g(std::move(rot), outer);
    if (outer) {
        std::vector<Vertex> b = g.outer_face().boundary();
        auto it = std::find(b.begin(), b.end(), outer_walk[0]);
        bool ok = b.size() == outer_walk.size();
        // Rotate so the walk starts with the given dart.
        if (ok) {
            for (std::size_t s = 0; s < b.size(); ++s) {
                if (b[s] == outer_walk[0] && b[(s + 1) % b.size()] == outer_walk[1]) {
                    std::rotate(b.begin(), b.begin() + static_cast<long>(s), b.end());
                    break;
                }
            }
            ok = std::equal(b.begin(), b.end(), outer_walk.begin());
        }
        if (!ok || it == b.end()) throw InputError("outer walk is not a face of the rotation system");
    }
    return g;
}

}  // namespace

PlaneGraph parse_graph(std::string_view text) {
    auto graphs = parse_graphs(text);
    if (graphs.size() != 1)
        throw InputError("expected exactly one graph, found " + std::to_string(graphs.size()));
    return std::move(graphs.front());
}

std::vector<PlaneGraph> parse_graphs(std::string_view text) {
    LineCursor cur = tokenize_lines(text);
    std::vector<PlaneGraph> out;
    while (!cur.done()) out.push_back(parse_one(cur));
    return out;
}

PlaneGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string serialize(const PlaneGraph& g) {
    std::map<Vertex, Vertex> label;
    for (Vertex v : g.vertices()) label.emplace(v, static_cast<Vertex>(label.size() + 1));

    std::ostringstream os;
    os << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& [v, nbrs] : g.rotation()) {
        std::vector<Vertex> mapped;
        for (Vertex u : nbrs) mapped.push_back(label.at(u));
        auto smallest = std::min_element(mapped.begin(), mapped.end());
        std::rotate(mapped.begin(), smallest, mapped.end());
        os << label.at(v) << ':';
        for (Vertex u : mapped) os << ' ' << u;
        os << '\n';
    }
    if (g.has_outer_face()) {
        os << "outer:";
        for (Vertex v : g.outer_face().boundary()) os << ' ' << label.at(v);
        os << '\n';
    }
    return os.str();
}

void write_graph_file(const std::string& path, const PlaneGraph& g) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << serialize(g);
}

}  // namespace trifree
