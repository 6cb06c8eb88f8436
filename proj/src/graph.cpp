#include "domqubo/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "domqubo/errors.hpp"

namespace domqubo {

Graph::Graph(std::vector<std::string> labels, std::vector<std::pair<int, int>> edges)
    : labels_(std::move(labels)) {
    const int n = num_vertices();
    {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels_) {
            if (!seen.insert(l).second)
                throw std::invalid_argument("duplicate vertex label: " + l);
        }
    }
    std::set<std::pair<int, int>> canon;
    for (auto [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
        if (!canon.insert({u, v}).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
    }
    edges_.assign(canon.begin(), canon.end());
    adj_.assign(n, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return Graph(std::move(labels), std::move(edges));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= num_vertices())
        throw std::invalid_argument("vertex index " + std::to_string(v) + " out of range");
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    return labels_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

const VertexSet& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

VertexSet Graph::closed_neighborhood(int v) const {
    check_vertex(v);
    VertexSet out = adj_[static_cast<std::size_t>(v)];
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

VertexSet Graph::open_neighborhood(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<int> Graph::bfs_distances(int src) const {
    check_vertex(src);
    std::vector<int> dist(static_cast<std::size_t>(num_vertices()), -1);
    std::deque<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : adj_[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

namespace {

void fnv_mix(std::uint64_t& h, std::uint64_t value) {
    // FNV-1a over the 8 bytes of value
    for (int i = 0; i < 8; ++i) {
        h ^= (value >> (8 * i)) & 0xffu;
        h *= 0x100000001b3ull;
    }
}

void fnv_mix(std::uint64_t& h, const std::string& s) {
    fnv_mix(h, s.size());
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
}

}  // namespace

std::uint64_t Graph::fingerprint() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    fnv_mix(h, static_cast<std::uint64_t>(num_vertices()));
    for (auto [u, v] : edges_) {
        fnv_mix(h, static_cast<std::uint64_t>(u));
        fnv_mix(h, static_cast<std::uint64_t>(v));
    }
    for (const auto& l : labels_) fnv_mix(h, l);
    return h;
}

std::string Graph::to_edge_list() const {
    // Declare every vertex up front so reparsing assigns identical indices,
    // then list the edges. An edge whose first label is the literal "v"
    // is flipped so the line is not read as a declaration.
    std::ostringstream out;
    for (const auto& l : labels_) out << "v " << l << "\n";
    for (auto [u, v] : edges_) {
        const std::string& a = labels_[static_cast<std::size_t>(u)];
        const std::string& b = labels_[static_cast<std::size_t>(v)];
        if (a == "v")
            out << b << " " << a << "\n";
        else
            out << a << " " << b << "\n";
    }
    return out.str();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream iss(line);
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::unordered_map<std::string, int> index_of;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;

    auto intern = [&](const std::string& label) {
        auto [it, inserted] = index_of.try_emplace(label, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string where = "line " + std::to_string(lineno);
        if (toks[0] == "v") {
            if (toks.size() != 2)
                throw ParseError(where + ": vertex declaration needs exactly one label");
            intern(toks[1]);
            continue;
        }
        if (toks.size() != 2)
            throw ParseError(where + ": expected two labels, got " +
                             std::to_string(toks.size()) + " tokens");
        if (toks[0] == toks[1])
            throw ParseError(where + ": self-loop on \"" + toks[0] + "\"");
        int u = intern(toks[0]);
        int v = intern(toks[1]);
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw ParseError(where + ": duplicate edge \"" + toks[0] + " " + toks[1] + "\"");
        edges.emplace_back(u, v);
    }
    return Graph(std::move(labels), std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph parse_dimacs(std::istream& in) {
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        const std::string where = "line " + std::to_string(lineno);
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError(where + ": repeated problem line");
            if (toks.size() != 4 || toks[1] != "edge")
                throw ParseError(where + ": expected \"p edge <n> <m>\"");
            try {
                n = std::stoi(toks[2]);
                m = std::stoi(toks[3]);
            } catch (const std::exception&) {
                throw ParseError(where + ": bad problem-line numbers");
            }
            if (n < 0 || m < 0) throw ParseError(where + ": negative count");
            continue;
        }
        if (toks[0] == "e") {
            if (n < 0) throw ParseError(where + ": edge before problem line");
            if (toks.size() != 3) throw ParseError(where + ": expected \"e <u> <v>\"");
            int u, v;
            try {
                u = std::stoi(toks[1]);
                v = std::stoi(toks[2]);
            } catch (const std::exception&) {
                throw ParseError(where + ": bad edge endpoints");
            }
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(where + ": endpoint out of [1," + std::to_string(n) + "]");
            if (u == v) throw ParseError(where + ": self-loop on vertex " + toks[1]);
            --u;
            --v;
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second)
                throw ParseError(where + ": duplicate edge");
            edges.emplace_back(u, v);
            continue;
        }
        throw ParseError(where + ": unknown line type \"" + toks[0] + "\"");
    }
    if (n < 0) throw ParseError("missing \"p edge\" problem line");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(edges.size()) + " were given");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return Graph(std::move(labels), std::move(edges));
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

Graph graph_power(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("graph power requires k >= 1");
    std::vector<std::pair<int, int>> edges;
    const int n = g.num_vertices();
    for (int u = 0; u < n; ++u) {
        const auto dist = g.bfs_distances(u);
        for (int v = u + 1; v < n; ++v) {
            const int d = dist[static_cast<std::size_t>(v)];
            if (d > 0 && d <= k) edges.emplace_back(u, v);
        }
    }
    return Graph(g.labels(), std::move(edges));
}

}  // namespace domqubo
