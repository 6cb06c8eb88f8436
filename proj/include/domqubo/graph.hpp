#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace domqubo {

// Sorted list of distinct vertex indices.
using VertexSet = std::vector<int>;

/// Immutable undirected simple graph with stable 0-based vertex indexing.
/// Labels keep the names vertices had in the input file; labels[i] is the
/// label of vertex i.
class Graph {
public:
    Graph() = default;

    // Validates: no self-loops, no duplicate edges, endpoints in range,
    // exactly n distinct labels. Throws std::invalid_argument on violation.
    Graph(std::vector<std::string> labels, std::vector<std::pair<int, int>> edges);

    // Convenience constructor with labels "0".."n-1".
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return labels_.empty(); }

    // Edges normalized to (u < v), sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const;

    bool has_edge(int u, int v) const;
    int degree(int v) const;

    // Sorted neighbor list, excluding v itself.
    const VertexSet& neighbors(int v) const;

    // {v} together with its neighbors, sorted.
    VertexSet closed_neighborhood(int v) const;
    // Neighbors of v, sorted.
    VertexSet open_neighborhood(int v) const;

    // Hop distances from src; -1 for unreachable vertices.
    std::vector<int> bfs_distances(int src) const;

    // Content hash covering vertex count, edge set and labels.
    std::uint64_t fingerprint() const;

    // Text form that parse_edge_list() reads back to an identical Graph.
    std::string to_edge_list() const;

    bool operator==(const Graph& other) const {
        return labels_ == other.labels_ && edges_ == other.edges_;
    }

private:
    void check_vertex(int v) const;

    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<VertexSet> adj_;
};

// Edge-list format: one "labelA labelB" edge per line, "v label" declares a
// vertex without edges, '#' starts a comment line, blank lines are skipped.
// Vertex indices are assigned by first appearance.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

// DIMACS format: "p edge <n> <m>" header, "e <u> <v>" with 1-based
// endpoints, "c" comment lines. Labels become "1".."n".
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(const std::string& text);

// Graph with the same vertices and an edge wherever 0 < d(u,v) <= k.
// k < 1 throws std::invalid_argument; graph_power(g, 1) == g.
Graph graph_power(const Graph& g, int k);

}  // namespace domqubo
