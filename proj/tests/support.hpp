#pragma once

// Shared helpers for the test suites: fixture graphs, graph enumeration and
// random instances, and brute-force evaluation utilities that stay
// independent of the library's solver path.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "domqubo/formulation.hpp"
#include "domqubo/graph.hpp"
#include "domqubo/qubo.hpp"

namespace testsupport {

// Triangle 0-1-2 with pendant vertex 3 attached to 2 (the paw graph).
inline domqubo::Graph paw() {
    return domqubo::parse_edge_list("0 1\n0 2\n1 2\n2 3\n");
}

inline domqubo::Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return domqubo::Graph::from_edges(n, std::move(edges));
}

inline domqubo::Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return domqubo::Graph::from_edges(n, std::move(edges));
}

inline domqubo::Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return domqubo::Graph::from_edges(n, std::move(edges));
}

// Graph on n vertices whose edge set is selected by the bits of mask, taken
// over pairs (0,1),(0,2),(1,2),(0,3),... in column order.
inline domqubo::Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (mask & (1ull << bit)) edges.emplace_back(u, v);
    return domqubo::Graph::from_edges(n, std::move(edges));
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline domqubo::Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(i, j);
    return domqubo::Graph::from_edges(n, std::move(edges));
}

inline domqubo::Assignment assignment_from_mask(std::uint64_t mask, int n) {
    domqubo::Assignment a(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    return a;
}

inline domqubo::VertexSet set_from_mask(std::uint64_t mask, int n) {
    domqubo::VertexSet d;
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) d.push_back(i);
    return d;
}

// Random canonical polynomial with integer or half-integer coefficients,
// the exactly representable domain the library promises exact math for.
inline domqubo::QuboPoly random_poly(std::mt19937_64& rng, int num_vars, bool halves = true) {
    domqubo::QuboPoly poly(num_vars);
    auto coeff = [&]() {
        const int raw = static_cast<int>(rng() % 41) - 20;  // -20..20
        return halves ? raw / 2.0 : static_cast<double>(raw);
    };
    poly.add_constant(coeff());
    for (int i = 0; i < num_vars; ++i)
        if (rng() % 4 != 0) poly.add_linear(i, coeff());
    for (int i = 0; i < num_vars; ++i)
        for (int j = i + 1; j < num_vars; ++j)
            if (rng() % 2 == 0) poly.add_quadratic(i, j, coeff());
    return poly;
}

// Minimum model energy over all slack completions for fixed vertex bits.
// Slack groups touch disjoint variables, so each group can be minimized on
// its own; within a group all bit patterns are enumerated.
inline double best_energy_for_projection(const domqubo::QuboModel& model,
                                         const domqubo::Assignment& vertex_bits) {
    using namespace domqubo;
    Assignment a(static_cast<std::size_t>(model.poly.num_vars()), 0);
    for (int v = 0; v < model.vmap.num_vertex_vars; ++v)
        a[static_cast<std::size_t>(v)] = vertex_bits[static_cast<std::size_t>(v)];
    double energy = evaluate(model.poly, a);
    for (const auto& group : model.vmap.slack_groups) {
        const int bits = static_cast<int>(group.indices.size());
        double best_gain = 0.0;
        Assignment best = a;
        for (std::uint64_t mask = 1; mask < (1ull << bits); ++mask) {
            Assignment trial = a;
            for (int b = 0; b < bits; ++b)
                trial[static_cast<std::size_t>(group.indices[b])] = (mask >> b) & 1u;
            const double gain = evaluate(model.poly, trial) - energy;
            if (gain < best_gain) {
                best_gain = gain;
                best = trial;
            }
        }
        a = best;
        energy += best_gain;
    }
    return energy;
}

}  // namespace testsupport
