#include "domqubo/penalty.hpp"

#include <bit>
#include <set>
#include <stdexcept>

#include "domqubo/errors.hpp"

namespace domqubo {

int bit_length(long long n) {
    if (n < 1) throw std::invalid_argument("bit_length requires n >= 1");
    return std::bit_width(static_cast<unsigned long long>(n));
}

SlackEncoding slack_encoding(int n) {
    if (n < 3) throw std::invalid_argument("slack encoding requires arity >= 3");
    const int m = bit_length(n - 1);
    SlackEncoding enc;
    enc.n = n;
    long long low_sum = 0;
    for (int i = 0; i + 1 < m; ++i) {
        enc.coefficients.push_back(1ll << i);
        low_sum += 1ll << i;
    }
    enc.coefficients.push_back((n - 1) - low_sum);
    return enc;
}

PenaltyTerm coverage_penalty(const VertexSet& vars, int next_free_index, double p) {
    if (p <= 0.0) throw std::invalid_argument("penalty weight must be positive");
    if (vars.empty())
        throw InfeasibleError("coverage constraint over an empty set can never hold");

    PenaltyTerm term;
    term.kind = PenaltyKind::Coverage;
    const int n = static_cast<int>(vars.size());
    if (n == 1) {
        term.poly = add_scaled(QuboPoly{}, square_affine({{vars[0], 1.0}}, -1.0), p);
        return term;
    }
    if (n == 2) {
        QuboPoly poly(std::max(vars[0], vars[1]) + 1);
        poly.add_constant(p);
        poly.add_linear(vars[0], -p);
        poly.add_linear(vars[1], -p);
        poly.add_quadratic(vars[0], vars[1], p);
        term.poly = std::move(poly);
        return term;
    }
    const auto enc = slack_encoding(n);
    std::map<int, double> coeffs;
    for (int v : vars) coeffs[v] = 1.0;
    for (std::size_t b = 0; b < enc.coefficients.size(); ++b) {
        const int idx = next_free_index + static_cast<int>(b);
        coeffs[idx] = -static_cast<double>(enc.coefficients[b]);
        term.slack_vars.push_back(idx);
    }
    term.poly = add_scaled(QuboPoly{}, square_affine(coeffs, -1.0), p);
    return term;
}

PenaltyTerm independence_penalty(int i, int j, double p) {
    if (p <= 0.0) throw std::invalid_argument("penalty weight must be positive");
    if (i == j) throw std::invalid_argument("independence penalty needs two distinct variables");
    PenaltyTerm term;
    term.kind = PenaltyKind::Independence;
    QuboPoly poly(std::max(i, j) + 1);
    poly.add_quadratic(i, j, p);
    term.poly = std::move(poly);
    return term;
}

PenaltyTerm perfect_penalty(const Graph& g, double p) {
    if (p <= 0.0) throw std::invalid_argument("penalty weight must be positive");
    PenaltyTerm term;
    term.kind = PenaltyKind::Perfect;
    QuboPoly poly(g.num_vertices());
    poly.add_constant(-p * g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) poly.add_linear(v, p * (g.degree(v) + 1));
    for (auto [u, v] : g.edges()) poly.add_quadratic(u, v, -2.0 * p);
    term.poly = std::move(poly);
    return term;
}

PenaltyTerm clique_penalty(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                           double p) {
    if (p <= 0.0) throw std::invalid_argument("penalty weight must be positive");
    PenaltyTerm term;
    term.kind = PenaltyKind::Clique;
    std::set<std::pair<int, int>> edge_set;
    for (auto [u, v] : edges) edge_set.insert(u < v ? std::pair{u, v} : std::pair{v, u});
    QuboPoly poly(num_vertices);
    for (int u = 0; u < num_vertices; ++u) {
        for (int v = u + 1; v < num_vertices; ++v) {
            if (!edge_set.count({u, v})) poly.add_quadratic(u, v, p);
        }
    }
    term.poly = std::move(poly);
    return term;
}

}  // namespace domqubo
