#include "domqubo/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "domqubo/errors.hpp"

namespace domqubo {

namespace {

std::vector<char> membership(const Graph& g, const VertexSet& d) {
    std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int v : d) {
        if (v < 0 || v >= g.num_vertices())
            throw std::invalid_argument("subset member out of range");
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

int dominator_count(const Graph& g, const std::vector<char>& in, int v) {
    int count = 0;
    for (int u : g.neighbors(v)) count += in[static_cast<std::size_t>(u)];
    return count;
}

bool dominating(const Graph& g, const std::vector<char>& in) {
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (in[static_cast<std::size_t>(v)]) continue;
        if (dominator_count(g, in, v) == 0) return false;
    }
    return true;
}

bool total_dominating(const Graph& g, const std::vector<char>& in) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (dominator_count(g, in, v) == 0) return false;
    return true;
}

bool independent(const Graph& g, const std::vector<char>& in) {
    for (auto [u, v] : g.edges())
        if (in[static_cast<std::size_t>(u)] && in[static_cast<std::size_t>(v)]) return false;
    return true;
}

// Every vertex outside D has exactly one neighbor inside it.
bool perfect(const Graph& g, const std::vector<char>& in) {
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (in[static_cast<std::size_t>(v)]) continue;
        if (dominator_count(g, in, v) != 1) return false;
    }
    return true;
}

bool clique(const Graph& g, const VertexSet& d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (!g.has_edge(d[i], d[j])) return false;
    return true;
}

// Multi-source BFS: is every vertex within distance k of some member of D?
bool k_dominating(const Graph& g, const VertexSet& d, int k) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    std::vector<int> dist(n, -1);
    std::deque<int> queue;
    for (int v : d) {
        dist[static_cast<std::size_t>(v)] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        if (dist[static_cast<std::size_t>(u)] >= k) continue;
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return std::all_of(dist.begin(), dist.end(), [](int x) { return x >= 0; });
}

}  // namespace

bool is_variant_set(const Graph& g, const VertexSet& d, VariantKind variant) {
    const auto in = membership(g, d);
    switch (variant.variant) {
        case Variant::Classic:
            return dominating(g, in);
        case Variant::Independent:
            return dominating(g, in) && independent(g, in);
        case Variant::Total:
            return total_dominating(g, in);
        case Variant::Perfect:
            return dominating(g, in) && perfect(g, in);
        case Variant::Clique:
            return dominating(g, in) && clique(g, d);
        case Variant::IndependentPerfect:
            return dominating(g, in) && independent(g, in) && perfect(g, in);
        case Variant::TotalPerfect:
            return total_dominating(g, in) && perfect(g, in);
        case Variant::KDomination:
            return k_dominating(g, d, variant.k);
    }
    return false;
}

std::optional<GammaWitness> oracle_gamma(const Graph& g, VariantKind variant) {
    const int n = g.num_vertices();
    if (n > kMaxOracleVertices)
        throw SizeError("subset enumeration limited to " + std::to_string(kMaxOracleVertices) +
                        " vertices, got " + std::to_string(n));
    for (int size = 0; size <= n; ++size) {
        // lexicographically ordered combinations of the given size
        VertexSet comb(static_cast<std::size_t>(size));
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            if (is_variant_set(g, comb, variant)) return GammaWitness{size, comb};
            int i = size - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

VertexSet vertex_projection(const QuboModel& model, const Assignment& a) {
    VertexSet d;
    for (int v = 0; v < model.vmap.num_vertex_vars; ++v)
        if (a[static_cast<std::size_t>(v)]) d.push_back(v);
    return d;
}

VerificationReport verify_solution(const Graph& g, const QuboModel& model, const Assignment& a) {
    if (static_cast<int>(a.size()) != model.vmap.total_variables())
        throw std::invalid_argument("assignment length " + std::to_string(a.size()) +
                                    " does not match the model's " +
                                    std::to_string(model.vmap.total_variables()) + " variables");
    if (g.fingerprint() != model.graph_fingerprint)
        throw std::invalid_argument("graph does not match the model's fingerprint");

    const VariantKind variant = model.variant;
    const VertexSet d = vertex_projection(model, a);
    const auto in = membership(g, d);

    VerificationReport report;
    report.set_size = static_cast<int>(d.size());
    const double energy = evaluate(model.poly, a);
    report.penalty_residual = energy - static_cast<double>(d.size());

    const Graph cov_g =
        variant.variant == Variant::KDomination ? graph_power(g, variant.k) : g;
    auto coverage_sum = [&](int v) {
        VertexSet vars = variant.uses_open_neighborhood() ? cov_g.open_neighborhood(v)
                                                          : cov_g.closed_neighborhood(v);
        int sum = 0;
        for (int u : vars) sum += in[static_cast<std::size_t>(u)];
        return sum;
    };

    for (int v = 0; v < g.num_vertices(); ++v) {
        if (coverage_sum(v) > 0) continue;
        if (variant.variant == Variant::KDomination)
            report.violated_constraints.push_back("vertex " + g.label(v) +
                                                  ": no member of D within distance " +
                                                  std::to_string(variant.k));
        else if (variant.uses_open_neighborhood())
            report.violated_constraints.push_back("vertex " + g.label(v) +
                                                  ": no neighbor in D");
        else
            report.violated_constraints.push_back("vertex " + g.label(v) + ": not dominated");
    }

    // slack bits must encode (coverage sum - 1) for the squared term to vanish
    for (const auto& group : model.vmap.slack_groups) {
        const int sum = coverage_sum(group.vertex);
        if (sum == 0) continue;  // already reported above
        long long encoded = 0;
        for (std::size_t b = 0; b < group.indices.size(); ++b)
            if (a[static_cast<std::size_t>(group.indices[b])]) encoded += group.coefficients[b];
        if (encoded != sum - 1)
            report.violated_constraints.push_back(
                "coverage slack at vertex " + g.label(group.vertex) + " encodes " +
                std::to_string(encoded) + ", expected " + std::to_string(sum - 1));
    }

    if (variant.uses_independence()) {
        for (auto [u, v] : g.edges()) {
            if (in[static_cast<std::size_t>(u)] && in[static_cast<std::size_t>(v)])
                report.violated_constraints.push_back("edge (" + g.label(u) + "," + g.label(v) +
                                                      ") has both endpoints in D");
        }
    }
    if (variant.uses_perfect()) {
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (in[static_cast<std::size_t>(v)]) continue;
            const int doms = dominator_count(g, in, v);
            if (doms != 1)
                report.violated_constraints.push_back("vertex " + g.label(v) + ": dominated by " +
                                                      std::to_string(doms) +
                                                      " vertices, expected exactly 1");
        }
    }
    if (variant.uses_clique()) {
        for (std::size_t i = 0; i < d.size(); ++i) {
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                if (!g.has_edge(d[i], d[j]))
                    report.violated_constraints.push_back("pair (" + g.label(d[i]) + "," +
                                                          g.label(d[j]) + ") not an edge");
            }
        }
    }

    report.feasible =
        is_variant_set(g, d, variant) && report.penalty_residual == 0.0;
    return report;
}

}  // namespace domqubo
