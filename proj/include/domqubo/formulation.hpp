#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domqubo/graph.hpp"
#include "domqubo/penalty.hpp"
#include "domqubo/qubo.hpp"

namespace domqubo {

enum class Variant {
    Classic,
    Independent,
    Total,
    Perfect,
    Clique,
    IndependentPerfect,
    TotalPerfect,
    KDomination,
};

/// A problem variant; KDomination additionally carries the distance bound k.
struct VariantKind {
    Variant variant = Variant::Classic;
    int k = 1;  // meaningful for KDomination only

    static VariantKind classic() { return {Variant::Classic, 1}; }
    static VariantKind independent() { return {Variant::Independent, 1}; }
    static VariantKind total() { return {Variant::Total, 1}; }
    static VariantKind perfect() { return {Variant::Perfect, 1}; }
    static VariantKind clique() { return {Variant::Clique, 1}; }
    static VariantKind independent_perfect() { return {Variant::IndependentPerfect, 1}; }
    static VariantKind total_perfect() { return {Variant::TotalPerfect, 1}; }
    static VariantKind k_domination(int k);

    // CLI/JSON name: "classic", "independent", ..., "k-domination".
    std::string name() const;
    static std::optional<Variant> variant_from_name(const std::string& name);

    // "gamma", "gamma_i", "gamma_t", ... for report lines.
    std::string gamma_symbol() const;

    bool uses_open_neighborhood() const {
        return variant == Variant::Total || variant == Variant::TotalPerfect;
    }
    bool uses_independence() const {
        return variant == Variant::Independent || variant == Variant::IndependentPerfect;
    }
    bool uses_perfect() const {
        return variant == Variant::Perfect || variant == Variant::IndependentPerfect ||
               variant == Variant::TotalPerfect;
    }
    bool uses_clique() const { return variant == Variant::Clique; }

    bool operator==(const VariantKind& o) const {
        return variant == o.variant && (variant != Variant::KDomination || k == o.k);
    }
};

// All eight variants, KDomination instantiated at the given k.
std::vector<VariantKind> all_variants(int k_for_kdom = 2);

/// Per-family penalty weights. uniform(P) is the default; a larger coverage
/// weight can be set to keep the one-sided perfect penalty from rewarding
/// assignments that violate domination.
struct PenaltyWeights {
    double coverage = 1.0;
    double independence = 1.0;
    double perfect = 1.0;
    double clique = 1.0;

    static PenaltyWeights uniform(double p) { return {p, p, p, p}; }
    bool is_uniform(double p) const {
        return coverage == p && independence == p && perfect == p && clique == p;
    }
};

/// Slack bits introduced by one coverage constraint.
struct SlackGroup {
    int vertex = 0;                       // constraint's source vertex
    std::vector<int> indices;             // contiguous variable indices
    std::vector<long long> coefficients;  // encoding weights, matching indices
};

/// Layout of the model's variable index space: vertex v <-> variable v for
/// v < num_vertex_vars, slack bits follow in ascending source-vertex order.
struct VariableMap {
    int num_vertex_vars = 0;
    std::vector<SlackGroup> slack_groups;

    int total_variables() const {
        int total = num_vertex_vars;
        for (const auto& g : slack_groups) total += static_cast<int>(g.indices.size());
        return total;
    }
    const SlackGroup* group_for_vertex(int v) const {
        for (const auto& g : slack_groups)
            if (g.vertex == v) return &g;
        return nullptr;
    }
};

/// A compiled model: the polynomial, its variable layout and enough build
/// metadata (variant, weights, source graph) to verify solutions later.
struct QuboModel {
    QuboPoly poly;
    VariableMap vmap;
    VariantKind variant;
    double penalty = 0.0;    // base weight P
    PenaltyWeights weights;  // per-family weights, typically uniform(P)
    Graph graph;
    std::uint64_t graph_fingerprint = 0;
};

// Default base penalty weight: |V| + 1, strictly above any objective value.
double default_penalty(const Graph& g);

QuboModel build_model(const Graph& g, VariantKind variant, double p);
QuboModel build_model(const Graph& g, VariantKind variant, double p, const PenaltyWeights& w);

// Exact variable count of build_model without building it.
int variable_count(const Graph& g, VariantKind variant);

// Theorem-style bound |V| + 2|E| on the classic formulation's variables.
int variable_count_bound(const Graph& g);

// Energy in excess of |D| at a feasible point; identically 0 for every
// variant here, kept explicit so callers can report energy as set size.
double feasible_energy_offset(const QuboModel& model);

}  // namespace domqubo
