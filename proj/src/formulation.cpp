#include "domqubo/formulation.hpp"

#include <stdexcept>

#include "domqubo/errors.hpp"

namespace domqubo {

VariantKind VariantKind::k_domination(int k) {
    if (k < 1) throw std::invalid_argument("k-domination requires k >= 1");
    return {Variant::KDomination, k};
}

std::string VariantKind::name() const {
    switch (variant) {
        case Variant::Classic: return "classic";
        case Variant::Independent: return "independent";
        case Variant::Total: return "total";
        case Variant::Perfect: return "perfect";
        case Variant::Clique: return "clique";
        case Variant::IndependentPerfect: return "independent-perfect";
        case Variant::TotalPerfect: return "total-perfect";
        case Variant::KDomination: return "k-domination";
    }
    return "?";
}

std::optional<Variant> VariantKind::variant_from_name(const std::string& name) {
    if (name == "classic") return Variant::Classic;
    if (name == "independent") return Variant::Independent;
    if (name == "total") return Variant::Total;
    if (name == "perfect") return Variant::Perfect;
    if (name == "clique") return Variant::Clique;
    if (name == "independent-perfect") return Variant::IndependentPerfect;
    if (name == "total-perfect") return Variant::TotalPerfect;
    if (name == "k-domination") return Variant::KDomination;
    return std::nullopt;
}

std::string VariantKind::gamma_symbol() const {
    switch (variant) {
        case Variant::Classic: return "gamma";
        case Variant::Independent: return "gamma_i";
        case Variant::Total: return "gamma_t";
        case Variant::Perfect: return "gamma_per";
        case Variant::Clique: return "gamma_cl";
        case Variant::IndependentPerfect: return "gamma_iper";
        case Variant::TotalPerfect: return "gamma_tper";
        case Variant::KDomination: return "gamma_" + std::to_string(k);
    }
    return "?";
}

std::vector<VariantKind> all_variants(int k_for_kdom) {
    return {VariantKind::classic(),
            VariantKind::independent(),
            VariantKind::total(),
            VariantKind::perfect(),
            VariantKind::clique(),
            VariantKind::independent_perfect(),
            VariantKind::total_perfect(),
            VariantKind::k_domination(k_for_kdom)};
}

double default_penalty(const Graph& g) { return g.num_vertices() + 1.0; }

namespace {

int slack_bits_for_arity(int arity) { return arity <= 2 ? 0 : bit_length(arity - 1); }

// Coverage constraints come from closed neighborhoods, open neighborhoods
// (total family) or closed neighborhoods of the k-th graph power.
Graph coverage_graph(const Graph& g, VariantKind variant) {
    if (variant.variant == Variant::KDomination) return graph_power(g, variant.k);
    return g;
}

VertexSet coverage_vars(const Graph& cov_g, VariantKind variant, int v) {
    return variant.uses_open_neighborhood() ? cov_g.open_neighborhood(v)
                                            : cov_g.closed_neighborhood(v);
}

void check_buildable(const Graph& g, VariantKind variant) {
    if (g.empty()) throw std::invalid_argument("cannot build a model for an empty graph");
    if (variant.uses_open_neighborhood()) {
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (g.degree(v) == 0)
                throw InfeasibleError("vertex \"" + g.label(v) +
                                      "\" is isolated; total domination is infeasible");
        }
    }
}

}  // namespace

int variable_count(const Graph& g, VariantKind variant) {
    check_buildable(g, variant);
    const Graph cov_g = coverage_graph(g, variant);
    int count = g.num_vertices();
    for (int v = 0; v < g.num_vertices(); ++v) {
        const int arity = static_cast<int>(coverage_vars(cov_g, variant, v).size());
        count += slack_bits_for_arity(arity);
    }
    return count;
}

int variable_count_bound(const Graph& g) { return g.num_vertices() + 2 * g.num_edges(); }

QuboModel build_model(const Graph& g, VariantKind variant, double p) {
    return build_model(g, variant, p, PenaltyWeights::uniform(p));
}

QuboModel build_model(const Graph& g, VariantKind variant, double p, const PenaltyWeights& w) {
    if (p <= 0.0) throw std::invalid_argument("penalty weight must be positive");
    check_buildable(g, variant);

    QuboModel model;
    model.variant = variant;
    model.penalty = p;
    model.weights = w;
    model.graph = g;
    model.graph_fingerprint = g.fingerprint();
    model.vmap.num_vertex_vars = g.num_vertices();

    const Graph cov_g = coverage_graph(g, variant);
    model.poly = QuboPoly(variable_count(g, variant));

    // objective: |D|
    for (int v = 0; v < g.num_vertices(); ++v) model.poly.add_linear(v, 1.0);

    // one coverage constraint per vertex, slack bits allocated in vertex order
    int next_free = g.num_vertices();
    for (int v = 0; v < g.num_vertices(); ++v) {
        const VertexSet vars = coverage_vars(cov_g, variant, v);
        PenaltyTerm term = coverage_penalty(vars, next_free, w.coverage);
        model.poly.add_scaled(term.poly, 1.0);
        if (!term.slack_vars.empty()) {
            SlackGroup group;
            group.vertex = v;
            group.indices = term.slack_vars;
            group.coefficients = slack_encoding(static_cast<int>(vars.size())).coefficients;
            next_free += static_cast<int>(group.indices.size());
            model.vmap.slack_groups.push_back(std::move(group));
        }
    }

    if (variant.uses_independence()) {
        for (auto [u, v] : g.edges())
            model.poly.add_scaled(independence_penalty(u, v, w.independence).poly, 1.0);
    }
    if (variant.uses_perfect())
        model.poly.add_scaled(perfect_penalty(g, w.perfect).poly, 1.0);
    if (variant.uses_clique())
        model.poly.add_scaled(clique_penalty(g.num_vertices(), g.edges(), w.clique).poly, 1.0);

    return model;
}

double feasible_energy_offset(const QuboModel& model) {
    (void)model;
    return 0.0;
}

}  // namespace domqubo
