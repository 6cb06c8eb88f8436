#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domqubo/formulation.hpp"
#include "domqubo/graph.hpp"

namespace domqubo {

// Direct evaluation of the variant's predicate on a vertex subset. This
// path never touches the QUBO machinery: adjacency and BFS only.
bool is_variant_set(const Graph& g, const VertexSet& d, VariantKind variant);

struct GammaWitness {
    int size = 0;
    VertexSet set;
};

inline constexpr int kMaxOracleVertices = 24;

// Smallest satisfying subset by exhaustive enumeration, increasing size and
// lexicographic within a size; nullopt when no subset satisfies the
// predicate. Throws SizeError above kMaxOracleVertices vertices.
std::optional<GammaWitness> oracle_gamma(const Graph& g, VariantKind variant);

/// Assessment of one full assignment against a model: the variant predicate
/// on the vertex projection plus the penalty energy above |D|.
struct VerificationReport {
    bool feasible = false;
    std::vector<std::string> violated_constraints;
    int set_size = 0;
    double penalty_residual = 0.0;
};

VerificationReport verify_solution(const Graph& g, const QuboModel& model, const Assignment& a);

// Vertex-variable prefix of an assignment as a sorted vertex set.
VertexSet vertex_projection(const QuboModel& model, const Assignment& a);

}  // namespace domqubo
