#pragma once

#include <vector>

#include "domqubo/graph.hpp"
#include "domqubo/qubo.hpp"

namespace domqubo {

// Number of digits in the binary representation of n (n >= 1).
int bit_length(long long n);

/// Binary slack encoding for a coverage constraint of arity n >= 3.
/// The m = bit_length(n-1) coefficients are 1, 2, 4, ... for the low bits
/// and (n-1) - (2^(m-1) - 1) for the last, so the encoded values run over
/// exactly {0, 1, ..., n-1}.
struct SlackEncoding {
    int n = 0;
    std::vector<long long> coefficients;  // least-significant first
};

SlackEncoding slack_encoding(int n);

enum class PenaltyKind { Coverage, Independence, Perfect, Clique };

/// One penalty contribution. The polynomial spans the model's variable index
/// space; slack_vars lists any freshly introduced slack bit indices in
/// coefficient order (empty for penalties that need none).
struct PenaltyTerm {
    QuboPoly poly;
    PenaltyKind kind = PenaltyKind::Coverage;
    std::vector<int> slack_vars;
};

// Penalty for "sum of vars >= 1". Arity 1 uses P*(x-1)^2, arity 2 the
// product form P*(1 - x_a - x_b + x_a*x_b), arity >= 3 the squared form
// P*(sum vars - sum C_i*s_i - 1)^2 with slack bits allocated from
// next_free_index. Empty vars throws InfeasibleError: no assignment can
// cover the constraint.
PenaltyTerm coverage_penalty(const VertexSet& vars, int next_free_index, double p);

// P * x_i * x_j; zero exactly when the pair is not jointly selected.
PenaltyTerm independence_penalty(int i, int j, double p);

// Linear one-sided penalty P*(cut(D) - |V \ D|) where cut(D) counts edges
// with exactly one endpoint selected. Zero on perfect dominating sets;
// may be negative when the domination constraints are violated.
PenaltyTerm perfect_penalty(const Graph& g, double p);

// P per selected non-adjacent pair: the expansion of
// P*(c*(c-1)/2 - edges inside D). Zero exactly when D induces a clique.
PenaltyTerm clique_penalty(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                           double p);

}  // namespace domqubo
