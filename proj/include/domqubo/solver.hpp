#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domqubo/formulation.hpp"
#include "domqubo/qubo.hpp"

namespace domqubo {

enum class SolveMethod { Exhaustive, Anneal };

/// Solver output. Every listed assignment evaluates to min_energy; the list
/// is sorted lexicographically. Exhaustive results are global optima,
/// anneal results are upper bounds.
struct SolveResult {
    double min_energy = 0.0;
    std::vector<Assignment> argmin;
    std::uint64_t evaluations = 0;
    SolveMethod method = SolveMethod::Exhaustive;
    std::optional<std::uint64_t> seed;
};

/// Annealing schedule. t_initial <= 0 means "derive from the polynomial"
/// (largest absolute coefficient).
struct AnnealParams {
    int sweeps = 1000;
    int restarts = 8;
    double t_initial = 0.0;
    double t_final = 0.01;
    std::uint64_t seed = 1;
};

inline constexpr int kDefaultMaxExhaustiveVars = 26;
inline constexpr int kDefaultArgminCap = 64;

// Enumerates all 2^n assignments with incremental single-flip energy
// updates; returns the global minimum and up to argmin_cap
// lexicographically smallest argmins. Throws SizeError above max_vars.
SolveResult solve_exhaustive(const QuboPoly& poly, int max_vars = kDefaultMaxExhaustiveVars,
                             int argmin_cap = kDefaultArgminCap);
SolveResult solve_exhaustive(const QuboModel& model, int max_vars = kDefaultMaxExhaustiveVars,
                             int argmin_cap = kDefaultArgminCap);

// Single-bit-flip Metropolis chains with geometric cooling, one independent
// deterministic random stream per restart. Same (poly, params) gives a
// bit-identical result.
SolveResult solve_anneal(const QuboPoly& poly, const AnnealParams& params);
SolveResult solve_anneal(const QuboModel& model, const AnnealParams& params);

}  // namespace domqubo
