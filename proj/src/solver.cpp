#include "domqubo/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "domqubo/errors.hpp"

namespace domqubo {

namespace {

// Flattened view of a polynomial for O(deg) single-flip deltas.
struct FlipTable {
    std::vector<double> linear;
    std::vector<std::vector<std::pair<int, double>>> adjacent;

    explicit FlipTable(const QuboPoly& poly)
        : linear(static_cast<std::size_t>(poly.num_vars()), 0.0),
          adjacent(static_cast<std::size_t>(poly.num_vars())) {
        for (auto [i, c] : poly.linear()) linear[static_cast<std::size_t>(i)] = c;
        for (auto [ij, c] : poly.quadratic()) {
            adjacent[static_cast<std::size_t>(ij.first)].emplace_back(ij.second, c);
            adjacent[static_cast<std::size_t>(ij.second)].emplace_back(ij.first, c);
        }
    }

    // Energy change of flipping bit i, evaluated before the flip.
    double delta(const Assignment& x, int i) const {
        double slope = linear[static_cast<std::size_t>(i)];
        for (auto [j, c] : adjacent[static_cast<std::size_t>(i)])
            if (x[static_cast<std::size_t>(j)]) slope += c;
        return x[static_cast<std::size_t>(i)] ? -slope : slope;
    }
};

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SolveResult solve_exhaustive(const QuboPoly& poly, int max_vars, int argmin_cap) {
    const int n = poly.num_vars();
    if (n > max_vars || n >= 64)
        throw SizeError("exhaustive search over " + std::to_string(n) + " variables exceeds the " +
                        std::to_string(std::min(max_vars, 63)) +
                        "-variable guard; use the anneal method");
    if (argmin_cap < 1) throw std::invalid_argument("argmin_cap must be >= 1");

    SolveResult result;
    result.method = SolveMethod::Exhaustive;
    if (n == 0) {
        result.min_energy = poly.offset();
        result.argmin.push_back({});
        result.evaluations = 1;
        return result;
    }

    const FlipTable table(poly);
    Assignment x(static_cast<std::size_t>(n), 0);
    double energy = poly.offset();
    double best = energy;
    std::set<Assignment> argmins{x};

    const std::uint64_t count = 1ull << n;
    for (std::uint64_t i = 1; i < count; ++i) {
        // Gray-code walk: exactly one bit flips per step.
        const int bit = std::countr_zero(i);
        energy += table.delta(x, bit);
        x[static_cast<std::size_t>(bit)] ^= 1;
        if (energy < best) {
            best = energy;
            argmins.clear();
            argmins.insert(x);
        } else if (energy == best) {
            argmins.insert(x);
            if (argmins.size() > static_cast<std::size_t>(argmin_cap))
                argmins.erase(std::prev(argmins.end()));
        }
    }

    result.min_energy = best;
    result.argmin.assign(argmins.begin(), argmins.end());
    result.evaluations = count;
    return result;
}

SolveResult solve_exhaustive(const QuboModel& model, int max_vars, int argmin_cap) {
    return solve_exhaustive(model.poly, max_vars, argmin_cap);
}

SolveResult solve_anneal(const QuboPoly& poly, const AnnealParams& params) {
    if (params.sweeps < 1 || params.restarts < 1)
        throw std::invalid_argument("sweeps and restarts must be positive");
    if (params.t_final <= 0.0) throw std::invalid_argument("final temperature must be positive");

    const int n = poly.num_vars();
    SolveResult result;
    result.method = SolveMethod::Anneal;
    result.seed = params.seed;
    if (n == 0) {
        result.min_energy = poly.offset();
        result.argmin.push_back({});
        result.evaluations = 1;
        return result;
    }

    double t0 = params.t_initial;
    if (t0 <= 0.0) {
        for (auto [i, c] : poly.linear()) t0 = std::max(t0, std::abs(c));
        for (auto [ij, c] : poly.quadratic()) t0 = std::max(t0, std::abs(c));
        if (t0 == 0.0) t0 = 1.0;
    }
    const double tf = std::min(params.t_final, t0);
    const double decay =
        params.sweeps > 1 ? std::pow(tf / t0, 1.0 / (params.sweeps - 1)) : 1.0;

    const FlipTable table(poly);
    double best_energy = 0.0;
    Assignment best_x;
    std::uint64_t evaluations = 0;

    for (int restart = 0; restart < params.restarts; ++restart) {
        std::seed_seq seq{static_cast<std::uint32_t>(params.seed),
                          static_cast<std::uint32_t>(params.seed >> 32),
                          static_cast<std::uint32_t>(restart)};
        std::mt19937_64 rng(seq);

        Assignment x(static_cast<std::size_t>(n));
        for (auto& b : x) b = static_cast<std::uint8_t>(rng() & 1u);
        double energy = evaluate(poly, x);
        ++evaluations;
        double local_best = energy;
        Assignment local_best_x = x;

        double t = t0;
        for (int sweep = 0; sweep < params.sweeps; ++sweep) {
            for (int step = 0; step < n; ++step) {
                const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
                const double d = table.delta(x, i);
                ++evaluations;
                if (d <= 0.0 || uniform01(rng) < std::exp(-d / t)) {
                    x[static_cast<std::size_t>(i)] ^= 1;
                    energy += d;
                    if (energy < local_best) {
                        local_best = energy;
                        local_best_x = x;
                    }
                }
            }
            t *= decay;
        }

        if (best_x.empty() || local_best < best_energy ||
            (local_best == best_energy && local_best_x < best_x)) {
            best_energy = local_best;
            best_x = std::move(local_best_x);
        }
    }

    result.min_energy = best_energy;
    result.argmin.push_back(std::move(best_x));
    result.evaluations = evaluations;
    return result;
}

SolveResult solve_anneal(const QuboModel& model, const AnnealParams& params) {
    return solve_anneal(model.poly, params);
}

}  // namespace domqubo
