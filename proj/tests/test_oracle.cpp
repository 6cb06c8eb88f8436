#include <random>

#include "doctest.h"
#include "domqubo/errors.hpp"
#include "domqubo/oracle.hpp"
#include "domqubo/solver.hpp"
#include "support.hpp"

using namespace domqubo;
using testsupport::paw;

TEST_CASE("variant predicates on the paw graph") {
    const Graph g = paw();
    CHECK(is_variant_set(g, {2}, VariantKind::classic()));
    CHECK(!is_variant_set(g, {3}, VariantKind::classic()));
    CHECK(!is_variant_set(g, {}, VariantKind::classic()));

    CHECK(is_variant_set(g, {2}, VariantKind::independent()));
    CHECK(!is_variant_set(g, {2, 3}, VariantKind::independent()));

    CHECK(is_variant_set(g, {0, 2}, VariantKind::total()));
    CHECK(!is_variant_set(g, {2}, VariantKind::total()));  // 2 has no neighbor in D

    CHECK(is_variant_set(g, {2}, VariantKind::perfect()));
    CHECK(!is_variant_set(g, {0, 2}, VariantKind::perfect()));  // vertex 1 twice dominated

    CHECK(is_variant_set(g, {2, 3}, VariantKind::clique()));
    CHECK(!is_variant_set(g, {0, 3}, VariantKind::clique()));

    CHECK(is_variant_set(g, {2}, VariantKind::independent_perfect()));
    CHECK(is_variant_set(g, {2, 3}, VariantKind::total_perfect()));
    CHECK(!is_variant_set(g, {0, 2}, VariantKind::total_perfect()));

    CHECK(is_variant_set(g, {0}, VariantKind::k_domination(2)));
    CHECK(!is_variant_set(g, {0}, VariantKind::k_domination(1)));
    CHECK(is_variant_set(g, {}, VariantKind::k_domination(2)) == false);
}

TEST_CASE("oracle gamma on the paw graph") {
    const Graph g = paw();
    auto check = [&](VariantKind variant, int size, const VertexSet& witness) {
        const auto result = oracle_gamma(g, variant);
        REQUIRE(result.has_value());
        CHECK(result->size == size);
        CHECK(result->set == witness);
    };
    check(VariantKind::classic(), 1, {2});
    check(VariantKind::independent(), 1, {2});
    check(VariantKind::total(), 2, {0, 2});
    check(VariantKind::perfect(), 1, {2});
    check(VariantKind::clique(), 1, {2});
    check(VariantKind::independent_perfect(), 1, {2});
    check(VariantKind::total_perfect(), 2, {2, 3});
    check(VariantKind::k_domination(2), 1, {0});
}

TEST_CASE("oracle gamma reports infeasible variants as absent") {
    // the five-cycle has no dominating clique
    CHECK(!oracle_gamma(testsupport::cycle(5), VariantKind::clique()).has_value());
    // the four-cycle has no independent perfect dominating set
    CHECK(!oracle_gamma(testsupport::cycle(4), VariantKind::independent_perfect()).has_value());
    // total domination is impossible with an isolated vertex
    CHECK(!oracle_gamma(Graph::from_edges(2, {}), VariantKind::total()).has_value());
}

TEST_CASE("oracle gamma obeys the enumeration guard") {
    CHECK_THROWS_AS(oracle_gamma(testsupport::path(25), VariantKind::classic()), SizeError);
}

TEST_CASE("k-domination predicate equals classic on the k-th power") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Graph g = testsupport::random_graph(rng, n, 0.4);
        for (int k = 1; k <= 3; ++k) {
            const Graph power = graph_power(g, k);
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                const auto d = testsupport::set_from_mask(mask, n);
                CHECK(is_variant_set(g, d, VariantKind::k_domination(k)) ==
                      is_variant_set(power, d, VariantKind::classic()));
            }
        }
    }
}

TEST_CASE("verify_solution accepts a certified optimum") {
    const QuboModel model = build_model(paw(), VariantKind::classic(), 5.0);
    const Assignment a{0, 0, 1, 0, 0, 0, 0, 0, 0, 0};
    const auto report = verify_solution(paw(), model, a);
    CHECK(report.feasible);
    CHECK(report.set_size == 1);
    CHECK(report.penalty_residual == 0.0);
    CHECK(report.violated_constraints.empty());
}

TEST_CASE("verify_solution flags every uncovered vertex on the zero assignment") {
    const QuboModel model = build_model(paw(), VariantKind::classic(), 5.0);
    const auto report = verify_solution(paw(), model, Assignment(10, 0));
    CHECK(!report.feasible);
    CHECK(report.set_size == 0);
    CHECK(report.penalty_residual == 4 * 5.0);
    REQUIRE(report.violated_constraints.size() == 4);
    CHECK(report.violated_constraints[0] == "vertex 0: not dominated");
}

TEST_CASE("verify_solution names the clique violation") {
    const QuboModel model = build_model(paw(), VariantKind::clique(), 5.0);
    // projection {0,3} with the best slack completion: coverage sums are
    // 1, 1 and 2, so vertex 2's slack group must encode 1
    Assignment a(10, 0);
    a[0] = a[3] = 1;
    a[8] = 1;
    const auto report = verify_solution(paw(), model, a);
    CHECK(!report.feasible);
    CHECK(report.set_size == 2);
    CHECK(report.penalty_residual == 5.0);
    REQUIRE(report.violated_constraints.size() == 1);
    CHECK(report.violated_constraints[0] == "pair (0,3) not an edge");
}

TEST_CASE("verify_solution reports slack mismatches on feasible projections") {
    const QuboModel model = build_model(paw(), VariantKind::classic(), 5.0);
    Assignment a(10, 0);
    a[2] = 1;
    a[4] = 1;  // stray slack bit for vertex 0's constraint
    const auto report = verify_solution(paw(), model, a);
    CHECK(!report.feasible);
    CHECK(report.penalty_residual == 5.0);
    REQUIRE(report.violated_constraints.size() == 1);
    CHECK(report.violated_constraints[0] == "coverage slack at vertex 0 encodes 1, expected 0");
}

TEST_CASE("verify_solution rejects wrong lengths and wrong graphs") {
    const QuboModel model = build_model(paw(), VariantKind::classic(), 5.0);
    CHECK_THROWS_AS(verify_solution(paw(), model, Assignment(9, 0)), std::invalid_argument);
    CHECK_THROWS_AS(verify_solution(testsupport::path(4), model, Assignment(10, 0)),
                    std::invalid_argument);
}

TEST_CASE("when the oracle finds nothing, every exhaustive argmin fails the predicate") {
    const std::vector<std::pair<Graph, VariantKind>> cases = {
        {testsupport::cycle(5), VariantKind::clique()},
        {testsupport::cycle(4), VariantKind::independent_perfect()},
    };
    for (const auto& [g, variant] : cases) {
        REQUIRE(!oracle_gamma(g, variant).has_value());
        const QuboModel model = build_model(g, variant, default_penalty(g));
        const auto result = solve_exhaustive(model);
        for (const auto& a : result.argmin) {
            CHECK(!is_variant_set(g, vertex_projection(model, a), variant));
            CHECK(!verify_solution(g, model, a).feasible);
        }
    }
}

TEST_CASE("qubo optimum equals the oracle on a small catalog") {
    // sound variants at the default uniform weight
    const std::vector<VariantKind> sound = {
        VariantKind::classic(), VariantKind::independent(), VariantKind::total(),
        VariantKind::clique(), VariantKind::k_domination(2)};
    for (int n = 2; n <= 4; ++n) {
        const int pairs = testsupport::pair_count(n);
        for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
            const Graph g = testsupport::graph_from_mask(n, mask);
            for (const auto variant : sound) {
                const auto witness = oracle_gamma(g, variant);
                QuboModel model;
                try {
                    model = build_model(g, variant, default_penalty(g));
                } catch (const InfeasibleError&) {
                    CHECK(!witness.has_value());
                    continue;
                }
                const auto result = solve_exhaustive(model);
                if (!witness) {
                    for (const auto& a : result.argmin)
                        CHECK(!is_variant_set(g, vertex_projection(model, a), variant));
                    continue;
                }
                CHECK(result.min_energy == static_cast<double>(witness->size));
                for (const auto& a : result.argmin)
                    CHECK(is_variant_set(g, vertex_projection(model, a), variant));
            }
        }
    }
}

TEST_CASE("perfect-family equivalence is restored by a stronger coverage weight") {
    // With uniform weights the one-sided perfect penalty can cancel coverage
    // violations (the all-zero assignment reaches energy 0), so the uniform
    // optimum undercuts the oracle. Coverage outweighing perfect by |V|+1
    // makes every violating assignment cost more than any feasible one.
    const Graph k2 = testsupport::path(2);
    const QuboModel uniform = build_model(k2, VariantKind::perfect(), default_penalty(k2));
    CHECK(solve_exhaustive(uniform).min_energy == 0.0);
    REQUIRE(oracle_gamma(k2, VariantKind::perfect())->size == 1);

    const std::vector<VariantKind> family = {VariantKind::perfect(),
                                             VariantKind::independent_perfect(),
                                             VariantKind::total_perfect()};
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Graph g = testsupport::random_graph(rng, n, 0.5);
        const double p = default_penalty(g);
        PenaltyWeights weights = PenaltyWeights::uniform(p);
        weights.coverage = p + (g.num_vertices() + 1);
        for (const auto variant : family) {
            QuboModel model;
            try {
                model = build_model(g, variant, p, weights);
            } catch (const InfeasibleError&) {
                continue;
            }
            const auto witness = oracle_gamma(g, variant);
            const auto result = solve_exhaustive(model);
            if (!witness) {
                for (const auto& a : result.argmin)
                    CHECK(!is_variant_set(g, vertex_projection(model, a), variant));
                continue;
            }
            CHECK(result.min_energy == static_cast<double>(witness->size));
            for (const auto& a : result.argmin)
                CHECK(is_variant_set(g, vertex_projection(model, a), variant));
        }
    }
}
