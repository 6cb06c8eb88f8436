// domqubo: compile dominating-set problem variants on undirected graphs
// into QUBO models, solve them at desk scale and verify the results
// against direct combinatorial checks.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "domqubo/errors.hpp"
#include "domqubo/formulation.hpp"
#include "domqubo/graph.hpp"
#include "domqubo/model_io.hpp"
#include "domqubo/oracle.hpp"
#include "domqubo/qubo.hpp"
#include "domqubo/solver.hpp"

namespace {

using namespace domqubo;

// Exit codes are part of the scripting contract.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasibleModel = 3;
constexpr int kExitBadFlags = 4;
constexpr int kExitInfeasibleSolution = 5;
constexpr int kExitTooLarge = 6;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream toks(line);
        std::string first;
        if (!(toks >> first)) continue;
        if (first == "c") continue;
        return first == "p" || first == "e";
    }
    return false;
}

Graph load_graph(const std::string& path) {
    const std::string text = read_file(path);
    return looks_like_dimacs(text) ? parse_dimacs(text) : parse_edge_list(text);
}

VariantKind resolve_variant(const std::string& name, std::optional<int> k) {
    const auto variant = VariantKind::variant_from_name(name);
    if (!variant)
        throw CLI::ValidationError("--variant", "unknown variant \"" + name + "\"");
    if (*variant == Variant::KDomination) {
        if (!k) throw CLI::ValidationError("--k", "k-domination requires --k");
        if (*k < 1) throw CLI::ValidationError("--k", "k must be >= 1");
        return VariantKind::k_domination(*k);
    }
    if (k) throw CLI::ValidationError("--k", "--k only applies to k-domination");
    return VariantKind{*variant, 1};
}

std::string label_set(const Graph& g, const VertexSet& d) {
    std::string out = "{";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ",";
        out += g.label(d[i]);
    }
    return out + "}";
}

std::string assignment_string(const Assignment& a) {
    std::string out;
    out.reserve(a.size());
    for (auto b : a) out += b ? '1' : '0';
    return out;
}

struct CompileArgs {
    std::string graph_path;
    std::string variant;
    std::optional<int> k;
    std::optional<double> penalty;
    std::optional<double> w_coverage, w_independence, w_perfect, w_clique;
    std::string format = "json";
    std::string out_path;
};

int cmd_compile(const CompileArgs& args) {
    const Graph g = load_graph(args.graph_path);
    if (g.empty()) {
        std::cerr << "error: " << args.graph_path << " contains no vertices\n";
        return kExitParse;
    }
    const VariantKind variant = resolve_variant(args.variant, args.k);
    const double p = args.penalty ? *args.penalty : default_penalty(g);
    if (p <= 0) throw CLI::ValidationError("--penalty", "penalty must be positive");
    PenaltyWeights weights = PenaltyWeights::uniform(p);
    if (args.w_coverage) weights.coverage = *args.w_coverage;
    if (args.w_independence) weights.independence = *args.w_independence;
    if (args.w_perfect) weights.perfect = *args.w_perfect;
    if (args.w_clique) weights.clique = *args.w_clique;

    const QuboModel model = build_model(g, variant, p, weights);
    std::cout << "variables: " << model.poly.num_vars()
              << " (bound: " << variable_count_bound(g) << ")\n";

    std::string payload;
    if (args.format == "json") {
        payload = serialize_model(model);
    } else if (args.format == "matrix-sym" || args.format == "matrix-ut") {
        const auto convention = args.format == "matrix-sym" ? MatrixConvention::Symmetric
                                                            : MatrixConvention::UpperTriangular;
        std::ostringstream buf;
        write_matrix_text(buf, to_matrix(model.poly, convention));
        payload = buf.str();
    } else {
        throw CLI::ValidationError("--format", "expected json, matrix-sym or matrix-ut");
    }

    if (args.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(args.out_path);
        if (!out) {
            std::cerr << "error: cannot write " << args.out_path << "\n";
            return kExitError;
        }
        out << payload;
    }
    return kExitOk;
}

int max_exhaustive_vars() {
    if (const char* env = std::getenv("DOMQUBO_MAX_EXHAUSTIVE")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw ParseError("DOMQUBO_MAX_EXHAUSTIVE is not an integer");
        }
    }
    return kDefaultMaxExhaustiveVars;
}

int report_solution(const QuboModel& model, const SolveResult& result, bool exhaustive) {
    const Assignment& best = result.argmin.front();
    const VertexSet d = vertex_projection(model, best);
    const auto report = verify_solution(model.graph, model, best);

    std::string verdict;
    if (report.feasible) {
        verdict = "feasible";
    } else if (exhaustive) {
        // A global optimum that fails the predicate means either that no
        // set satisfies the variant, or that the penalty weights let a
        // violating assignment undercut the feasible ones. The subset
        // oracle settles which, when the graph is small enough.
        verdict = "infeasible";
        if (model.graph.num_vertices() <= kMaxOracleVertices) {
            const auto witness = oracle_gamma(model.graph, model.variant);
            if (!witness) {
                verdict = "infeasible (no feasible set)";
            } else {
                verdict = "infeasible (penalty weights too weak: " +
                          model.variant.gamma_symbol() + " = " + std::to_string(witness->size) +
                          " at D = " + label_set(model.graph, witness->set) +
                          "; raise the coverage weight)";
            }
        }
    } else {
        verdict = "infeasible (best found by annealing; try exhaustive or more restarts)";
    }

    std::cout << "energy " << format_double(result.min_energy) << "; D = "
              << label_set(model.graph, d) << "; " << verdict << "\n";
    std::cout << "assignment: " << assignment_string(best) << "\n";
    std::cout << "method: " << (exhaustive ? "exhaustive" : "anneal") << "; evaluations: "
              << result.evaluations;
    if (result.seed) std::cout << "; seed: " << *result.seed;
    std::cout << "\n";
    if (!report.feasible) {
        for (const auto& violation : report.violated_constraints)
            std::cout << "violated: " << violation << "\n";
        return kExitInfeasibleSolution;
    }
    return kExitOk;
}

int cmd_solve(const std::string& model_path, const std::string& method, std::uint64_t seed,
              int sweeps, int restarts) {
    const QuboModel model = load_model(model_path);
    if (method == "exhaustive") {
        const auto result = solve_exhaustive(model, max_exhaustive_vars());
        return report_solution(model, result, true);
    }
    if (method != "anneal")
        throw CLI::ValidationError("--method", "expected exhaustive or anneal");
    AnnealParams params;
    params.seed = seed;
    params.sweeps = sweeps;
    params.restarts = restarts;
    const auto result = solve_anneal(model, params);
    return report_solution(model, result, false);
}

int cmd_oracle(const std::string& graph_path, const std::string& variant_name,
               std::optional<int> k) {
    const Graph g = load_graph(graph_path);
    if (g.empty()) {
        std::cerr << "error: " << graph_path << " contains no vertices\n";
        return kExitParse;
    }
    const VariantKind variant = resolve_variant(variant_name, k);
    const auto witness = oracle_gamma(g, variant);
    if (!witness) {
        std::cout << "infeasible\n";
        return kExitInfeasibleSolution;
    }
    std::cout << variant.gamma_symbol() << " = " << witness->size << ", D = "
              << label_set(g, witness->set) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& model_path,
               const std::string& assignment_path) {
    const Graph g = load_graph(graph_path);
    const QuboModel model = load_model(model_path);

    std::string text = read_file(assignment_path);
    Assignment a;
    for (char c : text) {
        if (c == '0' || c == '1') a.push_back(c == '1');
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw ParseError(assignment_path + ": assignment must be 0/1 characters");
    }
    if (static_cast<int>(a.size()) != model.poly.num_vars()) {
        std::cerr << "error: assignment has " << a.size() << " bits, model has "
                  << model.poly.num_vars() << " variables\n";
        return kExitBadFlags;
    }
    if (g.fingerprint() != model.graph_fingerprint) {
        std::cerr << "error: graph file does not match the model's fingerprint\n";
        return kExitBadFlags;
    }

    const auto report = verify_solution(g, model, a);
    std::cout << (report.feasible ? "feasible" : "infeasible") << "\n";
    std::cout << "size " << report.set_size << ", residual "
              << format_double(report.penalty_residual) << "\n";
    for (const auto& violation : report.violated_constraints)
        std::cout << "violated: " << violation << "\n";
    return report.feasible ? kExitOk : kExitInfeasibleSolution;
}

int cmd_info(const std::string& model_path) {
    const QuboModel model = load_model(model_path);
    std::cout << "variant: " << model.variant.name();
    if (model.variant.variant == Variant::KDomination) std::cout << " (k = " << model.variant.k << ")";
    std::cout << "\n";
    std::cout << "penalty: " << format_double(model.penalty) << "\n";
    if (!model.weights.is_uniform(model.penalty)) {
        std::cout << "penalty weights: coverage " << format_double(model.weights.coverage)
                  << ", independence " << format_double(model.weights.independence)
                  << ", perfect " << format_double(model.weights.perfect) << ", clique "
                  << format_double(model.weights.clique) << "\n";
    }
    const int total = model.poly.num_vars();
    std::cout << "variables: " << total << " (" << model.vmap.num_vertex_vars << " vertex, "
              << total - model.vmap.num_vertex_vars << " slack)\n";
    std::cout << "index role   provenance\n";
    for (int v = 0; v < model.vmap.num_vertex_vars; ++v)
        std::cout << v << "\tvertex\tlabel \"" << model.graph.label(v) << "\"\n";
    for (const auto& group : model.vmap.slack_groups) {
        for (std::size_t b = 0; b < group.indices.size(); ++b)
            std::cout << group.indices[b] << "\tslack\tcoverage at vertex \""
                      << model.graph.label(group.vertex) << "\", bit " << b << " (coefficient "
                      << group.coefficients[b] << ")\n";
    }
    std::cout << "terms: " << model.poly.linear().size() << " linear, "
              << model.poly.quadratic().size() << " quadratic\n";
    double lo = model.poly.offset(), hi = model.poly.offset();
    for (auto [i, c] : model.poly.linear()) {
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    for (auto [ij, c] : model.poly.quadratic()) {
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    std::cout << "coefficient range: [" << format_double(lo) << ", " << format_double(hi)
              << "]\n";
    std::cout << "offset: " << format_double(model.poly.offset()) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QUBO compiler and solver for dominating-set problem variants"};
    app.require_subcommand(1);

    CompileArgs compile_args;
    auto* compile = app.add_subcommand("compile", "compile a graph into a QUBO model");
    compile->add_option("graph", compile_args.graph_path, "graph file (edge list or DIMACS)")
        ->required();
    compile->add_option("--variant", compile_args.variant, "problem variant")->required();
    compile->add_option("--k", compile_args.k, "distance bound for k-domination");
    compile->add_option("--penalty", compile_args.penalty, "base penalty weight (default |V|+1)");
    compile->add_option("--penalty-coverage", compile_args.w_coverage, "coverage weight override");
    compile->add_option("--penalty-independence", compile_args.w_independence,
                        "independence weight override");
    compile->add_option("--penalty-perfect", compile_args.w_perfect, "perfect weight override");
    compile->add_option("--penalty-clique", compile_args.w_clique, "clique weight override");
    compile->add_option("--format", compile_args.format, "json, matrix-sym or matrix-ut");
    compile->add_option("--out", compile_args.out_path, "output file (default stdout)");

    std::string solve_model, solve_method = "exhaustive";
    std::uint64_t solve_seed = 1;
    int solve_sweeps = 1000, solve_restarts = 8;
    auto* solve = app.add_subcommand("solve", "minimize a compiled model");
    solve->add_option("model", solve_model, "model JSON file")->required();
    solve->add_option("--method", solve_method, "exhaustive or anneal");
    solve->add_option("--seed", solve_seed, "random seed for anneal");
    solve->add_option("--sweeps", solve_sweeps, "anneal sweeps per restart");
    solve->add_option("--restarts", solve_restarts, "anneal restarts");

    std::string oracle_graph, oracle_variant;
    std::optional<int> oracle_k;
    auto* oracle = app.add_subcommand("oracle", "exact answer by subset enumeration");
    oracle->add_option("graph", oracle_graph, "graph file")->required();
    oracle->add_option("--variant", oracle_variant, "problem variant")->required();
    oracle->add_option("--k", oracle_k, "distance bound for k-domination");

    std::string verify_graph, verify_model, verify_assignment;
    auto* verify = app.add_subcommand("verify", "check an assignment against graph and model");
    verify->add_option("graph", verify_graph, "graph file")->required();
    verify->add_option("model", verify_model, "model JSON file")->required();
    verify->add_option("assignment", verify_assignment, "file with one 0/1 character per variable")
        ->required();

    std::string info_model;
    auto* info = app.add_subcommand("info", "describe a compiled model");
    info->add_option("model", info_model, "model JSON file")->required();

    try {
        app.parse(argc, argv);
        if (compile->parsed()) return cmd_compile(compile_args);
        if (solve->parsed())
            return cmd_solve(solve_model, solve_method, solve_seed, solve_sweeps, solve_restarts);
        if (oracle->parsed()) return cmd_oracle(oracle_graph, oracle_variant, oracle_k);
        if (verify->parsed()) return cmd_verify(verify_graph, verify_model, verify_assignment);
        if (info->parsed()) return cmd_info(info_model);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadFlags;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasibleModel;
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
