#include "domqubo/model_io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "domqubo/errors.hpp"
#include "json.hpp"

namespace domqubo {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kFormatVersion = "1";

std::string fingerprint_hex(std::uint64_t fp) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << fp;
    return out.str();
}

ordered_json model_to_json(const QuboModel& model) {
    ordered_json doc;
    doc["format_version"] = kFormatVersion;
    doc["variant"] = model.variant.name();
    if (model.variant.variant == Variant::KDomination) doc["k"] = model.variant.k;
    doc["penalty"] = model.penalty;
    if (!model.weights.is_uniform(model.penalty)) {
        ordered_json w;
        w["coverage"] = model.weights.coverage;
        w["independence"] = model.weights.independence;
        w["perfect"] = model.weights.perfect;
        w["clique"] = model.weights.clique;
        doc["penalty_weights"] = std::move(w);
    }

    ordered_json graph;
    graph["n"] = model.graph.num_vertices();
    graph["edges"] = ordered_json::array();
    for (auto [u, v] : model.graph.edges()) graph["edges"].push_back({u, v});
    graph["labels"] = model.graph.labels();
    doc["graph"] = std::move(graph);

    doc["variables"] = ordered_json::array();
    for (int v = 0; v < model.vmap.num_vertex_vars; ++v) {
        ordered_json entry;
        entry["index"] = v;
        entry["role"] = "vertex";
        entry["label"] = model.graph.label(v);
        doc["variables"].push_back(std::move(entry));
    }
    for (const auto& group : model.vmap.slack_groups) {
        for (std::size_t b = 0; b < group.indices.size(); ++b) {
            ordered_json entry;
            entry["index"] = group.indices[b];
            entry["role"] = "slack";
            entry["constraint"] = "coverage";
            entry["vertex"] = group.vertex;
            entry["bit"] = static_cast<int>(b);
            entry["coefficient"] = group.coefficients[b];
            doc["variables"].push_back(std::move(entry));
        }
    }

    doc["linear"] = ordered_json::array();
    for (auto [i, c] : model.poly.linear()) {
        ordered_json entry;
        entry["index"] = i;
        entry["coeff"] = c;
        doc["linear"].push_back(std::move(entry));
    }
    doc["quadratic"] = ordered_json::array();
    for (auto [ij, c] : model.poly.quadratic()) {
        ordered_json entry;
        entry["i"] = ij.first;
        entry["j"] = ij.second;
        entry["coeff"] = c;
        doc["quadratic"].push_back(std::move(entry));
    }
    doc["offset"] = model.poly.offset();
    doc["graph_fingerprint"] = fingerprint_hex(model.graph_fingerprint);
    return doc;
}

QuboModel model_from_json(const ordered_json& doc) {
    if (!doc.is_object()) throw ParseError("model document must be a JSON object");
    if (doc.value("format_version", "") != kFormatVersion)
        throw ParseError("unsupported model format_version");

    QuboModel model;
    const std::string variant_name = doc.at("variant").get<std::string>();
    const auto variant = VariantKind::variant_from_name(variant_name);
    if (!variant) throw ParseError("unknown variant \"" + variant_name + "\"");
    if (*variant == Variant::KDomination) {
        if (!doc.contains("k")) throw ParseError("k-domination model is missing \"k\"");
        model.variant = VariantKind::k_domination(doc.at("k").get<int>());
    } else {
        model.variant = VariantKind{*variant, 1};
    }

    model.penalty = doc.at("penalty").get<double>();
    model.weights = PenaltyWeights::uniform(model.penalty);
    if (doc.contains("penalty_weights")) {
        const auto& w = doc.at("penalty_weights");
        model.weights.coverage = w.at("coverage").get<double>();
        model.weights.independence = w.at("independence").get<double>();
        model.weights.perfect = w.at("perfect").get<double>();
        model.weights.clique = w.at("clique").get<double>();
    }

    const auto& graph = doc.at("graph");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : graph.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("bad edge entry in model graph");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        model.graph = Graph(graph.at("labels").get<std::vector<std::string>>(), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad model graph: ") + e.what());
    }
    if (model.graph.num_vertices() != graph.at("n").get<int>())
        throw ParseError("graph vertex count does not match its labels");

    model.graph_fingerprint = model.graph.fingerprint();
    const std::string fp = doc.at("graph_fingerprint").get<std::string>();
    if (fp != fingerprint_hex(model.graph_fingerprint))
        throw ParseError("graph fingerprint mismatch; the model file is inconsistent");

    model.vmap.num_vertex_vars = model.graph.num_vertices();
    int expected_index = 0;
    for (const auto& entry : doc.at("variables")) {
        const int index = entry.at("index").get<int>();
        if (index != expected_index++)
            throw ParseError("variable indices must be contiguous from 0");
        const std::string role = entry.at("role").get<std::string>();
        if (role == "vertex") {
            if (index >= model.vmap.num_vertex_vars)
                throw ParseError("vertex variable after slack section");
            if (entry.at("label").get<std::string>() != model.graph.label(index))
                throw ParseError("vertex variable label mismatch");
        } else if (role == "slack") {
            const int vertex = entry.at("vertex").get<int>();
            const int bit = entry.at("bit").get<int>();
            if (vertex < 0 || vertex >= model.vmap.num_vertex_vars)
                throw ParseError("slack source vertex out of range");
            auto& groups = model.vmap.slack_groups;
            if (bit == 0) {
                if (!groups.empty() && groups.back().vertex >= vertex)
                    throw ParseError("slack groups must ascend by source vertex");
                groups.push_back(SlackGroup{vertex, {}, {}});
            }
            if (groups.empty() || groups.back().vertex != vertex ||
                static_cast<int>(groups.back().indices.size()) != bit)
                throw ParseError("slack bits out of order");
            groups.back().indices.push_back(index);
            groups.back().coefficients.push_back(entry.at("coefficient").get<long long>());
        } else {
            throw ParseError("unknown variable role \"" + role + "\"");
        }
    }
    const int total = expected_index;
    if (total != model.vmap.total_variables() || total < model.vmap.num_vertex_vars)
        throw ParseError("variable table does not cover the model");

    model.poly = QuboPoly(total);
    try {
        for (const auto& entry : doc.at("linear"))
            model.poly.add_linear(entry.at("index").get<int>(), entry.at("coeff").get<double>());
        for (const auto& entry : doc.at("quadratic")) {
            const int i = entry.at("i").get<int>();
            const int j = entry.at("j").get<int>();
            if (i >= j) throw ParseError("quadratic entries must have i < j");
            model.poly.add_quadratic(i, j, entry.at("coeff").get<double>());
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad coefficient entry: ") + e.what());
    }
    model.poly.add_constant(doc.at("offset").get<double>());
    return model;
}

}  // namespace

std::string serialize_model(const QuboModel& model) {
    return model_to_json(model).dump(2) + "\n";
}

QuboModel parse_model(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return model_from_json(doc);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad model document: ") + e.what());
    }
}

QuboModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

void save_model(const QuboModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write model file " + path);
    out << serialize_model(model);
}

void write_matrix_text(std::ostream& out, const QuboMatrix& q) {
    for (int i = 0; i < q.n; ++i) {
        for (int j = 0; j < q.n; ++j) {
            if (j) out << " ";
            out << format_double(q.at(i, j));
        }
        out << "\n";
    }
    out << "offset: " << format_double(q.offset) << "\n";
}

}  // namespace domqubo
