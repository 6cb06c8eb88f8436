#pragma once

#include <iosfwd>
#include <string>

#include "domqubo/formulation.hpp"
#include "domqubo/qubo.hpp"

namespace domqubo {

// Canonical JSON document for a compiled model. Key order and float
// formatting are fixed, so serialize(parse(serialize(m))) is byte-identical.
// The source graph is embedded so a model file is self-contained for
// solving and verification.
std::string serialize_model(const QuboModel& model);

// Throws ParseError on malformed documents, schema violations or a
// fingerprint that does not match the embedded graph.
QuboModel parse_model(const std::string& text);
QuboModel load_model(const std::string& path);

void save_model(const QuboModel& model, const std::string& path);

// Dense matrix text: one row per line, then a trailing "offset: <v>" line.
void write_matrix_text(std::ostream& out, const QuboMatrix& q);

}  // namespace domqubo
