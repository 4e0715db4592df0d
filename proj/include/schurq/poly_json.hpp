#pragma once

// Interchange format: a JSON array of [xdeg, qdeg, "coeff"] triples sorted by
// the canonical monomial order, with coefficients as decimal strings.

#include <string>

#include <json.hpp>

#include "schurq/poly.hpp"

namespace schurq {

nlohmann::json to_json_value(const BivarPoly &a);
/// Throws std::invalid_argument on malformed input.
BivarPoly from_json_value(const nlohmann::json &j);

std::string to_json_string(const BivarPoly &a);
BivarPoly from_json_string(const std::string &s);

} // namespace schurq
