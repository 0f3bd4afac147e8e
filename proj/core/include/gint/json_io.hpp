#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "gint/expr.hpp"
#include "gint/gadgets.hpp"
#include "gint/reduction.hpp"

namespace gint {

/// Insertion-ordered JSON keeps emitted documents byte-stable.
using Json = nlohmann::ordered_json;

/// {"re": "<decimal>", "im": "<decimal>"} with canonical decimal strings
/// (optional leading minus, no leading zeros except "0").
Json gaussian_to_json(const GaussianInt& value);

/// Strict decoder for the encoding above; anything non-canonical throws
/// BadInput.
GaussianInt gaussian_from_json(const Json& j);

Json witness_to_json(const IntegralityWitness& witness);

/// The five values needed to run the verifier; diagnostics in the input are
/// ignored.
struct WitnessValues {
    GaussianInt v, w, x, y, z;
};
WitnessValues witness_values_from_json(const Json& j);

Json assignment_to_json(const Assignment& assignment);

/// Keys must be grammar identifiers; "i" throws ReservedName.
Assignment assignment_from_json(const Json& j);

Json manifest_to_json(const ReductionOutput& output);

Json pell_solutions_to_json(const std::vector<PellSolution>& solutions);

/// Parses a JSON document, mapping parse failures to BadInput.
Json parse_json(const std::string& text);

}  // namespace gint
