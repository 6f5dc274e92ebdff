#pragma once

// JSON encodings shared by the CLI and tests.
//
//   matrix:     {"rows": r, "cols": c, "entries": [[re, im], ...]}   row-major
//   map params: {"n": 3, "sigma": "tau:3:2", "a": 2.0, "c": [1, 1, 1]}
//               {"map": "delta_n", "n": 4}

#include <json.hpp>

#include "posmaps/classify.hpp"
#include "posmaps/dtype.hpp"
#include "posmaps/matrix.hpp"
#include "posmaps/spa.hpp"
#include "posmaps/witness.hpp"

namespace posmaps {

using json = nlohmann::ordered_json;

json matrix_to_json(const CMatrix& m);
/// Throws FormatError on a malformed document.
CMatrix matrix_from_json(const json& j);

/// Throws FormatError for missing/mistyped fields and ParameterError for
/// invalid values (bad permutation text, non-positive a or c).
MapParams map_params_from_json(const json& j);
json map_params_to_json(const MapParams& p);

json to_json(const Verdict& v);
json to_json(const PositivityEvidence& e);
json to_json(const DecomposabilityCertificate& c);
json to_json(const ClassificationReport& r);
json to_json(const SpaState& s, bool include_matrix = true);
json to_json(const SeparableDecomposition& d);
json to_json(const ProductVector& z);
json to_json(const OptimalityCertificate& c);

}  // namespace posmaps
