#pragma once

#include <json.hpp>

#include "projrep/census.hpp"
#include "projrep/construct.hpp"

namespace projrep {

inline constexpr const char* kSchemaTag = "projrep/1";

/// {"p": int, "coeffs": [[num, den], ...]} in the power basis of Q(xi_p).
nlohmann::json scalar_to_json(const CycScalar& s);
CycScalar scalar_from_json(const nlohmann::json& j);

/// Nested array, rows of CycScalar objects.
nlohmann::json matrix_to_json(const CycMatrix& m);
CycMatrix matrix_from_json(const nlohmann::json& j);

/// {"schema": "projrep/1", "group": descriptor, "cocycle": matrix string,
///  "dim": int, "generators": [{"name": "x1", "matrix": ...}, ...]}
nlohmann::json rep_to_json(const ProjRep& rep);
ProjRep rep_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const RestrictionVerdict& v);
nlohmann::json comparison_to_json(const CensusComparison& c);

}  // namespace projrep
