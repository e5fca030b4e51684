#pragma once

#include <json.hpp>

#include "ftq/group.hpp"

namespace ftq {

/// {"name", "dim", "pattern": [[cell,...],...],
///  "constraints": [{"poly": "...", "rel": "eq|neq"}], "generators": [{var: value}, ...]}
/// Cells are integers or polynomial text (usually a single variable name).
/// Optional: "odd_primes_only": bool, "description": string.
FamilySpec family_from_json(const nlohmann::json& doc);
nlohmann::json family_to_json(const FamilySpec& spec);

std::vector<Constraint> constraints_from_json(const nlohmann::json& doc);
nlohmann::json constraints_to_json(const std::vector<Constraint>& constraints);

}  // namespace ftq
