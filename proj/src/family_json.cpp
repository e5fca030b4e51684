#include "ftq/family_json.hpp"

#include "ftq/errors.hpp"

namespace ftq {

namespace {

Polynomial cell_from_json(const nlohmann::json& cell) {
  if (cell.is_number_integer()) return Polynomial::constant(Integer(cell.get<long>()));
  if (cell.is_string()) return Polynomial::parse(cell.get<std::string>());
  throw InvalidInput("pattern cell must be an integer or polynomial text, got " + cell.dump());
}

nlohmann::json cell_to_json(const Polynomial& p) {
  if (p.is_zero()) return 0;
  if (p.is_constant() && p.terms().begin()->second.fits_slong_p()) return p.terms().begin()->second.get_si();
  return p.to_string();
}

}  // namespace

std::vector<Constraint> constraints_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw InvalidInput("constraints must be an array");
  std::vector<Constraint> out;
  for (const auto& c : doc) {
    if (!c.is_object() || !c.contains("poly")) throw InvalidInput("constraint must be {\"poly\", \"rel\"}");
    Constraint constraint;
    constraint.poly = Polynomial::parse(c.at("poly").get<std::string>());
    const auto rel = c.value("rel", std::string("eq"));
    if (rel == "eq")
      constraint.relation = Relation::Equal;
    else if (rel == "neq")
      constraint.relation = Relation::NotEqual;
    else
      throw InvalidInput("constraint relation must be \"eq\" or \"neq\", got \"" + rel + "\"");
    out.push_back(std::move(constraint));
  }
  return out;
}

nlohmann::json constraints_to_json(const std::vector<Constraint>& constraints) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : constraints)
    out.push_back({{"poly", c.poly.to_string()}, {"rel", c.relation == Relation::Equal ? "eq" : "neq"}});
  return out;
}

FamilySpec family_from_json(const nlohmann::json& doc) {
  try {
    FamilySpec spec;
    spec.name = doc.at("name").get<std::string>();
    const auto& pattern = doc.at("pattern");
    spec.dim = doc.contains("dim") ? doc.at("dim").get<std::size_t>() : pattern.size();
    if (pattern.size() != spec.dim) throw InvalidInput(spec.name + ": pattern must have dim rows");
    for (const auto& row : pattern) {
      if (!row.is_array() || row.size() != spec.dim) throw InvalidInput(spec.name + ": pattern rows must have dim cells");
      std::vector<Polynomial> cells;
      for (const auto& cell : row) cells.push_back(cell_from_json(cell));
      spec.pattern.push_back(std::move(cells));
    }
    if (doc.contains("constraints")) spec.constraints = constraints_from_json(doc.at("constraints"));
    if (doc.contains("generators"))
      for (const auto& g : doc.at("generators")) spec.generators.push_back(g.get<std::map<std::string, std::int64_t>>());
    spec.odd_primes_only = doc.value("odd_primes_only", false);
    spec.description = doc.value("description", std::string());
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed family description: ") + e.what());
  }
}

nlohmann::json family_to_json(const FamilySpec& spec) {
  nlohmann::json pattern = nlohmann::json::array();
  for (const auto& row : spec.pattern) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) r.push_back(cell_to_json(cell));
    pattern.push_back(r);
  }
  nlohmann::json out = {{"name", spec.name},
                        {"dim", spec.dim},
                        {"pattern", pattern},
                        {"constraints", constraints_to_json(spec.constraints)},
                        {"generators", spec.generators}};
  if (spec.odd_primes_only) out["odd_primes_only"] = true;
  if (!spec.description.empty()) out["description"] = spec.description;
  return out;
}

}  // namespace ftq
