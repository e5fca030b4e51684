#include "ftq/schemes.hpp"

#include <algorithm>
#include <cmath>

#include "ftq/errors.hpp"
#include "ftq/family_json.hpp"

namespace ftq {

namespace {

constexpr const char* kBuiltinCatalog = R"json({
  "families": [
    {
      "name": "AGL1", "dim": 2,
      "pattern": [["a", "b"], [0, 1]],
      "constraints": [{"poly": "a", "rel": "neq"}],
      "generators": [{"a": 1, "b": 1}],
      "description": "affine group x -> ax + b of the line",
      "basis": ["I", "J"]
    },
    {
      "name": "U3", "dim": 3,
      "pattern": [[1, "x", "y"], [0, 1, "z"], [0, 0, 1]],
      "generators": [{"x": 1, "y": 0, "z": 0}, {"x": 0, "y": 0, "z": 1}],
      "description": "upper unitriangular 3x3 matrices (Heisenberg group)",
      "basis": ["E", "Zstar"]
    },
    {
      "name": "U4", "dim": 4,
      "pattern": [[1, "a", "b", "c"], [0, 1, "d", "e"], [0, 0, 1, "f"], [0, 0, 0, 1]],
      "generators": [{"a": 1, "b": 0, "c": 0, "d": 0, "e": 0, "f": 0},
                     {"a": 0, "b": 0, "c": 0, "d": 1, "e": 0, "f": 0},
                     {"a": 0, "b": 0, "c": 0, "d": 0, "e": 0, "f": 1}],
      "description": "upper unitriangular 4x4 matrices",
      "basis": ["E", "Zstar", "D"]
    },
    {
      "name": "GmZ2", "dim": 2,
      "pattern": [["a", "b"], ["c", "d"]],
      "constraints": [{"poly": "a*b", "rel": "eq"}, {"poly": "c*d", "rel": "eq"},
                      {"poly": "a*c", "rel": "eq"}, {"poly": "b*d", "rel": "eq"},
                      {"poly": "a*d + b*c - 1", "rel": "eq"}],
      "generators": [{"a": 0, "b": 1, "c": 1, "d": 0}],
      "odd_primes_only": true,
      "description": "torus diag(t, 1/t) extended by the inversion antidiag(t, 1/t)",
      "basis": ["one", "X"]
    }
  ],
  "generators": [
    {"family": "AGL1", "name": "I", "coords": [], "map": [[1, 0], [0, 1]],
     "description": "the identity element"},
    {"family": "AGL1", "name": "J", "coords": ["b"], "constraints": [{"poly": "b", "rel": "neq"}],
     "map": [[1, "b"], [0, 1]], "description": "nontrivial translations a = 1, b != 0"},

    {"family": "U3", "name": "E", "coords": [], "map": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
     "description": "the identity element x = y = z = 0"},
    {"family": "U3", "name": "Zstar", "coords": ["y"], "constraints": [{"poly": "y", "rel": "neq"}],
     "map": [[1, 0, "y"], [0, 1, 0], [0, 0, 1]], "description": "punctured center x = z = 0, y != 0"},
    {"family": "U3", "name": "Z", "coords": ["y"],
     "map": [[1, 0, "y"], [0, 1, 0], [0, 0, 1]], "description": "center x = z = 0"},

    {"family": "U4", "name": "E", "coords": [],
     "map": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], "description": "the identity element"},
    {"family": "U4", "name": "Zstar", "coords": ["c"], "constraints": [{"poly": "c", "rel": "neq"}],
     "map": [[1, 0, 0, "c"], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
     "description": "punctured center, only c != 0"},
    {"family": "U4", "name": "Z", "coords": ["c"],
     "map": [[1, 0, 0, "c"], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], "description": "center, only c free"},
    {"family": "U4", "name": "D", "coords": ["b", "c", "e"],
     "map": [[1, 0, "b", "c"], [0, 1, 0, "e"], [0, 0, 1, 0], [0, 0, 0, 1]],
     "description": "kernel of the abelianization, a = d = f = 0"},

    {"family": "GmZ2", "name": "one", "coords": [], "map": [[1, 0], [0, 1]], "description": "the identity element"},
    {"family": "GmZ2", "name": "X", "coords": ["x", "y"], "constraints": [{"poly": "x*y - 1", "rel": "eq"}],
     "map": [["x^2", 0], [0, "y^2"]], "description": "the torus covering itself by t -> t^2"}
  ],
  "lifts": [
    {"family": "AGL1", "name": "v1", "eigenvalue": "q^2*(q-1)^2",
     "terms": [{"coefficient": "q-1", "generator": "I"}, {"coefficient": "q-1", "generator": "J"}]},
    {"family": "AGL1", "name": "v2", "eigenvalue": "q^2",
     "terms": [{"coefficient": "q-1", "generator": "I"}, {"coefficient": "-1", "generator": "J"}]},

    {"family": "U3", "name": "v1", "eigenvalue": "q^6",
     "terms": [{"coefficient": "q", "generator": "Z"}]},
    {"family": "U3", "name": "v2", "eigenvalue": "q^4",
     "terms": [{"coefficient": "-q", "generator": "Zstar"}, {"coefficient": "q*(q-1)", "generator": "E"}]},

    {"family": "U4", "name": "v1", "eigenvalue": "q^12",
     "terms": [{"coefficient": "q^2", "generator": "D"}]},
    {"family": "U4", "name": "v2", "eigenvalue": "q^10",
     "terms": [{"coefficient": "q^4", "generator": "Z"}, {"coefficient": "-q^2", "generator": "D"}]},
    {"family": "U4", "name": "v3", "eigenvalue": "q^8",
     "terms": [{"coefficient": "q^3*(q-1)", "generator": "E"}, {"coefficient": "-q^3", "generator": "Zstar"}]},

    {"family": "GmZ2", "name": "v1", "eigenvalue": "4*(q-1)^2",
     "terms": [{"coefficient": "2", "generator": "X"}]},
    {"family": "GmZ2", "name": "v2", "eigenvalue": "(q-1)^2",
     "terms": [{"coefficient": "q-1", "generator": "one"}, {"coefficient": "-1", "generator": "X"}]}
  ]
})json";

Polynomial cell_from_json(const nlohmann::json& cell) {
  if (cell.is_number_integer()) return Polynomial::constant(Integer(cell.get<long>()));
  if (cell.is_string()) return Polynomial::parse(cell.get<std::string>());
  throw InvalidInput("map cell must be an integer or polynomial text, got " + cell.dump());
}

PolyQ polyq_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return PolyQ(v.get<long>());
  if (v.is_string()) return PolyQ::parse(v.get<std::string>());
  throw InvalidInput("coefficient must be an integer or a polynomial in q");
}

Lift lift_from_json(const nlohmann::json& doc) {
  Lift lift;
  lift.family = doc.at("family").get<std::string>();
  lift.name = doc.at("name").get<std::string>();
  lift.eigenvalue = polyq_from_json(doc.at("eigenvalue"));
  for (const auto& t : doc.at("terms"))
    lift.terms.push_back({polyq_from_json(t.at("coefficient")), t.at("generator").get<std::string>()});
  return lift;
}

nlohmann::json lift_to_json(const Lift& lift) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : lift.terms) terms.push_back({{"coefficient", t.coefficient.to_string()}, {"generator", t.generator}});
  return {{"family", lift.family}, {"name", lift.name}, {"eigenvalue", lift.eigenvalue.to_string()}, {"terms", terms}};
}

}  // namespace

const GeneratorSpec& FamilyEntry::generator(const std::string& name) const {
  for (const auto& g : generators)
    if (g.name == name) return g;
  throw InvalidInput("family " + spec.name + " has no generator '" + name + "'");
}

const Lift& FamilyEntry::lift(const std::string& name) const {
  for (const auto& l : lifts)
    if (l.name == name) return l;
  throw InvalidInput("family " + spec.name + " has no lift '" + name + "'");
}

GeneratorSpec generator_from_json(const nlohmann::json& doc) {
  try {
    GeneratorSpec spec;
    spec.family = doc.at("family").get<std::string>();
    spec.name = doc.at("name").get<std::string>();
    for (const auto& row : doc.at("map")) {
      std::vector<Polynomial> cells;
      for (const auto& cell : row) cells.push_back(cell_from_json(cell));
      spec.map.push_back(std::move(cells));
    }
    if (doc.contains("constraints")) spec.constraints = constraints_from_json(doc.at("constraints"));
    const auto& coords = doc.contains("coords") ? doc.at("coords") : nlohmann::json::array();
    if (coords.is_number_integer()) {
      // A bare count: the coordinates are the variables that occur, sorted.
      std::vector<std::string> names;
      auto note = [&](const Polynomial& p) {
        for (const auto& v : p.variables()) names.push_back(v);
      };
      for (const auto& row : spec.map)
        for (const auto& cell : row) note(cell);
      for (const auto& c : spec.constraints) note(c.poly);
      std::sort(names.begin(), names.end());
      names.erase(std::unique(names.begin(), names.end()), names.end());
      if (names.size() > coords.get<std::size_t>())
        throw InvalidInput("generator " + spec.name + " uses " + std::to_string(names.size()) +
                           " variables but declares " + coords.dump() + " coordinates");
      spec.coords = std::move(names);
    } else {
      spec.coords = coords.get<std::vector<std::string>>();
    }
    if (doc.contains("coefficient")) spec.coefficient = polyq_from_json(doc.at("coefficient"));
    spec.description = doc.value("description", std::string());
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed generator description: ") + e.what());
  }
}

nlohmann::json generator_to_json(const GeneratorSpec& spec) {
  nlohmann::json map = nlohmann::json::array();
  for (const auto& row : spec.map) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) r.push_back(cell.to_string());
    map.push_back(r);
  }
  nlohmann::json out = {{"family", spec.family},
                        {"name", spec.name},
                        {"coords", spec.coords},
                        {"constraints", constraints_to_json(spec.constraints)},
                        {"map", map},
                        {"coefficient", spec.coefficient.to_string()}};
  if (!spec.description.empty()) out["description"] = spec.description;
  return out;
}

Catalog Catalog::from_json(const nlohmann::json& doc) {
  Catalog catalog;
  try {
    if (doc.contains("families"))
      for (const auto& f : doc.at("families")) {
        FamilyEntry entry;
        entry.spec = family_from_json(f);
        if (f.contains("basis")) entry.basis = f.at("basis").get<std::vector<std::string>>();
        const auto name = entry.spec.name;
        if (catalog.families_.count(name)) throw InvalidInput("family " + name + " defined twice");
        catalog.families_.emplace(name, std::move(entry));
        catalog.order_.push_back(name);
      }
    auto entry_for = [&](const std::string& family) -> FamilyEntry& {
      auto it = catalog.families_.find(family);
      if (it == catalog.families_.end()) throw InvalidInput("unknown family '" + family + "'");
      return it->second;
    };
    if (doc.contains("generators"))
      for (const auto& g : doc.at("generators")) {
        auto spec = generator_from_json(g);
        auto& entry = entry_for(spec.family);
        if (spec.map.size() != entry.spec.dim)
          throw InvalidInput("generator " + spec.name + " maps into the wrong matrix size for " + spec.family);
        entry.generators.push_back(std::move(spec));
      }
    if (doc.contains("lifts"))
      for (const auto& l : doc.at("lifts")) {
        auto lift = lift_from_json(l);
        auto& entry = entry_for(lift.family);
        for (const auto& t : lift.terms) entry.generator(t.generator);
        entry.lifts.push_back(std::move(lift));
      }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed catalog: ") + e.what());
  }
  for (auto& [name, entry] : catalog.families_) {
    for (const auto& b : entry.basis) entry.generator(b);
    if (entry.basis.empty())
      for (const auto& g : entry.generators) entry.basis.push_back(g.name);
  }
  return catalog;
}

nlohmann::json Catalog::to_json() const {
  nlohmann::json families = nlohmann::json::array(), generators = nlohmann::json::array(),
                 lifts = nlohmann::json::array();
  for (const auto& name : order_) {
    const auto& entry = families_.at(name);
    auto f = family_to_json(entry.spec);
    f["basis"] = entry.basis;
    families.push_back(f);
    for (const auto& g : entry.generators) generators.push_back(generator_to_json(g));
    for (const auto& l : entry.lifts) lifts.push_back(lift_to_json(l));
  }
  return {{"families", families}, {"generators", generators}, {"lifts", lifts}};
}

const Catalog& Catalog::builtins() {
  static const Catalog catalog = from_json(nlohmann::json::parse(kBuiltinCatalog));
  return catalog;
}

const FamilyEntry& Catalog::family(const std::string& name) const {
  auto it = families_.find(name);
  if (it == families_.end()) {
    std::string known;
    for (const auto& n : order_) known += (known.empty() ? "" : ", ") + n;
    throw InvalidInput("unknown family '" + name + "' (known: " + known + ")");
  }
  return it->second;
}

std::vector<std::string> Catalog::family_names() const { return order_; }

void Catalog::add(const Catalog& other) {
  for (const auto& name : other.order_) {
    if (!families_.count(name)) order_.push_back(name);
    families_[name] = other.families_.at(name);
  }
}

nlohmann::json list_builtins() {
  const auto& catalog = Catalog::builtins();
  nlohmann::json out = nlohmann::json::array();
  for (const auto& name : catalog.family_names()) {
    const auto& entry = catalog.family(name);
    nlohmann::json generators = nlohmann::json::array(), lifts = nlohmann::json::array();
    for (const auto& g : entry.generators)
      generators.push_back({{"name", g.name}, {"coords", g.coords}, {"description", g.description}});
    for (const auto& l : entry.lifts) {
      std::string text;
      for (const auto& t : l.terms) text += (text.empty() ? "" : " + ") + ("(" + t.coefficient.to_string() + ")[" + t.generator + "]");
      lifts.push_back({{"name", l.name}, {"combination", text}, {"eigenvalue", l.eigenvalue.to_string()}});
    }
    out.push_back({{"name", name},
                   {"dim", entry.spec.dim},
                   {"coordinates", entry.spec.variables()},
                   {"odd_primes_only", entry.spec.odd_primes_only},
                   {"description", entry.spec.description},
                   {"generators", generators},
                   {"lifts", lifts},
                   {"basis", entry.basis}});
  }
  return out;
}

ClassFunction integrate_generator(const GeneratorSpec& spec, const GroupPtr& group) {
  const auto& g = *group;
  const auto p = g.prime();
  const auto dim = g.dim();
  if (spec.map.size() != dim)
    throw MapNotInGroup("generator " + spec.name + " produces matrices of the wrong size for " + g.name());
  std::vector<ModularPolynomial> cells;
  for (const auto& row : spec.map) {
    if (row.size() != dim) throw MapNotInGroup("generator " + spec.name + " has a ragged map");
    for (const auto& cell : row) cells.emplace_back(cell, spec.coords, p);
  }
  std::vector<std::pair<ModularPolynomial, Relation>> constraints;
  for (const auto& c : spec.constraints) constraints.emplace_back(ModularPolynomial(c.poly, spec.coords, p), c.relation);

  const double points = std::pow(double(p), double(spec.coords.size()));
  if (points > 5e7) throw TooLarge("generator " + spec.name + " has " + std::to_string(points) + " domain points");

  std::vector<std::uint64_t> fiber(g.order(), 0);
  std::vector<std::uint32_t> values(spec.coords.size(), 0), m(dim * dim);
  while (true) {
    bool inside = true;
    for (const auto& [poly, rel] : constraints)
      if ((poly.evaluate(values) == 0) != (rel == Relation::Equal)) {
        inside = false;
        break;
      }
    if (inside) {
      for (std::size_t i = 0; i < cells.size(); ++i) m[i] = cells[i].evaluate(values);
      const auto element = g.find(m);
      if (!element) {
        std::string point;
        for (std::size_t i = 0; i < values.size(); ++i)
          point += (i ? ", " : "") + spec.coords[i] + "=" + std::to_string(values[i]);
        throw MapNotInGroup("generator " + spec.name + " sends (" + point + ") outside " + g.name());
      }
      ++fiber[*element];
    }
    std::size_t i = 0;
    while (i < values.size() && ++values[i] == p) values[i++] = 0;
    if (i == values.size()) break;
  }

  const auto& cls = g.classes();
  std::vector<std::uint64_t> per_class(cls.count());
  std::vector<bool> seen(cls.count(), false);
  for (FiniteGroup::Element e = 0; e < g.order(); ++e) {
    const auto c = cls.class_of[e];
    if (!seen[c]) {
      seen[c] = true;
      per_class[c] = fiber[e];
    } else if (per_class[c] != fiber[e]) {
      throw NotClassInvariant("generator " + spec.name + " has fiber sizes " + std::to_string(per_class[c]) +
                              " and " + std::to_string(fiber[e]) + " over conjugate elements of " + g.name());
    }
  }
  const Rational scale(spec.coefficient.evaluate(Integer(p)));
  std::vector<Rational> out;
  for (auto v : per_class) out.push_back(scale * Rational(static_cast<unsigned long>(v)));
  return {group, std::move(out)};
}

ClassFunction integrate_lift(const Lift& lift, const FamilyEntry& family, const GroupPtr& group) {
  auto total = ClassFunction::zero(group);
  for (const auto& t : lift.terms)
    total = total + integrate_generator(family.generator(t.generator), group) *
                        Rational(t.coefficient.evaluate(Integer(group->prime())));
  return total;
}

}  // namespace ftq
