#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ftq/class_algebra.hpp"
#include "ftq/group.hpp"
#include "ftq/poly.hpp"

namespace ftq {

/// A constructible family over a matrix group: the points of `coords`
/// satisfying `constraints`, mapped into the group by `map`, weighted by
/// `coefficient` (specialized at q := p).
struct GeneratorSpec {
  std::string family;
  std::string name;
  std::vector<std::string> coords;
  std::vector<Constraint> constraints;
  std::vector<std::vector<Polynomial>> map;
  PolyQ coefficient{1};
  std::string description;
};

struct LiftTerm {
  PolyQ coefficient;
  std::string generator;
};

/// A PolyQ-linear combination of generators with its expected eigenvalue
/// under the genus operator.
struct Lift {
  std::string family;
  std::string name;
  std::vector<LiftTerm> terms;
  PolyQ eigenvalue;
};

struct FamilyEntry {
  FamilySpec spec;
  std::vector<GeneratorSpec> generators;
  std::vector<Lift> lifts;
  /// Generators spanning an invariant subspace, used by default for genus matrices.
  std::vector<std::string> basis;

  const GeneratorSpec& generator(const std::string& name) const;
  const Lift& lift(const std::string& name) const;
  /// Smallest prime the family is defined at.
  std::uint32_t smallest_prime() const { return spec.odd_primes_only ? 3 : 2; }
  bool supports(std::uint32_t p) const { return !spec.odd_primes_only || p != 2; }
};

class Catalog {
 public:
  /// {"families": [family json + "basis"], "generators": [...], "lifts": [...]}
  static Catalog from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;

  /// AGL1, U3, U4 and GmZ2 with their strata and lifts.
  static const Catalog& builtins();

  const FamilyEntry& family(const std::string& name) const;
  bool contains(const std::string& name) const { return families_.count(name) != 0; }
  std::vector<std::string> family_names() const;

  void add(const Catalog& other);

 private:
  std::map<std::string, FamilyEntry> families_;
  std::vector<std::string> order_;
};

/// The catalog listing for the `catalog` command.
nlohmann::json list_builtins();

GeneratorSpec generator_from_json(const nlohmann::json& doc);
nlohmann::json generator_to_json(const GeneratorSpec& spec);

/// Fiber counts of the generator over the group, times coefficient(p).
/// Throws MapNotInGroup or NotClassInvariant.
ClassFunction integrate_generator(const GeneratorSpec& spec, const GroupPtr& group);

/// Σ coefficient(p) · integrate_generator(generator).
ClassFunction integrate_lift(const Lift& lift, const FamilyEntry& family, const GroupPtr& group);

}  // namespace ftq
