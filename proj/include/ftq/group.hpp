#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ftq/poly.hpp"

namespace ftq {

bool is_prime(std::uint64_t n);

/// Element of the prime field F_p.
class FpElement {
 public:
  FpElement(std::uint64_t value, std::uint32_t modulus)
      : value_(static_cast<std::uint32_t>(value % modulus)), modulus_(modulus) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FpElement operator+(FpElement rhs) const { return {std::uint64_t(value_) + rhs.value_, modulus_}; }
  FpElement operator-(FpElement rhs) const { return {std::uint64_t(value_) + modulus_ - rhs.value_, modulus_}; }
  FpElement operator*(FpElement rhs) const { return {std::uint64_t(value_) * rhs.value_, modulus_}; }
  /// Throws std::domain_error for zero.
  FpElement inverse() const;

  friend bool operator==(FpElement, FpElement) = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

enum class Relation { Equal, NotEqual };

struct Constraint {
  Polynomial poly;
  Relation relation = Relation::Equal;
};

/// Declarative description of a family of matrix groups over prime fields:
/// all n×n matrices matching `pattern` whose variables satisfy `constraints`.
struct FamilySpec {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::vector<Polynomial>> pattern;
  std::vector<Constraint> constraints;
  /// Variable assignments designating candidate generators.
  std::vector<std::map<std::string, std::int64_t>> generators;
  bool odd_primes_only = false;
  std::string description;

  /// Pattern variables in order of first appearance (row-major), followed by
  /// any variables that occur only in constraints.
  std::vector<std::string> variables() const;
};

struct GroupLimits {
  std::uint32_t max_prime = 101;
  std::uint64_t max_order = 1'000'000;
  /// Largest number of variable assignments enumerated while instantiating.
  std::uint64_t max_assignments = 50'000'000;
  std::uint64_t table_threshold = 4096;
  std::uint64_t exhaustive_axiom_threshold = 512;
  std::uint64_t sampled_axiom_triples = 10'000;
};

struct ConjugacyData {
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> class_reps;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> centralizer_orders;
  /// Class containing the inverses of the elements of each class.
  std::vector<std::uint32_t> inverse_class;

  std::size_t count() const { return class_reps.size(); }
};

/// Finite group of matrices over F_p. Element 0 is the identity. Immutable
/// after construction and safe to share between threads.
class FiniteGroup {
 public:
  using Element = std::uint32_t;

  /// Builds the group generated by nothing more than the given list: the
  /// list must already be closed under products and inverses.
  static FiniteGroup from_matrices(std::string name, std::uint32_t prime, std::size_t dim,
                                   std::vector<std::vector<std::uint32_t>> matrices,
                                   const std::vector<std::vector<std::uint32_t>>& generator_hint = {},
                                   const GroupLimits& limits = {});

  const std::string& name() const { return name_; }
  std::uint32_t prime() const { return prime_; }
  std::size_t dim() const { return dim_; }
  std::size_t order() const { return order_; }
  Element identity() const { return 0; }

  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const { return inverse_[a]; }
  std::span<const std::uint32_t> matrix(Element a) const;
  std::optional<Element> find(std::span<const std::uint32_t> matrix) const;

  bool has_table() const { return !table_.empty(); }
  const ConjugacyData& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.count(); }
  std::span<const Element> generators() const { return generators_; }

 private:
  FiniteGroup() = default;

  using Key = unsigned __int128;
  struct KeyHash {
    std::size_t operator()(Key k) const noexcept {
      const auto lo = static_cast<std::uint64_t>(k);
      const auto hi = static_cast<std::uint64_t>(k >> 64);
      return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
  };
  Key key(std::span<const std::uint32_t> matrix) const;
  Element multiply_matrices(Element a, Element b) const;

  std::string name_;
  std::uint32_t prime_ = 2;
  std::size_t dim_ = 0;
  std::size_t order_ = 0;
  std::vector<std::uint32_t> entries_;  // order_ × dim_² entries
  std::unordered_map<Key, Element, KeyHash> index_;
  std::vector<Element> table_;          // order_² entries when small
  std::vector<Element> inverse_;
  std::vector<Element> generators_;
  ConjugacyData classes_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// All matrices over F_p matching the family; closure, identity and inverses
/// are verified (NotAGroup), associativity exhaustively or on sampled triples.
GroupPtr instantiate_family(const FamilySpec& spec, std::uint32_t prime, const GroupLimits& limits = {});

/// Orbits of conjugation by `generators`, which must generate the group.
ConjugacyData conjugacy_classes(const FiniteGroup& group, std::span<const FiniteGroup::Element> generators);

/// [a, b] = a b a⁻¹ b⁻¹.
FiniteGroup::Element commutator(const FiniteGroup& group, FiniteGroup::Element a, FiniteGroup::Element b);

/// Smallest generating set found greedily in index order.
std::vector<FiniteGroup::Element> greedy_generators(const FiniteGroup& group);

/// Size of the subgroup generated by `generators`.
std::size_t generated_order(const FiniteGroup& group, std::span<const FiniteGroup::Element> generators);

}  // namespace ftq
