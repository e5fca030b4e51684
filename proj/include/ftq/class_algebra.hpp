#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ftq/group.hpp"
#include "ftq/linalg.hpp"

namespace ftq {

/// Exact rational function on a finite group, constant on conjugacy classes,
/// stored by class index (the identity class is index 0).
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<Rational> values);

  static ClassFunction zero(GroupPtr group);
  static ClassFunction constant(GroupPtr group, const Rational& value);
  static ClassFunction indicator(GroupPtr group, std::size_t class_index);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t class_index) const { return values_[class_index]; }
  const Rational& at_element(FiniteGroup::Element g) const;

  ClassFunction operator+(const ClassFunction& rhs) const;
  ClassFunction operator-(const ClassFunction& rhs) const;
  ClassFunction operator*(const Rational& factor) const;

  bool is_zero() const;
  friend bool operator==(const ClassFunction& lhs, const ClassFunction& rhs) {
    return lhs.group_ == rhs.group_ && lhs.values_ == rhs.values_;
  }

 private:
  GroupPtr group_;
  std::vector<Rational> values_;
};

void require_same_group(const GroupPtr& a, const GroupPtr& b);

/// {"values": ["num/den", ...], "representatives": [[row-major matrix], ...]}
nlohmann::json to_json(const ClassFunction& f);
ClassFunction class_function_from_json(GroupPtr group, const nlohmann::json& doc);

/// N(C1, C2, C) = #{(x, y) ∈ C1 × C2 : x y = c} for the representative c of C.
class StructureConstants {
 public:
  explicit StructureConstants(const FiniteGroup& group);

  std::uint64_t operator()(std::size_t c1, std::size_t c2, std::size_t c) const {
    return counts_[(c1 * k_ + c2) * k_ + c];
  }
  std::size_t class_count() const { return k_; }

 private:
  std::size_t k_;
  std::vector<std::uint32_t> counts_;
};

/// Element of A ⊗ A in the class-indicator basis: entry (i, j) is the
/// value at (rep_i, rep_j) of the corresponding function on G × G.
using TensorSquare = RationalMatrix;

/// The Frobenius algebra of class functions of a finite group.
class ClassAlgebra {
 public:
  explicit ClassAlgebra(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const FiniteGroup& g() const { return *group_; }
  std::size_t dimension() const { return group_->class_count(); }
  const StructureConstants& structure_constants() const { return constants_; }

  /// μ(a ⊗ b)(g) = Σ_h a(h) b(h⁻¹ g)
  ClassFunction convolve(const ClassFunction& a, const ClassFunction& b) const;
  /// β(a ⊗ b) = (1/|G|) Σ_g a(g) b(g⁻¹)
  Rational pair(const ClassFunction& a, const ClassFunction& b) const;
  /// η(1) = 𝟙₁
  ClassFunction unit() const;
  /// ε(a) = a(1)/|G|
  Rational counit(const ClassFunction& a) const;
  /// γ(1) evaluated on class representatives: |C_G(g1)| if g1 ~ g2⁻¹, else 0.
  Rational gamma(std::size_t class1, std::size_t class2) const;
  TensorSquare copairing() const;
  /// δ(a) = (μ ⊗ id)(a ⊗ γ(1))
  TensorSquare comultiply(const ClassFunction& a) const;
  /// h = μ ∘ δ
  ClassFunction genus_operator(const ClassFunction& a) const;
  /// h(η(1)); equals the commutator fiber count g ↦ #{(A, B) : [A, B] = g}.
  const ClassFunction& genus_element() const { return genus_element_; }
  /// Matrix of h in the class-indicator basis (column j is h(𝟙_{C_j})).
  RationalMatrix genus_matrix() const;

  /// μ applied to a tensor-square element.
  ClassFunction multiply_tensor(const TensorSquare& t) const;
  /// (β ⊗ id)(a ⊗ t) and (id ⊗ β)(t ⊗ a).
  ClassFunction contract_left(const ClassFunction& a, const TensorSquare& t) const;
  ClassFunction contract_right(const TensorSquare& t, const ClassFunction& a) const;
  /// (ε ⊗ id)(t) and (id ⊗ ε)(t).
  ClassFunction counit_left(const TensorSquare& t) const;
  ClassFunction counit_right(const TensorSquare& t) const;

  ClassFunction indicator(std::size_t class_index) const { return ClassFunction::indicator(group_, class_index); }
  ClassFunction constant(const Rational& value) const { return ClassFunction::constant(group_, value); }

 private:
  void check(const ClassFunction& f) const;

  GroupPtr group_;
  StructureConstants constants_;
  ClassFunction genus_element_;
};

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct AxiomReport {
  std::string group;
  std::vector<AxiomCheck> checks;
  bool passed() const;
};

/// Commutativity, associativity of μ and β, unit and counit laws, both snake
/// identities and μ∘δ = μ∘(id ⊗ (μ∘δ∘η)(1)), checked on the class basis.
AxiomReport frobenius_axiom_suite(const ClassAlgebra& algebra);

}  // namespace ftq
