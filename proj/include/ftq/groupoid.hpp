#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include <json.hpp>

#include "ftq/group.hpp"
#include "ftq/linalg.hpp"

namespace ftq {

/// Finite groupoid with every object and morphism materialized.
///
/// Morphisms out of each object are kept sorted by (target, index) so that
/// hom-sets are contiguous. Composition is supplied by the constructing
/// operation, which knows the structure of its morphisms.
class FiniteGroupoid {
 public:
  using Object = std::uint32_t;
  using Morphism = std::uint32_t;
  /// compose(after, before) for target(before) == source(after).
  using Composer = std::function<Morphism(Morphism after, Morphism before)>;

  FiniteGroupoid(std::size_t objects, std::vector<Object> sources, std::vector<Object> targets,
                 std::vector<Morphism> identities, std::vector<Morphism> inverses, Composer compose);

  /// The groupoid with one object and one morphism.
  static FiniteGroupoid point();
  /// Explicit description: composition[after][before] holds the composite or -1.
  static FiniteGroupoid from_table(std::size_t objects, std::vector<Object> sources, std::vector<Object> targets,
                                   std::vector<Morphism> inverses,
                                   std::vector<std::vector<std::int64_t>> composition);

  std::size_t object_count() const { return object_count_; }
  std::size_t morphism_count() const { return sources_.size(); }
  Object source(Morphism m) const { return sources_[m]; }
  Object target(Morphism m) const { return targets_[m]; }
  Morphism identity(Object x) const { return identities_[x]; }
  Morphism inverse(Morphism m) const { return inverses_[m]; }
  Morphism compose(Morphism after, Morphism before) const;

  std::span<const Morphism> morphisms_from(Object x) const;
  std::span<const Morphism> hom(Object x, Object y) const;
  /// Position of `m` inside hom(source(m), target(m)).
  std::size_t hom_position(Morphism m) const;
  /// Position of `m` inside morphisms_from(source(m)).
  std::size_t out_position(Morphism m) const { return out_position_[m]; }

  std::size_t iso_class_count() const { return iso_reps_.size(); }
  /// Iso classes are numbered by their smallest object.
  std::size_t iso_class(Object x) const { return iso_class_[x]; }
  Object iso_representative(std::size_t iso_class) const { return iso_reps_[iso_class]; }
  std::size_t automorphism_count(Object x) const { return hom(x, x).size(); }

  /// Category and groupoid axioms on every composable pair and triple.
  /// Throws NotAGroupoid with a witness.
  void validate() const;

 private:
  std::size_t object_count_;
  std::vector<Object> sources_;
  std::vector<Object> targets_;
  std::vector<Morphism> identities_;
  std::vector<Morphism> inverses_;
  Composer compose_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Morphism> out_;
  std::vector<std::uint32_t> out_position_;
  std::vector<std::uint32_t> iso_class_;
  std::vector<Object> iso_reps_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

class GroupoidFunctor {
 public:
  /// Empty placeholder; assign a real functor before use.
  GroupoidFunctor() = default;
  /// Validates that sources, targets, identities and composition are preserved
  /// (exhaustively up to `check_cap` composable pairs). Throws NotAFunctor.
  GroupoidFunctor(GroupoidPtr source, GroupoidPtr target, std::vector<FiniteGroupoid::Object> object_map,
                  std::vector<FiniteGroupoid::Morphism> morphism_map, std::size_t check_cap = 2'000'000);

  static GroupoidFunctor identity(GroupoidPtr groupoid);
  /// Unique functor to the point groupoid `terminal`.
  static GroupoidFunctor to_point(GroupoidPtr groupoid, GroupoidPtr terminal);
  /// The functor from the point picking out `object`.
  static GroupoidFunctor from_point(GroupoidPtr point, GroupoidPtr groupoid, FiniteGroupoid::Object object);

  const GroupoidPtr& source() const { return source_; }
  const GroupoidPtr& target() const { return target_; }
  FiniteGroupoid::Object operator()(FiniteGroupoid::Object x) const { return object_map_[x]; }
  FiniteGroupoid::Morphism map(FiniteGroupoid::Morphism m) const { return morphism_map_[m]; }
  const std::vector<FiniteGroupoid::Object>& object_map() const { return object_map_; }
  const std::vector<FiniteGroupoid::Morphism>& morphism_map() const { return morphism_map_; }

 private:
  GroupoidPtr source_;
  GroupoidPtr target_;
  std::vector<FiniteGroupoid::Object> object_map_;
  std::vector<FiniteGroupoid::Morphism> morphism_map_;
};

/// `after ∘ before`.
GroupoidFunctor compose(const GroupoidFunctor& after, const GroupoidFunctor& before);

/// Rational function on the objects of a groupoid, constant on iso classes.
class IsoInvariantFunction {
 public:
  /// Throws NotIsoInvariant if `values` differs within an iso class.
  IsoInvariantFunction(GroupoidPtr groupoid, std::vector<Rational> values);

  static IsoInvariantFunction from_class_values(GroupoidPtr groupoid, std::span<const Rational> class_values);
  static IsoInvariantFunction constant(GroupoidPtr groupoid, const Rational& value);

  const GroupoidPtr& groupoid() const { return groupoid_; }
  const Rational& operator()(FiniteGroupoid::Object x) const { return values_[x]; }
  const std::vector<Rational>& values() const { return values_; }
  std::vector<Rational> class_values() const;

  friend bool operator==(const IsoInvariantFunction& a, const IsoInvariantFunction& b) {
    return a.groupoid_ == b.groupoid_ && a.values_ == b.values_;
  }

 private:
  GroupoidPtr groupoid_;
  std::vector<Rational> values_;
};

/// A finite G-set: action(g, x) must define a left action on {0, …, size-1}.
struct GroupAction {
  std::size_t size = 0;
  std::function<std::uint32_t(FiniteGroup::Element, std::uint32_t)> act;
};

/// [X/G]: objects are points, morphisms are pairs (g, x) : x → g·x.
/// Morphism (g, x) has index x·|G| + g. Throws NotAnAction.
GroupoidPtr action_groupoid(GroupPtr group, const GroupAction& action);
/// Conjugation action of G on itself.
GroupoidPtr conjugation_groupoid(GroupPtr group);
/// [G^n/G] with simultaneous conjugation; tuples encoded in base |G|, first
/// coordinate most significant.
GroupoidPtr tuple_conjugation_groupoid(GroupPtr group, std::size_t arity);

/// Σ over iso classes of 1/|Aut(x)|.
Rational cardinality(const FiniteGroupoid& groupoid);

struct FiberProduct {
  GroupoidPtr groupoid;
  GroupoidFunctor left;   // projection to the domain of the first leg
  GroupoidFunctor right;  // projection to the domain of the second leg
};

/// Iso-comma fiber product B ×_A C of f: B → A and h: C → A. Objects are
/// triples (b, c, α: f(b) → h(c)); morphisms (β, ζ) with α'∘f(β) = h(ζ)∘α.
/// Throws SizeCap when the object count would exceed `object_cap`.
FiberProduct fiber_product(const GroupoidFunctor& f, const GroupoidFunctor& h, std::size_t object_cap = 1'000'000);

/// f*(φ) = φ ∘ f
IsoInvariantFunction pullback(const GroupoidFunctor& f, const IsoInvariantFunction& phi);

/// f_!(φ)(γ') = Σ_{[(γ, α)] ∈ [f⁻¹(γ')]} φ(γ)/|Aut(γ, α)| over the iso-comma fiber.
IsoInvariantFunction pushforward(const GroupoidFunctor& f, const IsoInvariantFunction& phi);

/// The groupoid f⁻¹(γ') = Γ ×_{Γ'} {γ'} together with its projection to Γ.
FiberProduct homotopy_fiber(const GroupoidFunctor& f, FiniteGroupoid::Object object);

/// Span Γ' ←left− Γ −right→ Γ''.
struct Span {
  GroupoidFunctor left;
  GroupoidFunctor right;
};

/// Matrix of right_! ∘ left^* in the iso-class bases (column = source class).
RationalMatrix quantize_span(const Span& span);

/// Composite of (A' ← B → A) followed by (A ← C → A'') via B ×_A C.
Span compose_spans(const Span& second, const Span& first);

/// Product groupoid; object (a, b) has index a·|B| + b.
GroupoidPtr product(const GroupoidPtr& a, const GroupoidPtr& b);
GroupoidFunctor product(const GroupoidFunctor& f, const GroupoidFunctor& g, GroupoidPtr source, GroupoidPtr target);

struct Skeleton {
  GroupoidPtr groupoid;
  GroupoidFunctor inclusion;
};

/// Full subgroupoid on the iso-class representatives.
Skeleton skeletonize(const GroupoidPtr& groupoid);

/// Spans whose quantizations are the class-algebra structure maps:
/// [G/G]² ← [G²/G] → [G/G] (μ), ⋆ ← [⋆/G] → [G/G] (η), [G/G] ← [⋆/G] → ⋆ (ε),
/// [G/G]² ← [G/G] → ⋆ with x ↦ (x, x⁻¹) (β) and [G/G] ← [G³/G] → [G/G] with
/// (x, A, B) ↦ x and x[A, B] (h).
struct FrobeniusSpans {
  GroupoidPtr classes;        // [G/G]
  GroupoidPtr class_pairs;    // [G/G]², objects x·|G| + y
  GroupoidPtr point;
  Span multiplication;
  Span unit;
  Span counit;
  Span pairing;
  Span genus;
};
FrobeniusSpans frobenius_spans(GroupPtr group);

/// B → A ← C between action groupoids of one group H, with B and C covering
/// A orbit by orbit, plus the collapse maps of B and C onto [⋆/H].
struct Cospan {
  GroupoidFunctor left;        // B → A
  GroupoidFunctor right;       // C → A
  GroupoidFunctor left_base;   // B → [⋆/H]
  GroupoidFunctor right_base;  // C → [⋆/H]
};
/// Random small cospan: H drawn from `groups`, every groupoid has at most
/// `max_objects` objects. Deterministic in `seed`.
Cospan random_cospan(std::uint64_t seed, std::span<const GroupPtr> groups, std::size_t max_objects = 12);

/// {"objects": n, "morphisms": [{"src": s, "tgt": t, "inverse": i}, ...],
///  "composition": [[after][before] → index or -1]}
GroupoidPtr groupoid_from_json(const nlohmann::json& doc);

}  // namespace ftq
