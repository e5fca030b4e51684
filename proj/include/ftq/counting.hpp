#pragma once

#include <cstdint>

#include "ftq/class_algebra.hpp"
#include "ftq/groupoid.hpp"

namespace ftq {

/// (ε ∘ (μ∘δ)^g ∘ η)(1) = |Hom(π₁Σ_g, G)| / |G|, through the class algebra.
Rational surface_invariant(const ClassAlgebra& algebra, unsigned genus);

struct HomCountLimits {
  /// Largest |G|^{2g} enumerated tuple by tuple.
  std::uint64_t naive_tuples = 100'000'000;
  /// Largest |G|² enumerated for the commutator fiber.
  std::uint64_t commutator_pairs = 400'000'000;
};

enum class HomCountMethod { Automatic, Naive, Convolution };

/// #{(A₁, B₁, …, A_g, B_g) ∈ G^{2g} : ∏[Aᵢ, Bᵢ] = 1}, counted directly on
/// group elements. The naive path enumerates all tuples; the convolution path
/// enumerates commutators once and convolves on elements. Throws ResourceCap.
Integer brute_force_hom_count(const FiniteGroup& group, unsigned genus, HomCountMethod method = HomCountMethod::Automatic,
                              const HomCountLimits& limits = {});

/// g ↦ #{(A, B) ∈ G² : [A, B] = g}, per element.
std::vector<std::uint64_t> commutator_fiber_counts(const FiniteGroup& group);

/// |Hom(π₁Σ_g, G)| / |G|.
Rational character_groupoid_cardinality(const FiniteGroup& group, unsigned genus, const HomCountLimits& limits = {});

/// The action groupoid [Hom(π₁Σ_g, G)/G] built explicitly; objects are the
/// tuples satisfying the surface relation. Throws ResourceCap above `tuple_cap`.
GroupoidPtr representation_groupoid(GroupPtr group, unsigned genus, std::uint64_t tuple_cap = 2'000'000);

}  // namespace ftq
