#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ftq/correspondence.hpp"
#include "ftq/counting.hpp"
#include "ftq/errors.hpp"

using namespace ftq;
using namespace ftq::testing;

namespace {

/// Direct enumeration of Hom(π₁Σ_g, G), independent of the library's counters.
std::uint64_t enumerate_homs(const FiniteGroup& g, unsigned genus) {
  const std::size_t n = g.order();
  std::vector<FiniteGroup::Element> tuple(2 * genus, 0);
  std::uint64_t count = 0;
  while (true) {
    FiniteGroup::Element acc = 0;
    for (unsigned i = 0; i < genus; ++i) acc = g.multiply(acc, commutator(g, tuple[2 * i], tuple[2 * i + 1]));
    if (acc == 0) ++count;
    std::size_t pos = 0;
    while (pos < tuple.size() && ++tuple[pos] == n) tuple[pos++] = 0;
    if (pos == tuple.size()) break;
  }
  return count;
}

}  // namespace

TEST(Counting, SurfaceInvariantExamples) {
  const ClassAlgebra z(z2());
  for (unsigned g = 1; g <= 4; ++g) EXPECT_EQ(surface_invariant(z, g), Rational(Integer(1) << (2 * g - 1)));
  EXPECT_EQ(surface_invariant(ClassAlgebra(builtin("AGL1", 3)), 2), 81);
  EXPECT_EQ(surface_invariant(ClassAlgebra(builtin("AGL1", 3)), 1), 3);
  EXPECT_EQ(surface_invariant(ClassAlgebra(builtin("U3", 2)), 1), 5);
  const ClassAlgebra trivial(trivial_group());
  for (unsigned g = 0; g <= 3; ++g) EXPECT_EQ(surface_invariant(trivial, g), 1);
}

TEST(Counting, BruteForceExamples) {
  EXPECT_EQ(brute_force_hom_count(*z2(), 2), 16);
  EXPECT_EQ(brute_force_hom_count(*builtin("AGL1", 3), 2, HomCountMethod::Naive), 486);
  EXPECT_EQ(enumerate_homs(*builtin("AGL1", 3), 2), 486u);
  EXPECT_EQ(brute_force_hom_count(*builtin("U3", 2), 1), 40);
}

TEST(Counting, NaiveAndConvolutionAgree) {
  for (const auto& g : {builtin("AGL1", 3), builtin("U3", 2), builtin("GmZ2", 5), builtin("AGL1", 5)}) {
    for (unsigned genus = 1; genus <= 2; ++genus) {
      const auto naive = brute_force_hom_count(*g, genus, HomCountMethod::Naive);
      EXPECT_EQ(naive, brute_force_hom_count(*g, genus, HomCountMethod::Convolution)) << g->name();
      EXPECT_EQ(naive, Integer(std::to_string(enumerate_homs(*g, genus)))) << g->name();
    }
  }
}

TEST(Counting, ConvolutionMatchesFrobeniusFormulaOnLargerGroups) {
  for (const auto& g : {builtin("U3", 3), builtin("AGL1", 7)}) {
    const ClassAlgebra alg(g);
    for (unsigned genus = 1; genus <= 3; ++genus) {
      const Rational via_tqft = surface_invariant(alg, genus) * g->order();
      EXPECT_EQ(Rational(brute_force_hom_count(*g, genus, HomCountMethod::Convolution)), via_tqft);
      EXPECT_EQ(census_count(eigen_census(alg).census, genus), via_tqft);
    }
  }
}

TEST(Counting, CommutatorFibers) {
  const auto g = builtin("U3", 2);
  const auto fibers = commutator_fiber_counts(*g);
  std::uint64_t total = 0;
  for (auto f : fibers) total += f;
  EXPECT_EQ(total, 64u);
  EXPECT_EQ(fibers[0], 40u);  // commuting pairs = |G|·k
}

TEST(Counting, ResourceCap) {
  HomCountLimits tight;
  tight.naive_tuples = 10;
  EXPECT_THROW(brute_force_hom_count(*builtin("AGL1", 3), 2, HomCountMethod::Naive, tight), ResourceCap);
  tight.commutator_pairs = 10;
  EXPECT_THROW(brute_force_hom_count(*builtin("AGL1", 3), 2, HomCountMethod::Convolution, tight), ResourceCap);
  EXPECT_THROW(representation_groupoid(builtin("AGL1", 5), 2, 1000), ResourceCap);
}

TEST(Counting, RepresentationGroupoidCardinality) {
  for (const auto& g : {z2(), builtin("AGL1", 3), builtin("U3", 2)}) {
    for (unsigned genus = 1; genus <= 2; ++genus) {
      const auto rep = representation_groupoid(g, genus);
      EXPECT_EQ(rep->object_count(), enumerate_homs(*g, genus));
      EXPECT_EQ(cardinality(*rep), character_groupoid_cardinality(*g, genus));
      EXPECT_EQ(cardinality(*rep), surface_invariant(ClassAlgebra(g), genus));
    }
  }
  EXPECT_EQ(cardinality(*representation_groupoid(builtin("AGL1", 3), 1)), 3);
}
