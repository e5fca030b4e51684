#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "ftq/counting.hpp"
#include "ftq/errors.hpp"

using namespace ftq;
using namespace ftq::testing;

namespace {

GroupoidPtr point() { return std::make_shared<const FiniteGroupoid>(FiniteGroupoid::point()); }

GroupoidPtr classifying(const GroupPtr& g) {
  return action_groupoid(g, GroupAction{1, [](FiniteGroup::Element, std::uint32_t) { return 0u; }});
}

IsoInvariantFunction random_invariant(const GroupoidPtr& g, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::vector<Rational> values;
  for (std::size_t c = 0; c < g->iso_class_count(); ++c) values.emplace_back(num(rng));
  return IsoInvariantFunction::from_class_values(g, values);
}

}  // namespace

TEST(Groupoid, Cardinalities) {
  EXPECT_EQ(cardinality(FiniteGroupoid::point()), 1);
  for (const auto& g : {z2(), builtin("AGL1", 3), builtin("U3", 2), builtin("GmZ2", 5)}) {
    EXPECT_EQ(cardinality(*classifying(g)), Rational(1, g->order()));
    const auto conj = conjugation_groupoid(g);
    EXPECT_EQ(cardinality(*conj), 1);
    EXPECT_EQ(conj->iso_class_count(), g->class_count());
  }
  // Hom(ℤ², ℤ/2)/(ℤ/2): four commuting pairs, each fixed by conjugation.
  const auto pairs = tuple_conjugation_groupoid(z2(), 2);
  EXPECT_EQ(pairs->object_count(), 4u);
  EXPECT_EQ(cardinality(*pairs), 2);
  EXPECT_EQ(cardinality(*representation_groupoid(z2(), 1)), 2);
}

TEST(Groupoid, TrivialAndSwapActions) {
  const auto trivial = classifying(trivial_group());
  EXPECT_EQ(trivial->object_count(), 1u);
  EXPECT_EQ(trivial->morphism_count(), 1u);

  const auto swap = action_groupoid(z2(), GroupAction{2, [](FiniteGroup::Element g, std::uint32_t x) {
                                                         return g == 0 ? x : 1 - x;
                                                       }});
  EXPECT_EQ(swap->iso_class_count(), 1u);
  EXPECT_EQ(swap->automorphism_count(0), 1u);
  EXPECT_EQ(swap->hom(0, 1).size(), 1u);
  EXPECT_EQ(cardinality(*swap), 1);
  swap->validate();
}

TEST(Groupoid, ActionMorphismIndexing) {
  const auto g = builtin("AGL1", 3);
  const auto conj = conjugation_groupoid(g);
  const auto n = g->order();
  for (FiniteGroup::Element x = 0; x < n; ++x)
    for (FiniteGroup::Element h = 0; h < n; ++h) {
      const auto m = x * n + h;
      EXPECT_EQ(conj->source(m), x);
      EXPECT_EQ(conj->target(m), g->multiply(g->multiply(h, x), g->inverse(h)));
    }
}

TEST(Groupoid, RejectsNonActionsAndBadTables) {
  EXPECT_THROW(action_groupoid(z2(), GroupAction{2, [](FiniteGroup::Element, std::uint32_t x) { return 1 - x; }}),
               NotAnAction);
  EXPECT_THROW(action_groupoid(z2(), GroupAction{2, [](FiniteGroup::Element, std::uint32_t) { return 5u; }}),
               NotAnAction);
  // Second morphism is not invertible: s∘s = s.
  EXPECT_THROW(FiniteGroupoid::from_table(1, {0, 0}, {0, 0}, {0, 1}, {{0, 1}, {1, 1}}), NotAGroupoid);
  EXPECT_THROW(FiniteGroupoid::from_table(1, {0}, {1}, {0}, {{0}}), NotAGroupoid);
  const auto conj = conjugation_groupoid(z2());
  EXPECT_THROW(IsoInvariantFunction(conjugation_groupoid(builtin("AGL1", 3)), {1, 2, 2, 3, 3, 4}), NotIsoInvariant);
  EXPECT_THROW(tuple_conjugation_groupoid(builtin("U4", 3), 3), SizeCap);
  (void)conj;
}

TEST(Groupoid, FromTableAndJson) {
  const auto doc = nlohmann::json::parse(R"({
    "objects": 1,
    "morphisms": [{"src": 0, "tgt": 0, "inverse": 0}, {"src": 0, "tgt": 0, "inverse": 1}],
    "composition": [[0, 1], [1, 0]]})");
  const auto g = groupoid_from_json(doc);
  EXPECT_EQ(g->identity(0), 0u);
  EXPECT_EQ(cardinality(*g), Rational(1, 2));
  EXPECT_THROW(groupoid_from_json(nlohmann::json::parse(R"({"objects": 1})")), InvalidInput);
}

TEST(Groupoid, FunctorValidation) {
  const auto bz2 = classifying(z2());
  const auto pt = point();
  EXPECT_NO_THROW(GroupoidFunctor::to_point(bz2, pt));
  // Sending the generator to the identity is a functor; sending the identity to s is not.
  EXPECT_NO_THROW(GroupoidFunctor(bz2, bz2, {0}, {0, 0}));
  EXPECT_THROW(GroupoidFunctor(bz2, bz2, {0}, {1, 1}), NotAFunctor);
  EXPECT_THROW(GroupoidFunctor(bz2, bz2, {0}, {0}), NotAFunctor);
}

TEST(Groupoid, PullbackAndPushforwardBasics) {
  std::mt19937 rng(1);
  const auto conj = conjugation_groupoid(builtin("AGL1", 3));
  const auto pt = point();
  const auto phi = random_invariant(conj, rng);
  EXPECT_EQ(pullback(GroupoidFunctor::identity(conj), phi), phi);
  EXPECT_EQ(pushforward(GroupoidFunctor::identity(conj), phi), phi);
  const auto c = IsoInvariantFunction::constant(pt, Rational(7, 3));
  EXPECT_EQ(pullback(GroupoidFunctor::to_point(conj, pt), c), IsoInvariantFunction::constant(conj, Rational(7, 3)));
  for (const auto& g : {conj, tuple_conjugation_groupoid(builtin("U3", 2), 2), classifying(builtin("GmZ2", 5))}) {
    const auto one = IsoInvariantFunction::constant(g, 1);
    EXPECT_EQ(pushforward(GroupoidFunctor::to_point(g, pt), one)(0), cardinality(*g));
  }
}

TEST(Groupoid, FiberProductOfClassifyingGroupoids) {
  const auto pt = point();
  const auto bz2 = classifying(z2());
  const auto f = GroupoidFunctor::to_point(bz2, pt);
  const auto fp = fiber_product(f, f);
  EXPECT_EQ(cardinality(*fp.groupoid), Rational(1, 4));
  EXPECT_EQ(fp.groupoid->object_count(), 1u);
  fp.groupoid->validate();

  // With one leg the identity the fiber product is equivalent to the other source.
  const auto conj = conjugation_groupoid(builtin("AGL1", 3));
  const auto id = GroupoidFunctor::identity(conj);
  const auto other = GroupoidFunctor::from_point(pt, conj, 2);
  const auto fp2 = fiber_product(id, other);
  EXPECT_EQ(cardinality(*fp2.groupoid), 1);
  EXPECT_EQ(fp2.groupoid->iso_class_count(), 1u);
  EXPECT_THROW(fiber_product(id, id, 5), SizeCap);
}

TEST(Groupoid, SkeletonPreservesInvariants) {
  for (const auto& g : {conjugation_groupoid(builtin("AGL1", 5)), tuple_conjugation_groupoid(builtin("U3", 2), 2)}) {
    const auto sk = skeletonize(g);
    EXPECT_EQ(sk.groupoid->object_count(), g->iso_class_count());
    EXPECT_EQ(cardinality(*sk.groupoid), cardinality(*g));
    sk.groupoid->validate();
    // Quantizing through the skeleton or the original gives the same pushforward to a point.
    const auto pt = point();
    Span via_skeleton{GroupoidFunctor::to_point(sk.groupoid, pt), GroupoidFunctor::to_point(sk.groupoid, pt)};
    Span direct{GroupoidFunctor::to_point(g, pt), GroupoidFunctor::to_point(g, pt)};
    EXPECT_EQ(quantize_span(via_skeleton), quantize_span(direct));
  }
}

TEST(Groupoid, IdentitySpanQuantizesToIdentity) {
  const auto conj = conjugation_groupoid(builtin("U3", 2));
  const Span s{GroupoidFunctor::identity(conj), GroupoidFunctor::identity(conj)};
  EXPECT_EQ(quantize_span(s), RationalMatrix::identity(conj->iso_class_count()));
}

TEST(Groupoid, BeckChevalleyOnRandomCospans) {
  const std::vector<GroupPtr> groups = {z2(), builtin("AGL1", 3), builtin("U3", 2), builtin("GmZ2", 5)};
  std::mt19937 rng(77);
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const auto cs = random_cospan(seed, groups);
    const auto fp = fiber_product(cs.left, cs.right);
    const auto phi = random_invariant(cs.left.source(), rng);
    EXPECT_EQ(pullback(cs.right, pushforward(cs.left, phi)), pushforward(fp.right, pullback(fp.left, phi)))
        << "seed " << seed;
  }
}

TEST(Groupoid, FrobeniusSpansMatchClassAlgebra) {
  for (const auto& g : {z2(), builtin("AGL1", 3), builtin("U3", 2), builtin("GmZ2", 3)}) {
    const ClassAlgebra alg(g);
    const auto spans = frobenius_spans(g);
    const std::size_t k = alg.dimension();

    const auto mult = quantize_span(spans.multiplication);
    ASSERT_EQ(mult.rows(), k);
    ASSERT_EQ(mult.cols(), k * k);
    const auto pairing = quantize_span(spans.pairing);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        EXPECT_EQ(mult.column_values(a * k + b), alg.convolve(alg.indicator(a), alg.indicator(b)).values());
        EXPECT_EQ(pairing(0, a * k + b), alg.pair(alg.indicator(a), alg.indicator(b)));
      }
    EXPECT_EQ(quantize_span(spans.unit).column_values(0), alg.unit().values());
    const auto counit = quantize_span(spans.counit);
    for (std::size_t a = 0; a < k; ++a) EXPECT_EQ(counit(0, a), alg.counit(alg.indicator(a)));
    EXPECT_EQ(quantize_span(spans.genus), alg.genus_matrix());

    // Composite span (genus after unit) quantizes to the product of the quantizations.
    const auto composite = compose_spans(spans.genus, spans.unit);
    EXPECT_EQ(quantize_span(composite), quantize_span(spans.genus) * quantize_span(spans.unit));
  }
}
