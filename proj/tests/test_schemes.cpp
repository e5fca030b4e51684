#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ftq/errors.hpp"

using namespace ftq;
using namespace ftq::testing;

namespace {

GeneratorSpec parse_generator(const char* text) { return generator_from_json(nlohmann::json::parse(text)); }

bool is_square_mod(std::uint32_t t, std::uint32_t p) {
  for (std::uint32_t s = 1; s < p; ++s)
    if (s * s % p == t) return true;
  return false;
}

}  // namespace

TEST(Catalog, BuiltinContents) {
  const auto& cat = Catalog::builtins();
  EXPECT_EQ(cat.family_names(), (std::vector<std::string>{"AGL1", "U3", "U4", "GmZ2"}));
  EXPECT_EQ(cat.family("AGL1").lifts.size(), 2u);
  EXPECT_EQ(cat.family("U3").lifts.size(), 2u);
  EXPECT_EQ(cat.family("U4").lifts.size(), 3u);
  EXPECT_EQ(cat.family("GmZ2").lifts.size(), 2u);
  EXPECT_TRUE(cat.family("GmZ2").spec.odd_primes_only);
  EXPECT_EQ(cat.family("AGL1").lift("v1").eigenvalue, PolyQ::parse("q^2*(q-1)^2"));
  EXPECT_THROW(cat.family("SL2"), InvalidInput);
  EXPECT_THROW(cat.family("AGL1").generator("K"), InvalidInput);
  EXPECT_EQ(list_builtins().size(), 4u);
}

TEST(Catalog, JsonRoundTrip) {
  const auto doc = Catalog::builtins().to_json();
  EXPECT_EQ(Catalog::from_json(doc).to_json(), doc);
  for (const auto& name : Catalog::builtins().family_names())
    for (const auto& g : Catalog::builtins().family(name).generators)
      EXPECT_EQ(generator_to_json(generator_from_json(generator_to_json(g))), generator_to_json(g));
}

TEST(Catalog, LoadsUserFamilies) {
  // ℤ/p as the matrices [[1, t], [0, 1]].
  const auto doc = nlohmann::json::parse(R"({
    "families": [{"name": "Ga", "dim": 2, "pattern": [[1, "t"], [0, 1]], "generators": [{"t": 1}], "basis": ["O"]}],
    "generators": [{"family": "Ga", "name": "O", "coords": 0, "map": [[1, 0], [0, 1]]}],
    "lifts": []})");
  Catalog cat = Catalog::from_json(doc);
  cat.add(Catalog::builtins());
  EXPECT_TRUE(cat.contains("Ga"));
  EXPECT_TRUE(cat.contains("AGL1"));
  const auto g = instantiate_family(cat.family("Ga").spec, 7);
  EXPECT_EQ(g->order(), 7u);
  EXPECT_EQ(g->class_count(), 7u);
  EXPECT_THROW(Catalog::from_json(nlohmann::json::parse(R"({"families": [{"name": 3}]})")), InvalidInput);
}

TEST(Integrate, IdentityPointIsTheUnit) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto g = builtin("AGL1", p);
    const auto& family = Catalog::builtins().family("AGL1");
    EXPECT_EQ(integrate_generator(family.generator("I"), g), ClassFunction::indicator(g, 0));
  }
}

TEST(Integrate, TranslationsFormOneClass) {
  const auto g = builtin("AGL1", 7);
  const auto j = integrate_generator(Catalog::builtins().family("AGL1").generator("J"), g);
  for (FiniteGroup::Element x = 0; x < g->order(); ++x) {
    const auto m = g->matrix(x);
    const bool translation = m[0] == 1 && m[1] != 0;
    EXPECT_EQ(j.at_element(x), translation ? 1 : 0);
  }
}

TEST(Integrate, TorusSquaringTable) {
  const auto& family = Catalog::builtins().family("GmZ2");
  for (std::uint32_t p : {5u, 7u, 13u}) {
    const auto g = builtin("GmZ2", p);
    const auto v1 = integrate_lift(family.lift("v1"), family, g);
    const auto v2 = integrate_lift(family.lift("v2"), family, g);
    for (FiniteGroup::Element x = 0; x < g->order(); ++x) {
      const auto m = g->matrix(x);
      const bool diagonal = m[1] == 0;
      const bool square = diagonal && is_square_mod(m[0], p);
      const bool identity = x == 0;
      EXPECT_EQ(v1.at_element(x), square ? 4 : 0);
      EXPECT_EQ(v2.at_element(x), identity ? Rational(int(p) - 3) : square ? Rational(-2) : Rational(0));
    }
  }
}

TEST(Integrate, PuncturedCenterOfU3) {
  const auto g = builtin("U3", 3);
  const auto f = integrate_generator(Catalog::builtins().family("U3").generator("Zstar"), g);
  int classes_hit = 0;
  for (std::size_t c = 0; c < g->class_count(); ++c) {
    if (f[c] == 0) continue;
    EXPECT_EQ(f[c], 1);
    EXPECT_EQ(g->classes().class_sizes[c], 1u);
    ++classes_hit;
  }
  EXPECT_EQ(classes_hit, 2);
}

TEST(Integrate, CoefficientIsSpecializedAtP) {
  auto spec = Catalog::builtins().family("AGL1").generator("I");
  spec.coefficient = PolyQ::parse("q^2 + 1");
  const auto g = builtin("AGL1", 5);
  EXPECT_EQ(integrate_generator(spec, g)[0], 26);
}

TEST(Integrate, Errors) {
  const auto line = parse_generator(
      R"({"family": "U3", "name": "xline", "coords": ["x"], "map": [[1, "x", 0], [0, 1, 0], [0, 0, 1]]})");
  EXPECT_THROW(integrate_generator(line, builtin("U3", 3)), NotClassInvariant);
  const auto scaling = parse_generator(
      R"({"family": "AGL1", "name": "scale", "coords": ["b"], "map": [["b", 0], [0, 1]]})");
  EXPECT_THROW(integrate_generator(scaling, builtin("AGL1", 5)), MapNotInGroup);
  EXPECT_THROW(parse_generator(R"({"family": "AGL1", "name": "bad", "coords": ["b"], "map": [["b", {}], [0, 1]]})"),
               InvalidInput);
}
