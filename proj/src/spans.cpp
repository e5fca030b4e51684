#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ftq/errors.hpp"
#include "ftq/groupoid.hpp"

namespace ftq {

using Object = FiniteGroupoid::Object;
using Morphism = FiniteGroupoid::Morphism;
using Element = FiniteGroup::Element;

namespace {

// Functor [X/G] → [Y/G] induced by an equivariant map on points.
GroupoidFunctor equivariant(const GroupoidPtr& x, const GroupoidPtr& y, std::size_t order,
                            const std::vector<Object>& points) {
  std::vector<Morphism> morphisms(x->morphism_count());
  for (Morphism m = 0; m < morphisms.size(); ++m)
    morphisms[m] = static_cast<Morphism>(points[m / order] * order + m % order);
  return GroupoidFunctor(x, y, points, std::move(morphisms));
}

GroupoidPtr one_point(const GroupPtr& group) {
  return action_groupoid(group, {1, [](Element, std::uint32_t) { return std::uint32_t{0}; }});
}

}  // namespace

FrobeniusSpans frobenius_spans(GroupPtr group) {
  const auto& g = *group;
  const auto n = g.order();
  FrobeniusSpans s;
  s.classes = conjugation_groupoid(group);
  s.class_pairs = product(s.classes, s.classes);
  s.point = std::make_shared<const FiniteGroupoid>(FiniteGroupoid::point());
  const auto pairs = tuple_conjugation_groupoid(group, 2);
  const auto triples = tuple_conjugation_groupoid(group, 3);
  const auto bg = one_point(group);
  const auto mc = s.classes->morphism_count();

  // μ: (x, y) ↦ (x, y) and xy.
  {
    std::vector<Object> left_obj(pairs->object_count()), right_obj(pairs->object_count());
    std::vector<Morphism> left_mor(pairs->morphism_count()), right_mor(pairs->morphism_count());
    for (Object o = 0; o < pairs->object_count(); ++o) {
      const Element x = o / n, y = o % n;
      left_obj[o] = o;
      right_obj[o] = g.multiply(x, y);
      for (Element e = 0; e < n; ++e) {
        const Morphism m = o * n + e;
        left_mor[m] = static_cast<Morphism>((x * n + e) * mc + (y * n + e));
        right_mor[m] = right_obj[o] * n + e;
      }
    }
    s.multiplication = {GroupoidFunctor(pairs, s.class_pairs, left_obj, left_mor),
                        GroupoidFunctor(pairs, s.classes, right_obj, right_mor)};
  }
  // η and ε through [⋆/G] ↦ identity element.
  {
    std::vector<Morphism> mor(n);
    for (Element e = 0; e < n; ++e) mor[e] = e;  // identity object 0, morphism 0·n + e
    GroupoidFunctor include(bg, s.classes, {g.identity()}, mor);
    s.unit = {GroupoidFunctor::to_point(bg, s.point), include};
    s.counit = {include, GroupoidFunctor::to_point(bg, s.point)};
  }
  // β through the cylinder: x ↦ (x, x⁻¹).
  {
    std::vector<Object> obj(n);
    std::vector<Morphism> mor(n * n);
    for (Element x = 0; x < n; ++x) {
      const auto xi = g.inverse(x);
      obj[x] = static_cast<Object>(x * n + xi);
      for (Element e = 0; e < n; ++e) mor[x * n + e] = static_cast<Morphism>((x * n + e) * mc + (xi * n + e));
    }
    s.pairing = {GroupoidFunctor(s.classes, s.class_pairs, obj, mor), GroupoidFunctor::to_point(s.classes, s.point)};
  }
  // h: (x, A, B) ↦ x and x[A, B].
  {
    std::vector<Object> left_obj(triples->object_count()), right_obj(triples->object_count());
    std::vector<Morphism> left_mor(triples->morphism_count()), right_mor(triples->morphism_count());
    for (Object o = 0; o < triples->object_count(); ++o) {
      const Element x = static_cast<Element>(o / (n * n)), a = (o / n) % n, b = o % n;
      left_obj[o] = x;
      right_obj[o] = g.multiply(x, commutator(g, a, b));
      for (Element e = 0; e < n; ++e) {
        left_mor[o * n + e] = left_obj[o] * n + e;
        right_mor[o * n + e] = right_obj[o] * n + e;
      }
    }
    s.genus = {GroupoidFunctor(triples, s.classes, left_obj, left_mor),
               GroupoidFunctor(triples, s.classes, right_obj, right_mor)};
  }
  return s;
}

namespace {

std::vector<Element> generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::set<Element> members{g.identity()};
  std::vector<Element> frontier{g.identity()};
  while (!frontier.empty()) {
    const auto x = frontier.back();
    frontier.pop_back();
    for (auto s : gens) {
      const auto y = g.multiply(s, x);
      if (members.insert(y).second) frontier.push_back(y);
    }
  }
  return {members.begin(), members.end()};
}

// Left cosets hK; point i is the coset with smallest element reps[i].
struct CosetSpace {
  std::vector<Element> reps;
  std::map<Element, std::uint32_t> index_of_min;
  std::vector<std::uint32_t> coset_of;  // per element
};

CosetSpace cosets(const FiniteGroup& g, const std::vector<Element>& k) {
  CosetSpace c;
  c.coset_of.resize(g.order());
  for (Element h = 0; h < g.order(); ++h) {
    Element smallest = h;
    for (auto x : k) smallest = std::min(smallest, g.multiply(h, x));
    auto [it, inserted] = c.index_of_min.emplace(smallest, static_cast<std::uint32_t>(c.reps.size()));
    if (inserted) c.reps.push_back(smallest);
    c.coset_of[h] = it->second;
  }
  return c;
}

struct HSet {
  std::size_t size = 0;
  std::vector<std::uint32_t> act;  // act[x·|H| + g]
  std::vector<Object> to_base;     // equivariant map to the base set
};

GroupoidPtr as_groupoid(const GroupPtr& group, const HSet& set) {
  const auto n = group->order();
  auto table = set.act;
  return action_groupoid(group, {set.size, [table, n](Element e, std::uint32_t x) { return table[x * n + e]; }});
}

}  // namespace

Cospan random_cospan(std::uint64_t seed, std::span<const GroupPtr> groups, std::size_t max_objects) {
  if (groups.empty()) throw InvalidInput("random_cospan needs at least one group");
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };
  const auto group = groups[uniform(groups.size())];
  const auto& g = *group;
  const auto n = g.order();
  auto random_subgroup_of = [&](const std::vector<Element>& ambient) {
    std::vector<Element> gens;
    const auto count = uniform(3);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(ambient[uniform(ambient.size())]);
    return generated_subgroup(g, gens);
  };
  std::vector<Element> everything(n);
  for (Element e = 0; e < n; ++e) everything[e] = e;

  // Base set A: one or two orbits H/S.
  HSet base;
  std::vector<std::pair<std::vector<Element>, Object>> orbits;  // stabilizer of a base point, that point
  const auto base_orbits = 1 + uniform(2);
  for (std::size_t o = 0; o < base_orbits; ++o) {
    auto s = random_subgroup_of(everything);
    const auto c = cosets(g, s);
    if (base.size + c.reps.size() > max_objects) continue;
    const auto offset = static_cast<std::uint32_t>(base.size);
    base.act.resize((base.size + c.reps.size()) * n);
    for (std::uint32_t i = 0; i < c.reps.size(); ++i)
      for (Element e = 0; e < n; ++e) base.act[(offset + i) * n + e] = offset + c.coset_of[g.multiply(e, c.reps[i])];
    base.size += c.reps.size();
    orbits.emplace_back(std::move(s), offset + c.coset_of[g.identity()]);
  }
  if (base.size == 0) {
    base.size = 1;
    base.act.assign(n, 0);
    orbits.emplace_back(everything, 0);
  }

  // A cover: for each base orbit, zero to two orbits H/K with K ≤ S mapping hK ↦ h·y.
  auto cover = [&]() {
    HSet x;
    for (std::size_t attempt = 0; attempt < 8 && x.size == 0; ++attempt)
      for (const auto& [stabilizer, y] : orbits) {
        const auto copies = uniform(3);
        for (std::size_t c = 0; c < copies; ++c) {
          const auto k = random_subgroup_of(stabilizer);
          const auto cs = cosets(g, k);
          if (x.size + cs.reps.size() > max_objects) continue;
          const auto offset = static_cast<std::uint32_t>(x.size);
          x.act.resize((x.size + cs.reps.size()) * n);
          for (std::uint32_t i = 0; i < cs.reps.size(); ++i) {
            for (Element e = 0; e < n; ++e) x.act[(offset + i) * n + e] = offset + cs.coset_of[g.multiply(e, cs.reps[i])];
            x.to_base.push_back(base.act[y * n + cs.reps[i]]);
          }
          x.size += cs.reps.size();
        }
      }
    if (x.size == 0) {  // fall back to the identity cover of the first orbit
      const auto& [stabilizer, y] = orbits.front();
      const auto cs = cosets(g, stabilizer);
      x.size = cs.reps.size();
      x.act.resize(x.size * n);
      for (std::uint32_t i = 0; i < cs.reps.size(); ++i) {
        for (Element e = 0; e < n; ++e) x.act[i * n + e] = cs.coset_of[g.multiply(e, cs.reps[i])];
        x.to_base.push_back(base.act[y * n + cs.reps[i]]);
      }
    }
    return x;
  };
  const auto b_set = cover();
  const auto c_set = cover();

  const auto a = as_groupoid(group, base);
  const auto b = as_groupoid(group, b_set);
  const auto c = as_groupoid(group, c_set);
  const auto bh = one_point(group);
  return {equivariant(b, a, n, b_set.to_base), equivariant(c, a, n, c_set.to_base),
          equivariant(b, bh, n, std::vector<Object>(b_set.size, 0)),
          equivariant(c, bh, n, std::vector<Object>(c_set.size, 0))};
}

}  // namespace ftq
