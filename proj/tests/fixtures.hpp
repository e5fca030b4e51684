#pragma once

#include <set>
#include <string>
#include <vector>

#include "ftq/class_algebra.hpp"
#include "ftq/schemes.hpp"

namespace ftq::testing {

inline GroupPtr builtin(const std::string& family, std::uint32_t p) {
  return instantiate_family(Catalog::builtins().family(family).spec, p);
}

/// ℤ/2 as the 1×1 matrices {1, p−1} over F_3.
inline GroupPtr z2() {
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_matrices("Z2", 3, 1, {{1}, {2}}));
}

inline GroupPtr trivial_group() {
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_matrices("1", 2, 1, {{1}}));
}

/// Conjugacy classes by brute force: class of x = {g x g⁻¹ : g ∈ G}.
inline std::vector<std::set<FiniteGroup::Element>> brute_force_classes(const FiniteGroup& g) {
  std::vector<std::set<FiniteGroup::Element>> out;
  std::vector<bool> done(g.order(), false);
  for (FiniteGroup::Element x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::set<FiniteGroup::Element> cls;
    for (FiniteGroup::Element h = 0; h < g.order(); ++h) cls.insert(g.multiply(g.multiply(h, x), g.inverse(h)));
    for (auto y : cls) done[y] = true;
    out.push_back(std::move(cls));
  }
  return out;
}

/// Element-level convolution (a * b)(z) = Σ_x a(x) b(x⁻¹ z).
inline std::vector<Rational> element_convolution(const FiniteGroup& g, const std::vector<Rational>& a,
                                                 const std::vector<Rational>& b) {
  std::vector<Rational> out(g.order());
  for (FiniteGroup::Element x = 0; x < g.order(); ++x)
    for (FiniteGroup::Element z = 0; z < g.order(); ++z) out[z] += a[x] * b[g.multiply(g.inverse(x), z)];
  return out;
}

inline std::vector<Rational> expand(const ClassFunction& f) {
  std::vector<Rational> out;
  for (FiniteGroup::Element x = 0; x < f.group()->order(); ++x) out.push_back(f.at_element(x));
  return out;
}

}  // namespace ftq::testing
