#include "ftq/suites.hpp"

#include <functional>

#include "ftq/correspondence.hpp"
#include "ftq/counting.hpp"
#include "ftq/errors.hpp"
#include "ftq/groupoid.hpp"

namespace ftq {

namespace {

using Check = std::function<std::string()>;  // empty string on success

CheckResult run_check(std::string name, const Check& check) {
  try {
    auto problem = check();
    return {std::move(name), problem.empty(), problem.empty() ? "ok" : problem};
  } catch (const std::exception& e) {
    return {std::move(name), false, e.what()};
  }
}

GroupPtr builtin(const std::string& family, std::uint32_t p) {
  return instantiate_family(Catalog::builtins().family(family).spec, p);
}

std::vector<ClassFunction> basis_functions(const FamilyEntry& entry, const GroupPtr& g) {
  std::vector<ClassFunction> out;
  for (const auto& name : entry.basis) out.push_back(integrate_generator(entry.generator(name), g));
  return out;
}

std::string lifts_check(const std::string& family, std::uint32_t p) {
  const auto& entry = Catalog::builtins().family(family);
  const auto g = builtin(family, p);
  ClassAlgebra algebra(g);
  const auto census = eigen_census(algebra);
  for (const auto& lift : entry.lifts) verify_lift(algebra, census, lift, entry);
  return {};
}

std::vector<CheckResult> reference_suite() {
  std::vector<CheckResult> out;
  const auto& agl1 = Catalog::builtins().family("AGL1");

  out.push_back(run_check("agl1_genus_matrix_fit_2_3_5_7_11_validate_13", [&] {
    std::vector<PrimeSample> fit;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
      const auto g = builtin("AGL1", p);
      ClassAlgebra algebra(g);
      fit.push_back({p, genus_matrix_at_prime(algebra, basis_functions(agl1, g))});
    }
    const auto g13 = builtin("AGL1", 13);
    ClassAlgebra a13(g13);
    const auto m = interpolate(fit, {13, genus_matrix_at_prime(a13, basis_functions(agl1, g13))}, 4, agl1.basis);
    const std::vector<std::vector<PolyQ>> expected = {
        {PolyQ::parse("q^2*(q-1)"), PolyQ::parse("q^2*(q-2)*(q-1)")},
        {PolyQ::parse("q^2*(q-2)"), PolyQ::parse("q^2*(q^2-3*q+3)")}};
    if (m.entries != expected) return "interpolated matrix " + m.to_json().dump();
    return std::string();
  }));
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
    out.push_back(run_check("agl1_lifts_p" + std::to_string(p), [p] { return lifts_check("AGL1", p); }));
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
    out.push_back(run_check("agl1_census_p" + std::to_string(p), [p] {
      ClassAlgebra algebra(builtin("AGL1", p));
      const auto c = eigen_census(algebra).census;
      const decltype(c.entries) expected = {{1, p - 1}, {p - 1, 1}};
      if (c.entries != expected) return "census " + c.to_json().dump();
      return std::string();
    }));
  for (std::uint32_t p : {2u, 3u, 5u})
    out.push_back(run_check("u3_lifts_p" + std::to_string(p), [p] { return lifts_check("U3", p); }));
  for (std::uint32_t p : {2u, 3u})
    out.push_back(run_check("u4_lifts_and_census_p" + std::to_string(p), [p] {
      if (auto problem = lifts_check("U4", p); !problem.empty()) return problem;
      ClassAlgebra algebra(builtin("U4", p));
      const auto c = eigen_census(algebra).census;
      Integer burnside = 0;
      for (const auto& [d, n] : c.entries) {
        if (d != 1 && d != p && d != p * p) return "unexpected dimension " + d.get_str();
        burnside += n * d * d;
      }
      if (burnside != c.group_order) return "Burnside sum " + burnside.get_str();
      return std::string();
    }));
  for (std::uint32_t p : {5u, 7u, 13u})
    out.push_back(run_check("gmz2_table_p" + std::to_string(p), [p] {
      const auto& entry = Catalog::builtins().family("GmZ2");
      const auto g = builtin("GmZ2", p);
      // Columns: identity, other squares in the torus, everything else.
      const auto& cls = g->classes();
      for (const auto& [name, row] : std::vector<std::pair<std::string, std::vector<long>>>{
               {"v1", {4, 4, 0}}, {"v2", {long(p) - 3, -2, 0}}}) {
        const auto v = integrate_lift(entry.lift(name), entry, g);
        for (std::size_t c = 0; c < cls.count(); ++c) {
          const auto m = g->matrix(cls.class_reps[c]);
          const bool diagonal = m[1] == 0 && m[2] == 0;
          bool square = false;
          for (std::uint32_t x = 1; x < p && diagonal; ++x)
            if (x * x % p == m[0]) square = true;
          const long expected = c == 0 ? row[0] : (diagonal && square) ? row[1] : row[2];
          if (v[c] != expected)
            return "lift " + name + " has value " + to_string(v[c]) + " on class " + std::to_string(c);
        }
      }
      return std::string();
    }));
  out.push_back(run_check("agl1_p3_genus2_hom_count_486", [] {
    const auto g = builtin("AGL1", 3);
    ClassAlgebra algebra(g);
    const auto brute = brute_force_hom_count(*g, 2, HomCountMethod::Naive);
    const auto census = census_count(eigen_census(algebra).census, 2);
    if (brute != 486 || census != 486) return "brute " + brute.get_str() + ", census " + to_string(census);
    return std::string();
  }));
  for (const auto& [family, p] : std::vector<std::pair<std::string, std::uint32_t>>{
           {"AGL1", 2}, {"AGL1", 3}, {"U3", 2}, {"U3", 3}, {"U4", 2}, {"U4", 3}, {"GmZ2", 3}, {"GmZ2", 5}})
    out.push_back(run_check("frobenius_formula_" + family + "_p" + std::to_string(p), [family, p] {
      const auto g = builtin(family, p);
      ClassAlgebra algebra(g);
      const auto census = eigen_census(algebra).census;
      for (unsigned genus : {1u, 2u}) {
        const Rational brute(brute_force_hom_count(*g, genus));
        const auto via_census = census_count(census, genus);
        const Rational via_tqft = surface_invariant(algebra, genus) * Rational(static_cast<unsigned long>(g->order()));
        if (brute != via_census || brute != via_tqft)
          return "genus " + std::to_string(genus) + ": brute " + to_string(brute) + ", census " +
                 to_string(via_census) + ", tqft " + to_string(via_tqft);
      }
      return std::string();
    }));
  return out;
}

std::vector<CheckResult> axioms_suite() {
  std::vector<CheckResult> out;
  for (const auto& [family, p] : std::vector<std::pair<std::string, std::uint32_t>>{
           {"AGL1", 3}, {"U3", 2}, {"U3", 3}, {"GmZ2", 5}, {"U4", 3}})
    out.push_back(run_check("frobenius_axioms_" + family + "_p" + std::to_string(p), [family, p] {
      ClassAlgebra algebra(builtin(family, p));
      const auto report = frobenius_axiom_suite(algebra);
      for (const auto& c : report.checks)
        if (!c.passed) return c.name + " fails on " + c.witness;
      return std::string();
    }));
  return out;
}

std::vector<CheckResult> spans_suite() {
  std::vector<CheckResult> out;
  std::vector<GroupPtr> groups = {builtin("AGL1", 2), builtin("GmZ2", 3), builtin("AGL1", 3), builtin("U3", 2)};
  out.push_back(run_check("beck_chevalley_50_random_spans", [&] {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto cs = random_cospan(seed, groups);
      const auto p = fiber_product(cs.left, cs.right);
      const auto& b = *cs.left.source();
      for (std::size_t c = 0; c < b.iso_class_count(); ++c) {
        std::vector<Rational> v(b.iso_class_count());
        v[c] = 1;
        const auto phi = IsoInvariantFunction::from_class_values(cs.left.source(), v);
        if (!(pullback(cs.right, pushforward(cs.left, phi)) == pushforward(p.right, pullback(p.left, phi))))
          return "seed " + std::to_string(seed) + ", class " + std::to_string(c);
      }
      const Span first{cs.left_base, cs.left}, second{cs.right, cs.right_base};
      if (quantize_span(compose_spans(second, first)) != quantize_span(second) * quantize_span(first))
        return "span composition fails for seed " + std::to_string(seed);
    }
    return std::string();
  }));
  for (const auto& g : groups)
    out.push_back(run_check("frobenius_spans_" + g->name(), [g] {
      ClassAlgebra algebra(g);
      const auto s = frobenius_spans(g);
      const auto k = algebra.dimension();
      const auto& reps = g->classes().class_reps;
      const auto mu = quantize_span(s.multiplication);
      const auto beta = quantize_span(s.pairing);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          const auto col = s.class_pairs->iso_class(reps[i] * g->order() + reps[j]);
          const auto product = algebra.convolve(algebra.indicator(i), algebra.indicator(j));
          for (std::size_t c = 0; c < k; ++c)
            if (mu(c, col) != product[c]) return std::string("multiplication span differs from convolution");
          if (beta(0, col) != algebra.pair(algebra.indicator(i), algebra.indicator(j)))
            return std::string("pairing span differs from the pairing");
        }
      const auto unit = quantize_span(s.unit);
      const auto counit = quantize_span(s.counit);
      for (std::size_t c = 0; c < k; ++c) {
        if (unit(c, 0) != algebra.unit()[c]) return std::string("unit span differs from the unit");
        if (counit(0, c) != algebra.counit(algebra.indicator(c))) return std::string("counit span differs from the counit");
      }
      if (quantize_span(s.genus) != algebra.genus_matrix()) return std::string("genus span differs from h");
      return std::string();
    }));
  return out;
}

}  // namespace

std::vector<std::string> suite_names() { return {"paper", "axioms", "spans"}; }

std::vector<CheckResult> run_suite(const std::string& suite) {
  if (suite == "paper") return reference_suite();
  if (suite == "axioms") return axioms_suite();
  if (suite == "spans") return spans_suite();
  throw InvalidInput("unknown suite '" + suite + "' (known: paper, axioms, spans)");
}

}  // namespace ftq
