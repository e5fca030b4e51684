// Acceptance checks: `acceptance N` runs criterion N and prints one line.
// All comparisons are exact; runtime limits are pinned below.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "ftq/bordism.hpp"
#include "ftq/correspondence.hpp"
#include "ftq/counting.hpp"
#include "ftq/errors.hpp"
#include "ftq/groupoid.hpp"
#include "ftq/schemes.hpp"

using namespace ftq;

namespace {

constexpr double kMatrixSeconds = 30.0;
constexpr double kU4Seconds = 300.0;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (!passed) detail << "; ";
    else detail.str("");
    passed = false;
    detail << what;
  }
};

GroupPtr group(const std::string& family, std::uint32_t p) {
  return instantiate_family(Catalog::builtins().family(family).spec, p);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

RationalMatrix genus_matrix_for(const std::string& family, std::uint32_t p) {
  const auto& entry = Catalog::builtins().family(family);
  const auto g = group(family, p);
  std::vector<ClassFunction> gens;
  for (const auto& name : entry.basis) gens.push_back(integrate_generator(entry.generator(name), g));
  return genus_matrix_at_prime(ClassAlgebra(g), gens);
}

std::vector<std::vector<PolyQ>> agl1_expected() {
  return {{PolyQ::parse("q^2*(q-1)"), PolyQ::parse("q^2*(q-2)*(q-1)")},
          {PolyQ::parse("q^2*(q-2)"), PolyQ::parse("q^2*(q^2-3*q+3)")}};
}

GenusMatrix fit_agl1(const std::vector<std::uint32_t>& primes, std::uint32_t validation) {
  std::vector<PrimeSample> fit;
  for (auto p : primes) fit.push_back({p, genus_matrix_for("AGL1", p)});
  // Degree bound: as many as the fitting primes can determine.
  return interpolate(fit, {validation, genus_matrix_for("AGL1", validation)}, primes.size() - 1, {"I", "J"});
}

void criterion1(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto m = fit_agl1({3, 5, 7, 11}, 13);
    if (m.entries != agl1_expected()) o.fail("fitted matrix differs from the closed form");
  } catch (const Error& e) {
    o.fail(std::string("primes {3,5,7,11} validated at 13: ") + e.what());
  }
  const double t = seconds_since(start);
  if (t > kMatrixSeconds) o.fail("runtime " + std::to_string(t) + " s");
  // Informational: five fitting primes determine the quartic entries.
  try {
    const auto m = fit_agl1({2, 3, 5, 7, 11}, 13);
    std::cout << "info criterion 1: primes {2,3,5,7,11} validated at 13 "
              << (m.entries == agl1_expected() ? "reproduce" : "do NOT reproduce") << " the closed form\n";
  } catch (const Error& e) {
    std::cout << "info criterion 1: primes {2,3,5,7,11} failed: " << e.what() << "\n";
  }
  if (o.passed) o.detail << "matrix exact in " << t << " s";
}

/// Checks h(v) = λ v directly and that v is nonzero.
bool is_eigenvector(const ClassAlgebra& alg, const ClassFunction& v, const Rational& lambda) {
  return !v.is_zero() && alg.genus_operator(v) == v * lambda;
}

void check_lifts(Outcome& o, const std::string& family, std::initializer_list<std::uint32_t> primes,
                 std::ostream* scalars = nullptr) {
  const auto& entry = Catalog::builtins().family(family);
  for (auto p : primes) {
    const ClassAlgebra alg(group(family, p));
    const auto census = eigen_census(alg);
    for (const auto& lift : entry.lifts) {
      const auto v = integrate_lift(lift, entry, alg.group());
      const Rational lambda(lift.eigenvalue.evaluate(Integer(p)));
      if (!is_eigenvector(alg, v, lambda)) {
        o.fail(family + " " + lift.name + " at p=" + std::to_string(p) + " is not an eigenvector");
        continue;
      }
      try {
        const auto report = verify_lift(alg, census, lift, entry);
        if (scalars)
          *scalars << " " << lift.name << "@" << p << ":d=" << to_string(report.dimension)
                   << ",scalar=" << to_string(report.character_sum_scalar);
      } catch (const Error& e) {
        o.fail(family + " " + lift.name + " at p=" + std::to_string(p) + ": " + e.what());
      }
    }
  }
}

void criterion2(Outcome& o) {
  check_lifts(o, "AGL1", {3, 5, 7, 11, 13});
  if (o.passed) o.detail << "both lifts are eigenvectors with q^2(q-1)^2 and q^2 at 3,5,7,11,13";
}

void criterion3(Outcome& o) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const auto census = eigen_census(ClassAlgebra(group("AGL1", p))).census;
    const std::vector<std::pair<Integer, Integer>> expected = {{1, p - 1}, {p - 1, 1}};
    if (census.entries != expected) o.fail("census mismatch at p=" + std::to_string(p));
  }
  if (o.passed) o.detail << "{(1,p-1),(p-1,1)} at 3,5,7,11,13";
}

void criterion4(Outcome& o) {
  std::ostringstream scalars;
  check_lifts(o, "U3", {2, 3, 5}, &scalars);
  if (o.passed) o.detail << "eigenvalues p^6, p^4 at 2,3,5; character-sum scalars" << scalars.str();
}

void criterion5(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream scalars;
  check_lifts(o, "U4", {2, 3}, &scalars);
  for (std::uint32_t p : {2u, 3u}) {
    const auto result = eigen_census(ClassAlgebra(group("U4", p)));
    Integer burnside = 0;
    for (const auto& [d, n] : result.census.entries) {
      burnside += n * d * d;
      if (d != 1 && d != p && d != p * p) o.fail("unexpected dimension " + to_string(d));
    }
    Integer p6 = 1;
    for (int i = 0; i < 6; ++i) p6 *= p;
    if (burnside != p6) o.fail("sum N_d d^2 != p^6 at p=" + std::to_string(p));
    const auto& entry = Catalog::builtins().family("U4");
    for (const auto& lift : entry.lifts) {
      const Integer lambda = lift.eigenvalue.evaluate(Integer(p));
      bool found = false;
      for (const Integer d : {Integer(1), Integer(p), Integer(p * p)}) {
        const Integer r = p6 / d;
        if (r * r == lambda) found = true;
      }
      if (!found) o.fail("eigenvalue of " + lift.name + " is not (|G|/d)^2");
    }
  }
  const double t = seconds_since(start);
  if (t > kU4Seconds) o.fail("runtime " + std::to_string(t) + " s");
  if (o.passed) o.detail << "three lifts verified at 2,3 in " << t << " s; scalars" << scalars.str();
}

bool is_square_mod(std::uint32_t t, std::uint32_t p) {
  for (std::uint32_t s = 1; s < p; ++s)
    if (s * s % p == t) return true;
  return false;
}

void criterion6(Outcome& o) {
  const auto& entry = Catalog::builtins().family("GmZ2");
  for (std::uint32_t p : {5u, 7u, 13u}) {
    const auto g = group("GmZ2", p);
    const auto v1 = integrate_lift(entry.lift("v1"), entry, g);
    const auto v2 = integrate_lift(entry.lift("v2"), entry, g);
    for (FiniteGroup::Element x = 0; x < g->order(); ++x) {
      const auto m = g->matrix(x);
      // Columns: the identity, the other squares in the torus, everything else.
      const int column = x == 0 ? 0 : (m[1] == 0 && is_square_mod(m[0], p)) ? 1 : 2;
      const Rational row1[] = {4, 4, 0};
      const Rational row2[] = {Rational(int(p) - 3), -2, 0};
      if (v1.at_element(x) != row1[column] || v2.at_element(x) != row2[column])
        o.fail("table mismatch at p=" + std::to_string(p));
    }
  }
  if (o.passed) o.detail << "rows (4,4,0) and (q-3,-2,0) at 5,7,13";
}

void criterion7(Outcome& o) {
  const std::vector<std::pair<std::string, std::vector<std::uint32_t>>> cases = {
      {"AGL1", {2, 3}}, {"U3", {2, 3}}, {"U4", {2, 3}}, {"GmZ2", {3, 5}}};
  int checked = 0;
  for (const auto& [family, primes] : cases)
    for (auto p : primes) {
      const auto g = group(family, p);
      const ClassAlgebra alg(g);
      const auto census = eigen_census(alg).census;
      for (unsigned genus = 1; genus <= 2; ++genus) {
        const Rational brute(brute_force_hom_count(*g, genus));
        const Rational via_census = census_count(census, genus);
        const Rational via_tqft = surface_invariant(alg, genus) * g->order();
        if (brute != via_census || brute != via_tqft)
          o.fail(g->name() + " g=" + std::to_string(genus) + ": " + to_string(brute) + " / " + to_string(via_census) +
                 " / " + to_string(via_tqft));
        ++checked;
      }
    }
  const auto anchor = brute_force_hom_count(*group("AGL1", 3), 2, HomCountMethod::Naive);
  if (anchor != 486) o.fail("anchor count is " + to_string(anchor));
  if (o.passed) o.detail << checked << " (group, genus) pairs agree; AGL1(F_3) genus 2 = 486";
}

void criterion8(Outcome& o) {
  for (const auto& [family, p] : std::vector<std::pair<std::string, std::uint32_t>>{
           {"AGL1", 3}, {"U3", 3}, {"GmZ2", 5}, {"U4", 2}, {"U4", 3}}) {
    const auto g = group(family, p);
    if (g->order() > 729) o.fail("group too large");
    const auto report = frobenius_axiom_suite(ClassAlgebra(g));
    for (const auto& c : report.checks)
      if (!c.passed) o.fail(g->name() + " " + c.name + ": " + c.witness);
  }
  if (o.passed) o.detail << "all axioms hold on AGL1(3), U3(3), GmZ2(5), U4(2), U4(3)";
}

void criterion9(Outcome& o) {
  const std::vector<GroupPtr> pool = {group("AGL1", 2), group("AGL1", 3), group("U3", 2), group("GmZ2", 3),
                                      group("GmZ2", 5)};
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> value(-4, 4);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto cs = random_cospan(seed, pool);
    const auto fp = fiber_product(cs.left, cs.right);
    std::vector<Rational> values;
    for (std::size_t c = 0; c < cs.left.source()->iso_class_count(); ++c) values.emplace_back(value(rng));
    const auto phi = IsoInvariantFunction::from_class_values(cs.left.source(), values);
    if (!(pullback(cs.right, pushforward(cs.left, phi)) == pushforward(fp.right, pullback(fp.left, phi))))
      o.fail("composition lemma fails for seed " + std::to_string(seed));
  }
  for (const auto& g : pool) {
    if (g->order() > 8) continue;
    const ClassAlgebra alg(g);
    const auto spans = frobenius_spans(g);
    const std::size_t k = alg.dimension();
    const auto mult = quantize_span(spans.multiplication);
    const auto pairing = quantize_span(spans.pairing);
    const auto unit = quantize_span(spans.unit);
    const auto counit = quantize_span(spans.counit);
    bool ok = unit.column_values(0) == alg.unit().values();
    for (std::size_t a = 0; a < k; ++a) {
      ok = ok && counit(0, a) == alg.counit(alg.indicator(a));
      for (std::size_t b = 0; b < k; ++b) {
        ok = ok && mult.column_values(a * k + b) == alg.convolve(alg.indicator(a), alg.indicator(b)).values();
        ok = ok && pairing(0, a * k + b) == alg.pair(alg.indicator(a), alg.indicator(b));
      }
    }
    if (!ok) o.fail("quantized spans differ from the class algebra on " + g->name());
  }
  if (o.passed) o.detail << "50 random spans; mult/unit/counit/pairing match on groups of order <= 8";
}

bool type_error(const std::string& text) {
  try {
    bordism::parse(text);
  } catch (const TypeError&) {
    return true;
  } catch (const Error&) {
    return false;
  }
  return false;
}

bool syntax_error(const std::string& text) {
  try {
    bordism::parse(text);
  } catch (const SyntaxError&) {
    return true;
  } catch (const Error&) {
    return false;
  }
  return false;
}

void criterion10(Outcome& o) {
  using namespace ftq::bordism;
  const char* words[] = {"unit",           "counit . unit",          "mult . twist",       "comult . mult",
                         "sigma(2)",       "(id * unit) . genus^2",  "mult * mult",        "(comult . mult)^3",
                         "pair . twist",   "copair . sigma(1)",      "mult . (id * mult)", "genus . genus . id^2"};
  for (const char* w : words) {
    const auto e = parse(w);
    const auto text = print(*e);
    if (!same_structure(*parse(text), *e) || print(*parse(text)) != text) o.fail(std::string("round trip: ") + w);
  }
  for (const char* w : {"mult . unit", "counit . counit", "comult^2", "twist . mult . (id * id * id)"})
    if (!type_error(w)) o.fail(std::string("expected type error: ") + w);
  for (const char* w : {"", "mult .", "sigma(", "(id", "genus^", "frob"})
    if (!syntax_error(w)) o.fail(std::string("expected syntax error: ") + w);

  for (const auto& [family, p] : std::vector<std::pair<std::string, std::uint32_t>>{
           {"AGL1", 2}, {"AGL1", 3}, {"U3", 2}, {"AGL1", 5}, {"GmZ2", 7}, {"GmZ2", 13}}) {
    const ClassAlgebra alg(group(family, p));
    if (alg.g().order() > 24) o.fail("group too large");
    for (unsigned genus = 0; genus <= 3; ++genus) {
      const auto sigma = evaluate(*parse("sigma(" + std::to_string(genus) + ")"), alg).scalar();
      // ε ∘ h^g ∘ η computed directly in the class algebra.
      auto v = alg.unit();
      for (unsigned i = 0; i < genus; ++i) v = alg.genus_operator(v);
      if (sigma != alg.counit(v)) o.fail(alg.g().name() + " sigma(" + std::to_string(genus) + ")");
    }
  }
  if (o.passed) o.detail << "round trips, type and syntax errors, sigma(g) = e h^g n for g <= 3";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance N (1-10)\n";
    return 2;
  }
  const int n = std::atoi(argv[1]);
  const std::function<void(Outcome&)> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9, criterion10};
  if (n < 1 || n > 10) {
    std::cerr << "criterion must be between 1 and 10\n";
    return 2;
  }
  Outcome o;
  try {
    criteria[n - 1](o);
  } catch (const std::exception& e) {
    o.fail(std::string("unexpected error: ") + e.what());
  }
  std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << n << ": " << o.detail.str() << "\n";
  return o.passed ? 0 : 1;
}
