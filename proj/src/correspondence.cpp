#include "ftq/correspondence.hpp"

#include <algorithm>

#include "ftq/errors.hpp"

namespace ftq {

namespace {

std::string values_text(const ClassFunction& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + to_string(f[i]);
  return s + "]";
}

ClassFunction apply_genus(const ClassAlgebra& algebra, const ClassFunction& v) {
  return algebra.convolve(v, algebra.genus_element());
}

}  // namespace

RationalMatrix genus_matrix_at_prime(const ClassAlgebra& algebra, std::span<const ClassFunction> generators) {
  const auto k = algebra.dimension();
  const auto n = generators.size();
  if (n == 0) throw InvalidInput("at least one generator is required");
  RationalMatrix basis(k, n);
  for (std::size_t i = 0; i < n; ++i) {
    require_same_group(algebra.group(), generators[i].group());
    for (std::size_t c = 0; c < k; ++c) basis(c, i) = generators[i][c];
  }
  if (const auto r = rank(basis); r < n)
    throw DependentGenerators("the " + std::to_string(n) + " generators span only a " + std::to_string(r) +
                              "-dimensional space over " + algebra.g().name());
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto image = apply_genus(algebra, generators[i]);
    const auto solution = solve(basis, image.values());
    if (!solution) {
      // Least information we can give: the image itself.
      throw NotInvariant("h of generator " + std::to_string(i) + " leaves the span over " + algebra.g().name() +
                         "; image " + values_text(image));
    }
    for (std::size_t j = 0; j < n; ++j) a(j, i) = (*solution)[j];
  }
  return a;
}

std::vector<Rational> interpolate_values(std::span<const Integer> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw InvalidInput("interpolation needs as many values as nodes");
  const auto n = xs.size();
  // Newton divided differences, then expansion into the monomial basis.
  std::vector<Rational> coef(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational dx(xs[i] - xs[i - level]);
      if (dx == 0) throw InvalidInput("interpolation nodes must be distinct");
      coef[i] = (coef[i] - coef[i - 1]) / dx;
    }
  std::vector<Rational> poly(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    // poly = poly · (q − x_i) + coef_i
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t d = 0; d + 1 < n; ++d) next[d + 1] += poly[d];
    for (std::size_t d = 0; d < n; ++d) next[d] -= poly[d] * Rational(xs[i]);
    next[0] += coef[i];
    poly = std::move(next);
  }
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  return poly;
}

RationalMatrix GenusMatrix::specialize(std::uint32_t p) const {
  const auto n = entries.size();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(entries[i][j].evaluate(Integer(p)));
  return m;
}

nlohmann::json GenusMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    rows.push_back(r);
  }
  return {{"labels", labels},
          {"entries", rows},
          {"degree_bound", degree_bound},
          {"primes", primes},
          {"validated_at", validation_prime}};
}

GenusMatrix interpolate(std::span<const PrimeSample> fit, const PrimeSample& validation, std::size_t degree_bound,
                        std::vector<std::string> labels) {
  if (fit.size() < degree_bound + 1)
    throw InsufficientPrimes("degree bound " + std::to_string(degree_bound) + " needs " +
                             std::to_string(degree_bound + 1) + " fitting primes plus one for validation, got " +
                             std::to_string(fit.size()) + " + 1");
  const auto n = validation.matrix.rows();
  for (const auto& s : fit)
    if (s.matrix.rows() != n || s.matrix.cols() != n) throw InvalidInput("per-prime matrices differ in shape");
  if (validation.matrix.cols() != n) throw InvalidInput("genus matrices must be square");
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));

  GenusMatrix out;
  out.labels = std::move(labels);
  out.degree_bound = degree_bound;
  for (const auto& s : fit) out.primes.push_back(s.prime);
  out.validation_prime = validation.prime;

  std::vector<Integer> xs;
  for (const auto& s : fit) xs.emplace_back(s.prime);
  out.entries.assign(n, std::vector<PolyQ>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> ys;
      for (const auto& s : fit) ys.push_back(s.matrix(i, j));
      const auto poly = interpolate_values(xs, ys);
      const auto where = "entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
      std::vector<Integer> coefficients;
      for (const auto& c : poly) {
        if (!is_integer(c))
          throw ValidationFailed(where + " interpolates to a polynomial with non-integer coefficient " + to_string(c));
        coefficients.push_back(c.get_num());
      }
      PolyQ entry(std::move(coefficients));
      if (entry.degree() > int(degree_bound))
        throw ValidationFailed(where + " needs degree " + std::to_string(entry.degree()) + " above the bound " +
                               std::to_string(degree_bound));
      const Rational predicted(entry.evaluate(Integer(validation.prime)));
      if (predicted != validation.matrix(i, j))
        throw ValidationFailed(where + ": fitted " + entry.to_string() + " predicts " + to_string(predicted) +
                               " at q=" + std::to_string(validation.prime) + " but the matrix has " +
                               to_string(validation.matrix(i, j)));
      out.entries[i][j] = std::move(entry);
    }
  return out;
}

nlohmann::json DimensionCensus::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [d, n] : entries) out.push_back({{"dim", d.get_str()}, {"count", n.get_str()}});
  return out;
}

namespace {

std::vector<Integer> divisor_dimensions(const Integer& order) {
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= order; ++d)
    if (order % d == 0) out.push_back(d);
  return out;
}

}  // namespace

CensusResult eigen_census(const ClassAlgebra& algebra) {
  const auto k = algebra.dimension();
  const Integer order(static_cast<unsigned long>(algebra.g().order()));

  // Krylov basis of η(1) under h until the next power is dependent.
  std::vector<ClassFunction> krylov{algebra.unit()};
  std::vector<Rational> relation;
  while (true) {
    const auto next = apply_genus(algebra, krylov.back());
    RationalMatrix basis(k, krylov.size());
    for (std::size_t i = 0; i < krylov.size(); ++i)
      for (std::size_t c = 0; c < k; ++c) basis(c, i) = krylov[i][c];
    if (auto solution = solve(basis, next.values())) {
      relation = std::move(*solution);
      break;
    }
    krylov.push_back(next);
  }
  const auto m = krylov.size();
  // Minimal polynomial x^m − Σ relation_i x^i.
  auto minimal_poly = [&](const Rational& x) -> Rational {
    Rational value = 0, power = 1;
    for (std::size_t i = 0; i < m; ++i) {
      value -= relation[i] * power;
      power *= x;
    }
    return value + power;
  };

  std::vector<Integer> eigenvalues, dimensions;
  for (const auto& d : divisor_dimensions(order)) {
    const Integer root = order / d;
    const Integer lambda = root * root;
    if (minimal_poly(Rational(lambda)) == 0) {
      eigenvalues.push_back(lambda);
      dimensions.push_back(d);
    }
  }
  if (eigenvalues.size() != m)
    throw NotDiagonalizable("h restricted to the cyclic span of η(1) has degree " + std::to_string(m) +
                            " but only " + std::to_string(eigenvalues.size()) +
                            " eigenvalues of the form (|G|/d)^2 were found");

  CensusResult result;
  result.census.group_order = order;
  result.report.cyclic_dimension = m;
  for (std::size_t i = 0; i < m; ++i) {
    auto v = algebra.unit();
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      const Rational lj(eigenvalues[j]);
      v = (apply_genus(algebra, v) - v * lj) * (Rational(1) / (Rational(eigenvalues[i]) - lj));
    }
    const Rational multiplicity = v[0] * Rational(order) / Rational(dimensions[i] * dimensions[i]);
    if (!is_integer(multiplicity))
      throw NonIntegerMultiplicity("dimension " + dimensions[i].get_str() + " has multiplicity " +
                                   to_string(multiplicity));
    result.report.residuals.push_back(apply_genus(algebra, v) - v * Rational(eigenvalues[i]));
    result.report.projections.push_back(std::move(v));
    result.census.entries.emplace_back(dimensions[i], multiplicity.get_num());
  }
  result.report.eigenvalues = std::move(eigenvalues);
  result.report.dimensions = std::move(dimensions);
  std::sort(result.census.entries.begin(), result.census.entries.end());
  return result;
}

Rational census_count(const DimensionCensus& census, unsigned genus) {
  const Rational order(census.group_order);
  Rational sum = 0;
  for (const auto& [d, n] : census.entries) {
    // d^{2−2g}
    Rational term = 1;
    for (unsigned i = 0; i < 2 * genus; ++i) term /= Rational(d);
    sum += Rational(n) * term * Rational(d * d);
  }
  Rational scale = 1;
  if (genus == 0) {
    scale = Rational(1) / order;
  } else {
    for (unsigned i = 0; i + 1 < 2 * genus; ++i) scale *= order;
  }
  return scale * sum;
}

LiftReport verify_lift(const ClassAlgebra& algebra, const CensusResult& census, const Lift& lift,
                       const FamilyEntry& family) {
  LiftReport report;
  report.lift = lift.name;
  report.prime = algebra.g().prime();
  report.values = integrate_lift(lift, family, algebra.group());
  report.eigenvalue = lift.eigenvalue.evaluate(Integer(report.prime));
  if (report.values.is_zero())
    throw NotEigenvector("lift " + lift.name + " integrates to zero over " + algebra.g().name());
  report.residual = apply_genus(algebra, report.values) - report.values * Rational(report.eigenvalue);
  report.eigenvector = report.residual.is_zero();
  if (!report.eigenvector)
    throw NotEigenvector("lift " + lift.name + " over " + algebra.g().name() + ": h(v) - " +
                         report.eigenvalue.get_str() + " v = " + values_text(report.residual));

  const auto& eig = census.report;
  for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
    if (eig.eigenvalues[i] != report.eigenvalue) continue;
    report.dimension = eig.dimensions[i];
    const auto& v = eig.projections[i];
    std::optional<Rational> scalar;
    bool collinear = true;
    for (std::size_t c = 0; c < v.size() && collinear; ++c) {
      if (v[c] == 0) {
        collinear = report.values[c] == 0;
      } else {
        const Rational s = report.values[c] / v[c];
        if (scalar && *scalar != s) collinear = false;
        scalar = s;
      }
    }
    if (collinear && scalar) {
      report.projection_scalar = *scalar;
      report.character_sum_scalar = *scalar * Rational(report.dimension) / Rational(census.census.group_order);
    }
  }
  return report;
}

}  // namespace ftq
