#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ftq/class_algebra.hpp"
#include "ftq/linalg.hpp"
#include "ftq/poly.hpp"
#include "ftq/schemes.hpp"

namespace ftq {

/// Matrix A with h(x_i) = Σ_j A(j, i) x_j for the given generators.
/// Throws DependentGenerators or NotInvariant (with the residual).
RationalMatrix genus_matrix_at_prime(const ClassAlgebra& algebra, std::span<const ClassFunction> generators);

struct PrimeSample {
  std::uint32_t prime;
  RationalMatrix matrix;
};

struct GenusMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<PolyQ>> entries;
  std::size_t degree_bound = 0;
  std::vector<std::uint32_t> primes;
  std::uint32_t validation_prime = 0;

  RationalMatrix specialize(std::uint32_t p) const;
  nlohmann::json to_json() const;
};

/// Entrywise interpolation through `fit`, checked exactly at `validation`.
/// Needs at least degree_bound + 1 fitting primes (InsufficientPrimes); any
/// entry that is not an integer polynomial of degree ≤ degree_bound matching
/// the validation prime raises ValidationFailed naming the entry.
GenusMatrix interpolate(std::span<const PrimeSample> fit, const PrimeSample& validation, std::size_t degree_bound,
                        std::vector<std::string> labels = {});

/// Interpolating polynomial through (x_i, y_i) over the rationals.
std::vector<Rational> interpolate_values(std::span<const Integer> xs, std::span<const Rational> ys);

struct DimensionCensus {
  /// (d, N_d) sorted by d.
  std::vector<std::pair<Integer, Integer>> entries;
  Integer group_order;

  nlohmann::json to_json() const;
};

struct EigenReport {
  std::vector<Integer> eigenvalues;
  std::vector<Integer> dimensions;
  /// Projections v_i of η(1) onto the eigenspaces; Σ v_i = η(1).
  std::vector<ClassFunction> projections;
  /// h(v_i) − λ_i v_i, all zero on success.
  std::vector<ClassFunction> residuals;
  std::size_t cyclic_dimension = 0;
};

struct CensusResult {
  DimensionCensus census;
  EigenReport report;
};

/// Character degrees and multiplicities from the cyclic span of η(1) under h.
/// Throws NotDiagonalizable or NonIntegerMultiplicity.
CensusResult eigen_census(const ClassAlgebra& algebra);

/// |G|^{2g-1} Σ N_d d^{2-2g}
Rational census_count(const DimensionCensus& census, unsigned genus);

struct LiftReport {
  std::string lift;
  std::uint32_t prime = 0;
  ClassFunction values;
  Integer eigenvalue;
  bool eigenvector = false;
  ClassFunction residual;
  /// Character dimension whose eigen-projection v is collinear with the lift.
  Integer dimension;
  /// lift = projection_scalar · v_i (projection from eigen_census).
  Rational projection_scalar;
  /// lift = character_sum_scalar · Σ_{χ(1)=d} χ.
  Rational character_sum_scalar;
};

/// Integrates the lift at p, checks h(v) = λ(p) v exactly and locates v
/// among the census projections. Throws NotEigenvector with the residual.
LiftReport verify_lift(const ClassAlgebra& algebra, const CensusResult& census, const Lift& lift,
                       const FamilyEntry& family);

}  // namespace ftq
