#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ftq/rational.hpp"

namespace ftq {

/// Multivariate polynomial with integer coefficients over named variables.
///
/// Text syntax: integer literals, identifiers, `+ - * ^` and parentheses;
/// exponents are non-negative integer literals.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(const Integer& value);
  static Polynomial variable(const std::string& name);
  static Polynomial parse(std::string_view text);

  /// Variables with a nonzero exponent in some term, sorted.
  std::vector<std::string> variables() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::string to_string() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial pow(unsigned exponent) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Exponents are keyed by variable name so that polynomials built from
  /// different texts compose without a shared variable table.
  using Monomial = std::map<std::string, unsigned>;
  const std::map<Monomial, Integer>& terms() const { return terms_; }

 private:
  void add_term(const Monomial& monomial, const Integer& coefficient);

  std::map<Monomial, Integer> terms_;
};

/// A polynomial specialized to a fixed variable order and prime, for the
/// hot enumeration loops.
class ModularPolynomial {
 public:
  /// Throws InvalidInput if the polynomial mentions a variable outside `order`.
  ModularPolynomial(const Polynomial& poly, std::span<const std::string> order, std::uint32_t prime);

  std::uint32_t evaluate(std::span<const std::uint32_t> values) const;

 private:
  struct Term {
    std::uint32_t coefficient;
    std::vector<std::pair<std::size_t, unsigned>> factors;
  };
  std::vector<Term> terms_;
  std::uint32_t prime_;
};

/// Integer-coefficient polynomial in the formal variable q.
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(long value) : PolyQ(Integer(value)) {}  // NOLINT: integers are constant polynomials
  explicit PolyQ(const Integer& value);
  explicit PolyQ(std::vector<Integer> coefficients);

  static PolyQ q();
  /// Parses polynomial text whose only variable (if any) is `q`.
  static PolyQ parse(std::string_view text);

  /// Coefficients by degree; empty for the zero polynomial.
  const std::vector<Integer>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  Integer evaluate(const Integer& q) const;
  Rational evaluate(const Rational& q) const;

  std::string to_string() const;

  PolyQ operator+(const PolyQ& rhs) const;
  PolyQ operator-(const PolyQ& rhs) const;
  PolyQ operator*(const PolyQ& rhs) const;
  PolyQ operator-() const;

  friend bool operator==(const PolyQ&, const PolyQ&) = default;

 private:
  void normalize();

  std::vector<Integer> coefficients_;
};

}  // namespace ftq
