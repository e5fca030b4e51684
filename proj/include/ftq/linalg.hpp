#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ftq/rational.hpp"

namespace ftq {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix column(std::span<const Rational> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column_values(std::size_t c) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix scaled(const Rational& factor) const;
  RationalMatrix transposed() const;
  std::vector<Rational> apply(std::span<const Rational> vector) const;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product; the left factor indexes the most significant digit.
RationalMatrix kronecker(const RationalMatrix& lhs, const RationalMatrix& rhs);

std::size_t rank(RationalMatrix m);

/// Exact solution of A x = b, or nullopt when the system is inconsistent.
/// A must have full column rank for the solution to be unique.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::span<const Rational> b);

}  // namespace ftq
