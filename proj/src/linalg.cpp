#include "ftq/linalg.hpp"

#include <cassert>
#include <utility>

namespace ftq {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::column(std::span<const Rational> values) {
  RationalMatrix m(values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) m(i, 0) = values[i];
  return m;
}

std::vector<Rational> RationalMatrix::column_values(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  assert(cols_ == rhs.rows_);
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
  RationalMatrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> vector) const {
  assert(vector.size() == cols_);
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (vector[j] != 0) acc += (*this)(i, j) * vector[j];
    }
    out[i] = acc;
  }
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

RationalMatrix kronecker(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  RationalMatrix out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      const Rational& a = lhs(i, j);
      if (a == 0) continue;
      for (std::size_t k = 0; k < rhs.rows(); ++k)
        for (std::size_t l = 0; l < rhs.cols(); ++l) {
          const Rational& b = rhs(k, l);
          if (b != 0) out(i * rhs.rows() + k, j * rhs.cols() + l) = a * b;
        }
    }
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix m) {
  const std::size_t cols = m.cols();
  return row_reduce(m, cols).size();
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::span<const Rational> b) {
  assert(b.size() == a.rows());
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = row_reduce(aug, a.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (aug(r, a.cols()) != 0) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

}  // namespace ftq
