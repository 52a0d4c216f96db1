#pragma once

#include "evb/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace evb {

/// Dense row-major matrix over an exact ring (Rational or Integer).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Every row must have length `cols`; `cols` is needed for the zero-row case.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }
  std::vector<T> col_vector(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void append_row(std::span<const T> values);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, std::span<const T> v);

/// Vertical concatenation; both operands need the same column count.
RationalMatrix stack(const RationalMatrix& top, const RationalMatrix& bottom);

/// Result of Gauss-Jordan elimination.
struct RowEchelon {
  RationalMatrix reduced;             // nonzero rows only, reduced row-echelon form
  std::vector<std::size_t> pivots;    // pivot column of each row
};

RowEchelon row_reduce(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Throws SingularMatrix when `m` is not square and invertible.
RationalMatrix inverse(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);
Integer determinant(const IntegerMatrix& m);

RationalMatrix to_rational(const IntegerMatrix& m);

/// Kronecker product; rows of a⊗b are indexed by (i * b.rows + k).
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace evb
