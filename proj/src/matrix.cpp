#include "evb/matrix.hpp"

#include "evb/error.hpp"

#include <utility>

namespace evb {

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

template <typename T>
void Matrix<T>::append_row(std::span<const T> values) {
  if (values.size() != cols_) throw DimensionMismatch("row length does not match column count");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

template <typename T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

template <typename T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  Matrix<T> p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, std::span<const T> v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector product: sizes differ");
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

template class Matrix<Rational>;
template class Matrix<Integer>;
template Matrix<Rational> operator*(const Matrix<Rational>&, const Matrix<Rational>&);
template Matrix<Integer> operator*(const Matrix<Integer>&, const Matrix<Integer>&);
template std::vector<Rational> operator*(const Matrix<Rational>&, std::span<const Rational>);
template std::vector<Integer> operator*(const Matrix<Integer>&, std::span<const Integer>);

RationalMatrix stack(const RationalMatrix& top, const RationalMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw DimensionMismatch("stack: column counts differ");
  RationalMatrix m = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) m.append_row(bottom.row(r));
  return m;
}

RowEchelon row_reduce(const RationalMatrix& input) {
  RationalMatrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(lead, p);
    Rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(lead, j);
    }
    pivots.push_back(c);
    ++lead;
  }
  RationalMatrix reduced(0, m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) reduced.append_row(m.row(r));
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivots.size(); }

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw SingularMatrix("inverse: matrix is not square");
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto ech = row_reduce(aug);
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1))
    throw SingularMatrix("inverse: matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

Rational determinant(const RationalMatrix& input) {
  if (input.rows() != input.cols()) throw DimensionMismatch("determinant: matrix is not square");
  RationalMatrix m = input;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

Integer determinant(const IntegerMatrix& m) {
  Rational d = determinant(to_rational(m));
  return d.get_num();
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix q(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = Rational(m(r, c));
  return q;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: lengths differ");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace evb
