#pragma once

#include <optional>
#include <vector>

#include "shc/exactalg/matrix.hpp"

namespace shc {

template <typename T>
struct Echelon {
  Matrix<T> reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

namespace detail {

template <typename T>
void require_field(const char* op) {
  if constexpr (is_jet_v<T>) {
    throw UnsupportedScalar(std::string(op) + " requires field entries, got jets");
  }
}

}  // namespace detail

// Gauss-Jordan elimination. Columns are scanned left to right and the pivot
// is the first nonzero entry at or below the current row.
template <typename T>
Echelon<T> row_reduce(Matrix<T> m) {
  detail::require_field<T>("row_reduce");
  Echelon<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
  detail::require_field<T>("rank");
  return row_reduce(m).pivots.size();
}

// Basis of {v : m v = 0}; one vector per free column, with a 1 in that slot.
template <typename T>
std::vector<Vec<T>> kernel_basis(const Matrix<T>& m) {
  detail::require_field<T>("kernel_basis");
  Echelon<T> e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  T one = T(1);
  for (const auto& x : m.data()) {
    if (!is_zero(x)) { one = scalar_from(Rational(1), x); break; }
  }
  std::vector<Vec<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<T> v(m.cols());
    v[f] = one;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Inverse by Gauss-Jordan; pivots must be units (value part nonzero for jets).
template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.square()) throw DimensionMismatch("inverse of non-square matrix " + m.shape());
  std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = T(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && !is_unit(a(piv, c))) ++piv;
    if (piv == n) throw DivisionByZero("singular matrix");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    }
    T p = T(1) / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = a(c, j) * p;
      inv(c, j) = inv(c, j) * p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(a(i, c))) continue;
      T f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

template <typename T>
T determinant(Matrix<T> a) {
  if (!a.square()) throw DimensionMismatch("determinant of non-square matrix " + a.shape());
  std::size_t n = a.rows();
  T det = T(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && !is_unit(a(piv, c))) ++piv;
    if (piv == n) {
      detail::require_field<T>("determinant of a matrix without unit pivots");
      return T(0);
    }
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    T p = T(1) / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      T f = a(i, c) * p;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

// Some x with m x = b, or nullopt when the system is inconsistent.
template <typename T>
std::optional<Vec<T>> solve(const Matrix<T>& m, const Vec<T>& b) {
  detail::require_field<T>("solve");
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length");
  Matrix<T> aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  Echelon<T> e = row_reduce(aug);
  Vec<T> x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

// Dimension of span(a) ∩ span(b) for column-vector families in one space.
template <typename T>
std::size_t intersection_dim(const std::vector<Vec<T>>& a, const std::vector<Vec<T>>& b,
                             std::size_t ambient) {
  std::vector<Vec<T>> all = a;
  all.insert(all.end(), b.begin(), b.end());
  std::size_t ra = a.empty() ? 0 : rank(Matrix<T>::from_columns(ambient, a));
  std::size_t rb = b.empty() ? 0 : rank(Matrix<T>::from_columns(ambient, b));
  std::size_t rab = all.empty() ? 0 : rank(Matrix<T>::from_columns(ambient, all));
  return ra + rb - rab;
}

}  // namespace shc
