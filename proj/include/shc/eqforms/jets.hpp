#pragma once

#include <initializer_list>
#include <vector>

#include "shc/exactalg/jet.hpp"
#include "shc/exactalg/linalg.hpp"
#include "shc/exactalg/matrix.hpp"
#include "shc/exactalg/rational.hpp"

namespace shc {

using JetQ = Jet<Rational>;
using JVec = Vec<JetQ>;
using JMat = Matrix<JetQ>;
using QVec = Vec<Rational>;
using QMat = Matrix<Rational>;

inline JVec lift(const QVec& v) {
  JVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = JetQ(v[i]);
  return out;
}

inline JMat lift(const QMat& m) {
  return m.map([](const Rational& r) { return JetQ(r); });
}

inline QVec value_part(const JVec& v) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].value();
  return out;
}

inline QMat value_part(const JMat& m) {
  return m.map([](const JetQ& j) { return j.value(); });
}

inline JetQ::Mask support(const JVec& v) {
  JetQ::Mask s = 0;
  for (const auto& x : v) s |= x.support();
  return s;
}

inline JetQ::Mask support(const JMat& m) { return support(m.data()); }

// Smallest infinitesimal index above every index present in the inputs.
inline int fresh_index(std::initializer_list<JetQ::Mask> supports) {
  JetQ::Mask all = 0;
  for (auto s : supports) all |= s;
  int k = 0;
  while (all >> k) ++k;
  return k;
}

inline JVec perturb(const JVec& pt, const JVec& dir, int index) {
  JVec out = pt;
  for (std::size_t i = 0; i < pt.size(); ++i) {
    out[i] += dir[i] * JetQ::infinitesimal(index);
  }
  return out;
}

inline JVec derivative(const JVec& v, int index) {
  JVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].derivative(index);
  return out;
}

inline JMat derivative(const JMat& m, int index) {
  return m.map([index](const JetQ& j) { return j.derivative(index); });
}

// Row-major square matrix from a flat coordinate block.
inline JMat as_matrix(const JVec& pt, std::size_t n, std::size_t offset = 0) {
  std::vector<JetQ> data(pt.begin() + static_cast<std::ptrdiff_t>(offset),
                         pt.begin() + static_cast<std::ptrdiff_t>(offset + n * n));
  return JMat::from_rows(n, n, std::move(data));
}

inline void append(JVec& out, const JMat& m) { out.insert(out.end(), m.data().begin(), m.data().end()); }

// Solution of m x = y on the pivot rows and columns of the value part of m,
// free unknowns set to zero. Rational in the jet entries, so it extends a
// consistent solution off the locus where the full system is solvable.
inline JVec pivot_solve(const JMat& m, const JVec& y) {
  QMat v = value_part(m);
  std::vector<std::size_t> cols = row_reduce(v).pivots;
  std::vector<std::size_t> rows = row_reduce(v.transpose()).pivots;
  std::size_t r = cols.size();
  JMat sub(r, r);
  JVec rhs(r);
  for (std::size_t i = 0; i < r; ++i) {
    rhs[i] = y[rows[i]];
    for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(rows[i], cols[j]);
  }
  JVec s = inverse(sub) * rhs;
  JVec x(m.cols());
  for (std::size_t j = 0; j < r; ++j) x[cols[j]] = s[j];
  return x;
}

}  // namespace shc
