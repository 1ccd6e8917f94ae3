#include "shc/shiftsym/builders.hpp"

#include "shc/eqforms/omega.hpp"

namespace shc {

QVec QuotientTangent::coords(const QVec& v) const {
  if (tangent_basis.empty()) return {};
  auto x = solve(QMat::from_columns(point.size(), tangent_basis), v);
  if (!x) throw TangencyError("vector is not tangent at the base point");
  return *x;
}

QVec QuotientTangent::ambient(const QVec& c) const {
  QVec v(point.size());
  for (std::size_t i = 0; i < tangent_basis.size(); ++i) v = v + scaled(tangent_basis[i], c.at(i));
  return v;
}

QuotientTangent tangent_complex_quotient(const GSpace& space, const QVec& pt) {
  if (!space.contains(pt)) throw NotOnSpace("base point is not on " + space.name());
  QuotientTangent t;
  t.point = pt;
  t.tangent_basis = space.tangent_basis(pt);
  std::size_t d = space.group()->dim();
  QMat diff(t.tangent_basis.size(), d);
  for (std::size_t i = 0; i < d; ++i) {
    QVec x(d);
    x[i] = Rational(1);
    QVec c = t.coords(space.action_field(x, pt));
    for (std::size_t r = 0; r < c.size(); ++r) diff(r, i) = c[r];
  }
  t.complex = QComplex(-1, {d, t.tangent_basis.size()}, {diff});
  return t;
}

QForm build_bg(const LieData& lie, const QMat& gram, int n) {
  QComplex t = QComplex::concentrated(-1, lie.dim());
  GradedPairing<Rational> p(-n);
  if (n == 2) p.set(-1, gram);
  return {t, p, n, "B" + std::string(lie.dim() ? "G" : "1")};
}

QForm build_coadjoint(const LieData& lie, const QVec& xi) {
  std::size_t d = lie.dim();
  if (xi.size() != d) throw DimensionMismatch("coadjoint point has wrong length");
  QMat diff(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Rational s;
      for (std::size_t k = 0; k < d; ++k) s += xi[k] * lie.c(k, i, j);
      diff(j, i) = -s;
    }
  QComplex t(-1, {d, d}, {diff});
  GradedPairing<Rational> p(-1);
  p.set(0, QMat::identity(d));
  p.set(-1, -QMat::identity(d));
  return {t, p, 1, "[g*/G]"};
}

QMat beta_matrix(const GroupPtr& group, const InvariantPairing& pairing, const QuotientTangent& t) {
  std::size_t n = group->size();
  JMat g = as_matrix(lift(t.point), n);
  QMat m(t.tangent_basis.size(), group->dim());
  for (std::size_t i = 0; i < t.tangent_basis.size(); ++i) {
    JMat v = as_matrix(lift(t.tangent_basis[i]), n);
    for (std::size_t j = 0; j < group->dim(); ++j) {
      JMat x = lift(group->basis()[j]);
      m(i, j) = omega0_kernel(*group, pairing, g, v, x).value();
    }
  }
  return m;
}

AdjointPoint build_adjoint_group(const GroupPtr& group, const InvariantPairing& pairing, const QVec& g) {
  ConjugationSpace space(group);
  QuotientTangent t = tangent_complex_quotient(space, g);
  QMat b = beta_matrix(group, pairing, t);
  GradedPairing<Rational> p(-1);
  p.set(0, b);
  p.set(-1, -b.transpose());
  return {{t.complex, p, 1, "[" + group->name() + "/" + group->name() + "^ad]"}, t};
}

QForm build_point(int n) { return {QComplex(), GradedPairing<Rational>(-n), n, "pt"}; }

}  // namespace shc
