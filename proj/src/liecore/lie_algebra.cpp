#include "shc/liecore/lie_algebra.hpp"

namespace shc {

LieData::LieData(std::vector<std::string> names)
    : names_(std::move(names)), c_(names_.size() * names_.size() * names_.size()) {}

Matrix<Rational> LieData::ad_basis(std::size_t i) const {
  Matrix<Rational> m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = c(k, i, j);
  return m;
}

Matrix<Rational> LieData::ad(const Vec<Rational>& x) const {
  check(x.size());
  Matrix<Rational> m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!x[i].is_zero()) m += ad_basis(i) * x[i];
  }
  return m;
}

Vec<Rational> LieData::basis_vector(std::size_t i) const {
  Vec<Rational> v(dim());
  v.at(i) = Rational(1);
  return v;
}

LieVerdict check_lie(const LieData& l) {
  LieVerdict v;
  const std::size_t n = l.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (l.c(k, i, j) != -l.c(k, j, i)) v.antisymmetry.push_back({k, i, j});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) {
        auto ei = l.basis_vector(i), ej = l.basis_vector(j), em = l.basis_vector(m);
        Vec<Rational> s = l.bracket(ei, l.bracket(ej, em)) + l.bracket(ej, l.bracket(em, ei)) +
                          l.bracket(em, l.bracket(ei, ej));
        if (!is_zero_vec(s)) v.jacobi.push_back({i, j, m});
      }
    }
  }
  return v;
}

Matrix<Rational> killing_form(const LieData& l) {
  Matrix<Rational> k(l.dim(), l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) k(i, j) = (l.ad_basis(i) * l.ad_basis(j)).trace();
  return k;
}

LieData sl2_lie() {
  LieData l({"h", "e", "f"});
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h
  l.set_c(1, 0, 1, Rational(2));
  l.set_c(1, 1, 0, Rational(-2));
  l.set_c(2, 0, 2, Rational(-2));
  l.set_c(2, 2, 0, Rational(2));
  l.set_c(0, 1, 2, Rational(1));
  l.set_c(0, 2, 1, Rational(-1));
  return l;
}

LieData abelian_lie(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("t" + std::to_string(i + 1));
  return LieData(std::move(names));
}

}  // namespace shc
