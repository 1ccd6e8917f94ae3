#include "shc/liecore/matrix_group.hpp"

#include <algorithm>
#include <numeric>

namespace shc {

namespace {

Matrix<Rational> unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix<Rational> m(n, n);
  m(i, j) = Rational(1);
  return m;
}

std::vector<std::string> entry_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v.push_back("g" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  return v;
}

Polynomial entry(const std::vector<std::string>& vars, std::size_t flat) {
  return Polynomial::variable(vars, flat);
}

// Entries of (M^T A M - A) as polynomials, for constant A.
std::vector<Polynomial> bilinear_invariance(const std::vector<std::string>& vars, std::size_t n,
                                            const Matrix<Rational>& a, bool upper_with_diag) {
  std::vector<Polynomial> eqs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = upper_with_diag ? i : i + 1; j < n; ++j) {
      Polynomial p(vars);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (a(k, l).is_zero()) continue;
          p += entry(vars, k * n + i) * entry(vars, l * n + j) * a(k, l);
        }
      p -= Polynomial::constant(vars, a(i, j));
      eqs.push_back(std::move(p));
    }
  }
  return eqs;
}

Matrix<Rational> standard_j(std::size_t n) {
  Matrix<Rational> j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = Rational(1);
    j(n + i, i) = Rational(-1);
  }
  return j;
}

Polynomial remap(const Polynomial& p, const std::vector<std::string>& vars, std::size_t big,
                 std::size_t small, std::size_t offset) {
  Polynomial out(vars);
  for (const auto& [e, c] : p.terms()) {
    Polynomial::Exponents f(vars.size(), 0u);
    for (std::size_t i = 0; i < small; ++i)
      for (std::size_t j = 0; j < small; ++j) f[(offset + i) * big + offset + j] = e[i * small + j];
    out.add_term(std::move(f), c);
  }
  return out;
}

}  // namespace

Polynomial determinant_polynomial(const std::vector<std::string>& vars, std::size_t n,
                                  std::size_t offset_row, std::size_t offset_col, std::size_t stride) {
  if (stride == 0) stride = n;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(vars);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial term = Polynomial::constant(vars, Rational(inversions % 2 ? -1 : 1));
    for (std::size_t i = 0; i < n; ++i) {
      term *= entry(vars, (offset_row + i) * stride + offset_col + perm[i]);
    }
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<std::string> MatrixGroup::coordinate_names() const { return entry_names(size_); }

GroupPtr MatrixGroup::special_linear(std::size_t n) {
  if (n == 0) throw Error("SL(0) is not a group");
  auto g = std::shared_ptr<MatrixGroup>(new MatrixGroup());
  g->family_ = GroupFamily::SpecialLinear;
  g->name_ = "SL" + std::to_string(n);
  g->size_ = n;
  g->rank_ = n - 1;
  for (std::size_t i = 0; i + 1 < n; ++i) g->basis_.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g->basis_.push_back(unit(n, i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) g->basis_.push_back(unit(n, i, j));
  auto vars = entry_names(n);
  g->equations_.push_back(determinant_polynomial(vars, n) - Polynomial::constant(vars, Rational(1)));
  g->finalize();
  return g;
}

GroupPtr MatrixGroup::special_orthogonal(std::size_t n) {
  if (n == 0) throw Error("SO(0) is not a group");
  auto g = std::shared_ptr<MatrixGroup>(new MatrixGroup());
  g->family_ = GroupFamily::SpecialOrthogonal;
  g->name_ = "SO" + std::to_string(n);
  g->size_ = n;
  g->rank_ = n / 2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g->basis_.push_back(unit(n, i, j) - unit(n, j, i));
  auto vars = entry_names(n);
  g->equations_ = bilinear_invariance(vars, n, Matrix<Rational>::identity(n), true);
  g->equations_.push_back(determinant_polynomial(vars, n) - Polynomial::constant(vars, Rational(1)));
  g->finalize();
  return g;
}

GroupPtr MatrixGroup::symplectic(std::size_t two_n) {
  if (two_n == 0 || two_n % 2 != 0) throw Error("symplectic group needs an even positive size");
  const std::size_t n = two_n / 2;
  auto g = std::shared_ptr<MatrixGroup>(new MatrixGroup());
  g->family_ = GroupFamily::Symplectic;
  g->name_ = "Sp" + std::to_string(two_n);
  g->size_ = two_n;
  g->rank_ = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g->basis_.push_back(unit(two_n, i, j) - unit(two_n, n + j, n + i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix<Rational> b = unit(two_n, i, n + j);
      if (i != j) b += unit(two_n, j, n + i);
      g->basis_.push_back(b);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix<Rational> c = unit(two_n, n + i, j);
      if (i != j) c += unit(two_n, n + j, i);
      g->basis_.push_back(c);
    }
  auto vars = entry_names(two_n);
  g->equations_ = bilinear_invariance(vars, two_n, standard_j(n), false);
  g->finalize();
  return g;
}

GroupPtr MatrixGroup::torus(std::size_t n) {
  if (n == 0) throw Error("torus of rank 0");
  auto g = std::shared_ptr<MatrixGroup>(new MatrixGroup());
  g->family_ = GroupFamily::Torus;
  g->name_ = "T" + std::to_string(n);
  g->size_ = n;
  g->rank_ = n;
  for (std::size_t i = 0; i < n; ++i) g->basis_.push_back(unit(n, i, i));
  auto vars = entry_names(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) g->equations_.push_back(entry(vars, i * n + j));
  g->finalize();
  return g;
}

GroupPtr MatrixGroup::product(std::vector<GroupPtr> factors) {
  if (factors.empty()) throw Error("empty group product");
  std::vector<GroupPtr> flat;
  for (auto& f : factors) {
    if (f->family() == GroupFamily::Product) {
      for (const auto& sub : f->factors()) flat.push_back(sub.group);
    } else {
      flat.push_back(std::move(f));
    }
  }
  factors = std::move(flat);
  auto g = std::shared_ptr<MatrixGroup>(new MatrixGroup());
  g->family_ = GroupFamily::Product;
  std::size_t n = 0, m = 0;
  for (const auto& f : factors) {
    g->factors_.push_back({f, n, m});
    n += f->size();
    m += f->dim();
    g->rank_ += f->rank();
    g->name_ += (g->name_.empty() ? "" : "x") + f->name();
  }
  g->size_ = n;
  auto vars = entry_names(n);
  for (const auto& f : g->factors_) {
    for (const auto& b : f.group->basis()) {
      Matrix<Rational> big(n, n);
      big.set_block(f.offset, f.offset, b);
      g->basis_.push_back(std::move(big));
    }
    for (const auto& e : f.group->equations()) {
      g->equations_.push_back(remap(e, vars, n, f.group->size(), f.offset));
    }
  }
  // off-block entries vanish
  std::vector<std::size_t> owner(n);
  for (std::size_t k = 0; k < g->factors_.size(); ++k)
    for (std::size_t i = 0; i < g->factors_[k].group->size(); ++i) owner[g->factors_[k].offset + i] = k;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (owner[i] != owner[j]) g->equations_.push_back(entry(vars, i * n + j));
  g->finalize();
  return g;
}

void MatrixGroup::finalize() {
  const std::size_t m = basis_.size();
  const std::size_t nn = size_ * size_;
  std::vector<std::string> names;
  if (family_ == GroupFamily::SpecialLinear && size_ == 2) {
    names = {"h", "e", "f"};
  } else {
    for (std::size_t k = 0; k < m; ++k) names.push_back("b" + std::to_string(k + 1));
  }
  if (m == 0) {
    lie_ = LieData(names);
    coord_map_ = Matrix<Rational>(0, 0);
    return;
  }
  Matrix<Rational> rows(m, nn);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t f = 0; f < nn; ++f) rows(k, f) = basis_[k].data()[f];
  Echelon<Rational> e = row_reduce(rows);
  if (e.pivots.size() != m) throw Error("Lie basis is linearly dependent");
  pivots_ = e.pivots;
  Matrix<Rational> a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = basis_[i].data()[pivots_[j]];
  coord_map_ = inverse(a.transpose());
  lie_ = LieData(names);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Matrix<Rational> br = commutator(basis_[i], basis_[j]);
      Vec<Rational> c = lie_coords(br);
      if (lie_matrix(c) != br) throw Error("Lie basis is not closed under commutators");
      for (std::size_t k = 0; k < m; ++k) lie_.set_c(k, i, j, c[k]);
    }
  }
}

void MatrixGroup::check_shape(std::size_t r, std::size_t c) const {
  if (r != size_ || c != size_) {
    throw DimensionMismatch(name_ + " expects " + std::to_string(size_) + "x" + std::to_string(size_) +
                            " matrices, got " + std::to_string(r) + "x" + std::to_string(c));
  }
}

bool MatrixGroup::contains(const Matrix<Rational>& g) const {
  check_square(g);
  for (const auto& eq : equations_) {
    if (!eq.eval(g.data()).is_zero()) return false;
  }
  return !determinant(g).is_zero();
}

bool MatrixGroup::contains(const Matrix<Fp>& g) const {
  check_square(g);
  for (const auto& eq : equations_) {
    if (!eq.eval(g.data()).is_zero()) return false;
  }
  return !determinant(g).is_zero();
}

bool MatrixGroup::is_tangent(const Matrix<Rational>& g, const Matrix<Rational>& v) const {
  check_square(g);
  check_square(v);
  for (const auto& eq : equations_) {
    if (!poly_eval_jet(eq, g.data(), v.data()).second.is_zero()) return false;
  }
  return true;
}

bool MatrixGroup::in_lie_algebra(const Matrix<Rational>& x) const {
  return is_tangent(Matrix<Rational>::identity(size_), x);
}

InvariantPairing MatrixGroup::trace_pairing() const {
  Matrix<Rational> gram(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) gram(i, j) = (basis_[i] * basis_[j]).trace();
  return InvariantPairing{lie_, gram};
}

}  // namespace shc
