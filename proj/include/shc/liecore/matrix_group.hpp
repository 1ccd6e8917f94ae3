#pragma once

#include <memory>
#include <string>
#include <vector>

#include "shc/exactalg/fp.hpp"
#include "shc/exactalg/linalg.hpp"
#include "shc/exactalg/polynomial.hpp"
#include "shc/liecore/errors.hpp"
#include "shc/liecore/lie_algebra.hpp"
#include "shc/liecore/pairing.hpp"

namespace shc {

enum class GroupFamily { SpecialLinear, SpecialOrthogonal, Symplectic, Torus, Product };

class MatrixGroup;
using GroupPtr = std::shared_ptr<const MatrixGroup>;

struct GroupFactor {
  GroupPtr group;
  std::size_t offset = 0;      // position of the diagonal block
  std::size_t lie_offset = 0;  // position of the factor's Lie coordinates
};

// Closed subgroup of GL_N cut out by polynomial equations, with a chosen
// basis of its Lie algebra. Products are realized block-diagonally.
class MatrixGroup {
 public:
  static GroupPtr special_linear(std::size_t n);
  static GroupPtr special_orthogonal(std::size_t n);
  static GroupPtr symplectic(std::size_t two_n);
  static GroupPtr torus(std::size_t n);
  // Nested products are flattened into one factor list.
  static GroupPtr product(std::vector<GroupPtr> factors);

  GroupFamily family() const { return family_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return size_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t rank() const { return rank_; }
  const LieData& lie() const { return lie_; }
  const std::vector<Matrix<Rational>>& basis() const { return basis_; }
  const std::vector<Polynomial>& equations() const { return equations_; }
  const std::vector<GroupFactor>& factors() const { return factors_; }
  std::vector<std::string> coordinate_names() const;

  template <typename T>
  Vec<T> lie_coords(const Matrix<T>& x) const {
    check_square(x);
    T like = scalar_context(x.data());
    Vec<T> out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = 0; j < dim(); ++j) {
        const Rational& cij = coord_map_(i, j);
        if (cij.is_zero()) continue;
        const T& xv = x.data()[pivots_[j]];
        if (!is_zero(xv)) out[i] += scalar_from(cij, like) * xv;
      }
    }
    return out;
  }

  template <typename T>
  Matrix<T> lie_matrix(const Vec<T>& c) const {
    if (c.size() != dim()) throw DimensionMismatch("Lie coordinate vector has wrong length");
    T like = scalar_context(c);
    Matrix<T> m(size_, size_);
    for (std::size_t k = 0; k < dim(); ++k) {
      if (is_zero(c[k])) continue;
      for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j)
          if (!basis_[k](i, j).is_zero()) m(i, j) += scalar_from(basis_[k](i, j), like) * c[k];
    }
    return m;
  }

  template <typename T>
  Matrix<T> identity_like(const T& like) const {
    return Matrix<T>::identity(size_, scalar_from(Rational(1), like));
  }

  bool contains(const Matrix<Rational>& g) const;
  bool contains(const Matrix<Fp>& g) const;
  bool in_lie_algebra(const Matrix<Rational>& x) const;
  bool is_tangent(const Matrix<Rational>& g, const Matrix<Rational>& v) const;

  // <x, y> = tr(xy) on the Lie basis.
  InvariantPairing trace_pairing() const;

  template <typename T>
  Matrix<T> factor_block(const Matrix<T>& g, std::size_t factor) const {
    const GroupFactor& f = factors_.at(factor);
    return g.block(f.offset, f.offset, f.group->size(), f.group->size());
  }

 private:
  MatrixGroup() = default;
  void finalize();
  template <typename T>
  void check_square(const Matrix<T>& x) const { check_shape(x.rows(), x.cols()); }
  void check_shape(std::size_t r, std::size_t c) const;

  GroupFamily family_ = GroupFamily::SpecialLinear;
  std::string name_;
  std::size_t size_ = 0;
  std::size_t rank_ = 0;
  std::vector<Matrix<Rational>> basis_;
  std::vector<Polynomial> equations_;
  std::vector<GroupFactor> factors_;
  LieData lie_;
  std::vector<std::size_t> pivots_;  // flat entry index read by coordinate j
  Matrix<Rational> coord_map_;       // coords = coord_map_ * x[pivots_]
};

// Determinant as a polynomial in the entries of an n x n matrix of variables.
Polynomial determinant_polynomial(const std::vector<std::string>& vars, std::size_t n,
                                  std::size_t offset_row = 0, std::size_t offset_col = 0,
                                  std::size_t stride = 0);

}  // namespace shc
