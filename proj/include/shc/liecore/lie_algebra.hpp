#pragma once

#include <array>
#include <string>
#include <vector>

#include "shc/exactalg/linalg.hpp"
#include "shc/exactalg/rational.hpp"

namespace shc {

// Lie algebra given by structure constants: [e_i, e_j] = sum_k c^k_{ij} e_k.
class LieData {
 public:
  LieData() = default;
  explicit LieData(std::vector<std::string> names);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  const Rational& c(std::size_t k, std::size_t i, std::size_t j) const { return c_[index(k, i, j)]; }
  void set_c(std::size_t k, std::size_t i, std::size_t j, const Rational& v) { c_[index(k, i, j)] = v; }

  template <typename T>
  Vec<T> bracket(const Vec<T>& x, const Vec<T>& y) const {
    check(x.size());
    check(y.size());
    T like = scalar_context(x);
    Vec<T> out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (is_zero(y[j])) continue;
        T xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim(); ++k) {
          const Rational& ck = c(k, i, j);
          if (!ck.is_zero()) out[k] += scalar_from(ck, like) * xy;
        }
      }
    }
    return out;
  }

  // Matrix of ad(e_i): column j holds the coordinates of [e_i, e_j].
  Matrix<Rational> ad_basis(std::size_t i) const;
  Matrix<Rational> ad(const Vec<Rational>& x) const;

  Vec<Rational> basis_vector(std::size_t i) const;

 private:
  std::size_t index(std::size_t k, std::size_t i, std::size_t j) const {
    return (k * dim() + i) * dim() + j;
  }
  void check(std::size_t n) const {
    if (n != dim()) throw DimensionMismatch("Lie element has wrong length");
  }

  std::vector<std::string> names_;
  std::vector<Rational> c_;
};

struct LieVerdict {
  std::vector<std::array<std::size_t, 3>> antisymmetry;  // (k, i, j) with c^k_ij != -c^k_ji
  std::vector<std::array<std::size_t, 3>> jacobi;        // (i, j, l) with nonzero Jacobiator
  bool valid() const { return antisymmetry.empty() && jacobi.empty(); }
};

LieVerdict check_lie(const LieData& l);

// K(e_i, e_j) = tr(ad e_i ad e_j).
Matrix<Rational> killing_form(const LieData& l);

LieData sl2_lie();
LieData abelian_lie(std::size_t n);

}  // namespace shc
