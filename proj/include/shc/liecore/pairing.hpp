#pragma once

#include <array>
#include <vector>

#include "shc/liecore/lie_algebra.hpp"

namespace shc {

// Symmetric bilinear form on a Lie algebra, by its Gram matrix.
struct InvariantPairing {
  LieData lie;
  Matrix<Rational> gram;

  template <typename T>
  T operator()(const Vec<T>& a, const Vec<T>& b) const {
    if (a.size() != lie.dim() || b.size() != lie.dim()) {
      throw DimensionMismatch("pairing arguments have wrong length");
    }
    T like = scalar_context(a);
    T s{};
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (is_zero(a[i])) continue;
      T row{};
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (!gram(i, j).is_zero() && !is_zero(b[j])) row += scalar_from(gram(i, j), like) * b[j];
      }
      s += a[i] * row;
    }
    return s;
  }
};

struct PairingVerdict {
  bool symmetric = false;
  bool invariant = false;
  bool nondegenerate = false;
  std::vector<std::array<std::size_t, 3>> invariance_violations;  // (i, j, k)
  bool ok() const { return symmetric && invariant && nondegenerate; }
};

PairingVerdict check_pairing(const InvariantPairing& p);

}  // namespace shc
