#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shc/exactalg/fp.hpp"
#include "shc/exactalg/matrix.hpp"

namespace shc::chars {

// A finite group given by its multiplication table. Elements are indices in a
// canonical order (lexicographic in the defining data).
class FiniteGroup {
 public:
  using Elem = std::uint32_t;

  static FiniteGroup special_linear_2(std::uint32_t p);
  static FiniteGroup general_linear_1(std::uint32_t p);
  static FiniteGroup symmetric(unsigned n);
  static FiniteGroup alternating(unsigned n);
  static FiniteGroup cyclic(unsigned n);

  const std::string& name() const { return name_; }
  std::size_t order() const { return inv_.size(); }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  // Matrix realization over F_p; empty for permutation groups.
  bool has_matrices() const { return !matrices_.empty(); }
  std::uint32_t modulus() const { return modulus_; }
  std::size_t degree() const { return degree_; }
  bool traceless_algebra() const { return traceless_; }
  Matrix<Fp> matrix(Elem a) const;
  Elem index_of(const Matrix<Fp>& m) const;

  // #{t : t a t^-1 = b}
  std::size_t conjugators(Elem a, Elem b) const;
  std::size_t conjugacy_class_count() const;

 private:
  FiniteGroup() = default;
  void finish(std::vector<std::vector<long>> elems, const std::vector<long>& one,
              std::vector<long> (*product)(const std::vector<long>&, const std::vector<long>&, std::uint32_t));

  std::string name_;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  Elem identity_ = 0;
  std::vector<std::vector<long>> matrices_;
  std::uint32_t modulus_ = 0;
  std::size_t degree_ = 0;
  bool traceless_ = false;
};

}  // namespace shc::chars
