#include "shc/liecore/pairing.hpp"

namespace shc {

PairingVerdict check_pairing(const InvariantPairing& p) {
  PairingVerdict v;
  const std::size_t n = p.lie.dim();
  if (p.gram.rows() != n || p.gram.cols() != n) throw DimensionMismatch("gram matrix shape");
  v.symmetric = p.gram == p.gram.transpose();
  // <[x,y],z> + <y,[x,z]> = 0 on basis triples
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto ei = p.lie.basis_vector(i), ej = p.lie.basis_vector(j), ek = p.lie.basis_vector(k);
        Rational s = p(p.lie.bracket(ei, ej), ek) + p(ej, p.lie.bracket(ei, ek));
        if (!s.is_zero()) v.invariance_violations.push_back({i, j, k});
      }
  v.invariant = v.invariance_violations.empty();
  v.nondegenerate = n == 0 || rank(p.gram) == n;
  return v;
}

}  // namespace shc
