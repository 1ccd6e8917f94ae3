#include "shc/eqforms/omega.hpp"

namespace shc {

namespace {

void require_invariant(const InvariantPairing& p) {
  PairingVerdict v = check_pairing(p);
  if (!v.symmetric || !v.invariant) throw PairingNotInvariant("pairing is not symmetric and invariant");
}

// Sum over S_3 of sgn(s) <a_s1, [a_s2, a_s3]> for matrices a.
JetQ alternated_bracket(const MatrixGroup& g, const InvariantPairing& p, const JMat& a0, const JMat& a1,
                        const JMat& a2) {
  const JMat* a[3] = {&a0, &a1, &a2};
  static const int perms[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
                                  {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1}};
  JetQ acc;
  for (const auto& s : perms) {
    JetQ t = ambient_pairing(g, p, *a[s[0]], commutator(*a[s[1]], *a[s[2]]));
    if (s[3] > 0) acc += t; else acc -= t;
  }
  return acc;
}

}  // namespace

SpacePtr conjugation_space(GroupPtr g) { return std::make_shared<ConjugationSpace>(std::move(g)); }

JetQ omega0_kernel(const MatrixGroup& g, const InvariantPairing& p, const JMat& point, const JMat& v,
                   const JMat& x) {
  auto mc = maurer_cartan_with_inverse(inverse(point), v);
  return ambient_pairing(g, p, mc.beta, x);
}

JetQ omega1_kernel(const MatrixGroup& g, const InvariantPairing& p, const JMat& point, const JMat& u,
                   const JMat& v, const JMat& w) {
  JMat ginv = inverse(point);
  return ambient_pairing(g, p, ginv * u, commutator(JMat(ginv * v), JMat(ginv * w))) * JetQ(Rational(1, 2));
}

EquivariantForm build_omega0(GroupPtr g, const InvariantPairing& p) {
  require_invariant(p);
  SpacePtr space = conjugation_space(g);
  FormKernel k = [g, p](const JVec& x, const JVec& pt, const std::vector<JVec>& vs) {
    std::size_t n = g->size();
    return omega0_kernel(*g, p, as_matrix(pt, n), as_matrix(vs[0], n), g->lie_matrix(x));
  };
  return EquivariantForm(space, 1, 1, 0, std::move(k), "omega0");
}

EquivariantForm build_omega1(GroupPtr g, const InvariantPairing& p) {
  require_invariant(p);
  SpacePtr space = conjugation_space(g);
  FormKernel k = [g, p](const JVec&, const JVec& pt, const std::vector<JVec>& vs) {
    std::size_t n = g->size();
    JMat ginv = inverse(as_matrix(pt, n));
    return alternated_bracket(*g, p, ginv * as_matrix(vs[0], n), ginv * as_matrix(vs[1], n),
                              ginv * as_matrix(vs[2], n)) *
           JetQ(Rational(1, 12));
  };
  return EquivariantForm(space, 3, 0, 0, std::move(k), "omega1");
}

EquivariantForm build_omega1_bar(GroupPtr g, const InvariantPairing& p) {
  require_invariant(p);
  SpacePtr space = conjugation_space(g);
  FormKernel k = [g, p](const JVec&, const JVec& pt, const std::vector<JVec>& vs) {
    std::size_t n = g->size();
    JMat ginv = inverse(as_matrix(pt, n));
    return alternated_bracket(*g, p, as_matrix(vs[0], n) * ginv, as_matrix(vs[1], n) * ginv,
                              as_matrix(vs[2], n) * ginv) *
           JetQ(Rational(1, 12));
  };
  return EquivariantForm(space, 3, 0, 0, std::move(k), "omega1_bar");
}

CartanElement adjoint_cartan_element(GroupPtr g, const InvariantPairing& p) {
  return CartanElement({build_omega0(g, p), build_omega1(g, p).with_u_power(1)});
}

}  // namespace shc
