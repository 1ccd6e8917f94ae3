#pragma once

#include "shc/eqforms/form.hpp"
#include "shc/liecore/maurer_cartan.hpp"
#include "shc/liecore/pairing.hpp"

namespace shc {

class PairingNotInvariant : public Error {
 public:
  using Error::Error;
};

// <a, b> for matrices in the Lie algebra, read through Lie coordinates.
// The coordinate projection is defined on all square matrices, which gives
// the ambient extension used by the de Rham differential.
inline JetQ ambient_pairing(const MatrixGroup& g, const InvariantPairing& p, const JMat& a, const JMat& b) {
  return p(g.lie_coords(a), g.lie_coords(b));
}

// <beta(v), x> at g, the kernel of omega_0.
JetQ omega0_kernel(const MatrixGroup& g, const InvariantPairing& p, const JMat& point, const JMat& v,
                   const JMat& x);

// (1/2) <theta u, [theta v, theta w]> at g: omega_1 on an ordered triple.
JetQ omega1_kernel(const MatrixGroup& g, const InvariantPairing& p, const JMat& point, const JMat& u,
                   const JMat& v, const JMat& w);

// omega_0(x) = <beta, x> on G with the conjugation action.
EquivariantForm build_omega0(GroupPtr g, const InvariantPairing& p);
// omega_1 = (1/12) <theta, [theta, theta]>, alternated over the three slots.
EquivariantForm build_omega1(GroupPtr g, const InvariantPairing& p);
// The same expression written with theta_bar.
EquivariantForm build_omega1_bar(GroupPtr g, const InvariantPairing& p);

// omega_0 + u omega_1 on G^ad.
CartanElement adjoint_cartan_element(GroupPtr g, const InvariantPairing& p);

// Reuse of a space across builders.
SpacePtr conjugation_space(GroupPtr g);

}  // namespace shc
