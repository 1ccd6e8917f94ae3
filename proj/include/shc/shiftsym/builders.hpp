#pragma once

#include "shc/eqforms/gspace.hpp"
#include "shc/liecore/pairing.hpp"
#include "shc/shiftsym/lagrangian.hpp"

namespace shc {

using QComplex = Complex<Rational>;
using QForm = ShiftedTwoForm<Rational>;

// Tangent complex of [X/G] at pt: g in degree -1, T_pt X in degree 0,
// differential x -> v_x(pt) written in the tangent basis.
struct QuotientTangent {
  QComplex complex;
  QVec point;
  std::vector<QVec> tangent_basis;  // ambient vectors spanning T_pt X

  // Coordinates of an ambient tangent vector in tangent_basis.
  QVec coords(const QVec& v) const;
  // Ambient vector with the given coordinates.
  QVec ambient(const QVec& c) const;
};

QuotientTangent tangent_complex_quotient(const GSpace& space, const QVec& pt);

// BG with the given Gram matrix placed in degrees (-1, -1), pairing degree -n.
QForm build_bg(const LieData& lie, const QMat& gram, int n);

// [g*/G] at xi: the canonical pairing of g with g*.
QForm build_coadjoint(const LieData& lie, const QVec& xi);

// [G/G^ad] at g: pairing <beta(v), x> between T_g G and g.
struct AdjointPoint {
  QForm form;
  QuotientTangent tangent;
};
AdjointPoint build_adjoint_group(const GroupPtr& group, const InvariantPairing& pairing, const QVec& g);

// Matrix <beta(t_i), e_j> over the tangent basis at g and the Lie basis.
QMat beta_matrix(const GroupPtr& group, const InvariantPairing& pairing, const QuotientTangent& t);

// The point [pt/G] with G trivial: the zero complex and zero form.
QForm build_point(int n);

}  // namespace shc
