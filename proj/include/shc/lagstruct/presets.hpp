#pragma once

#include <optional>

#include "shc/lagstruct/spaces.hpp"
#include "shc/lagstruct/structures.hpp"
#include "shc/shiftsym/builders.hpp"

namespace shc {

class RefusedInput : public Error {
 public:
  using Error::Error;
};

// T*V with gamma = sum dq_i ∧ dp_i and mu(q, p)(x) = p^T x q.
HamiltonianSpace cotangent_preset(const GroupPtr& group);
// The point with mu = 0 and gamma = 0.
HamiltonianSpace hamiltonian_point(const GroupPtr& group);

// gamma(v_x, v_y)|_g = 1/2 (<y, Ad_g x> - <x, Ad_g y>) on the class of base.
QuasiHamiltonianSpace conjugacy_class_preset(const GroupPtr& group, const InvariantPairing& pairing, const QMat& base);

enum class DoubleTerms { Two, Three };
// mu(a, b) = a b a^-1 b^-1 and
// gamma = 1/2 <a^*theta, b^*theta_bar> + 1/2 <a^*theta_bar, b^*theta>
//         [+ 1/2 <(ab)^*theta, (a^-1 b^-1)^*theta_bar>].
QuasiHamiltonianSpace double_preset(const GroupPtr& group, const InvariantPairing& pairing,
                                    DoubleTerms terms = DoubleTerms::Three);

// The point with mu = e and gamma = 0.
QuasiHamiltonianSpace identity_point(const GroupPtr& group, const InvariantPairing& pairing);

// X1 x X2 over G1 x G2.
QuasiHamiltonianSpace product(const QuasiHamiltonianSpace& a, const QuasiHamiltonianSpace& b);

// Merge factors i < j (same group) through multiplication mu_i mu_j, adding
// sign * 1/2 <mu_i^* theta, mu_j^* theta_bar> to gamma.
QuasiHamiltonianSpace fuse_factors(const QuasiHamiltonianSpace& q, std::size_t i, std::size_t j, int sign = 1);

// Checked fusion of the first two factors: refuses failing inputs.
QuasiHamiltonianSpace fuse(const QuasiHamiltonianSpace& q, const LagrangianCheckOptions& opt);

// 2-form (u, w) -> <alpha(u), beta(w)> - <alpha(w), beta(u)> for Lie-valued
// pullbacks of Maurer-Cartan forms along matrix-valued maps.
struct MaurerCartanPullback {
  SpaceMap map;
  std::size_t size;
  bool right;  // theta_bar instead of theta
};
EquivariantForm pairing_wedge(SpacePtr space, const GroupPtr& group, const InvariantPairing& pairing,
                              MaurerCartanPullback alpha, MaurerCartanPullback beta, const Rational& coeff,
                              std::string label);

enum class Perturbation { None, ScaleMu, ScaleGamma, DropOmega1 };
const char* perturbation_name(Perturbation p);
// Identity each perturbation is designed to break.
const char* perturbation_target(Perturbation p);
// ScaleMu replaces mu by mu^2 (group-valued maps cannot be rescaled); ScaleGamma uses 2 gamma.
QuasiHamiltonianSpace perturb(const QuasiHamiltonianSpace& q, Perturbation p);
HamiltonianSpace perturb(const HamiltonianSpace& h, Perturbation p);
Verdict check_perturbed(const QuasiHamiltonianSpace& q, Perturbation p, const LagrangianCheckOptions& opt);

// Reduction at pt with mu(pt) = e: gamma on ker dmu / im v.
struct ReductionReport {
  std::size_t tangent_dim = 0;
  std::size_t kernel_dim = 0;
  std::size_t orbit_dim = 0;
  std::size_t reduced_dim = 0;
  bool descends = false;
  bool skew = false;
  bool nondegenerate = false;
  QMat reduced_gram;
};
ReductionReport reduce(const QuasiHamiltonianSpace& q, const QVec& pt);

// Linear model at pt of the Lagrangian [X/G] -> [G/G^ad] (or [g*/G]).
LinearLagrangian<Rational> linearize(const QuasiHamiltonianSpace& q, const QVec& pt);
LinearLagrangian<Rational> linearize(const HamiltonianSpace& h, const QVec& pt);

struct CompositionReport {
  LinearCorrespondence<Rational> value;
  bool witness_holds = false;
  bool lagrangian = false;
};
CompositionReport compose_correspondences(const LinearCorrespondence<Rational>& c1,
                                          const LinearCorrespondence<Rational>& c2);
CompositionReport describe(const LinearCorrespondence<Rational>& c);

}  // namespace shc
