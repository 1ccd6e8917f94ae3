#pragma once

#include <string>
#include <vector>

#include "shc/eqforms/check.hpp"
#include "shc/eqforms/omega.hpp"

namespace shc {

// mu: X -> g* in dual Lie coordinates, gamma a G-invariant 2-form.
struct HamiltonianSpace {
  std::string name;
  SpacePtr space;
  SpaceMap mu;
  EquivariantForm gamma;
  std::vector<std::string> notes;
};

// mu: X -> G as a flat matrix, gamma a G-invariant 2-form.
struct QuasiHamiltonianSpace {
  std::string name;
  SpacePtr space;
  SpaceMap mu;
  EquivariantForm gamma;
  InvariantPairing pairing;
  std::vector<std::string> notes;
};

struct Verdict {
  std::string structure;
  std::vector<IdentityReport> checks;

  bool passed() const;
  const IdentityReport& check(const std::string& name) const;
};

// Identity names used in verdicts.
namespace identity {
inline constexpr const char* kInvariance = "invariance";
inline constexpr const char* kClosed = "closed";
inline constexpr const char* kMoment = "moment";
inline constexpr const char* kClosure = "closure";
inline constexpr const char* kNondegenerate = "nondegenerate";
}  // namespace identity

struct LagrangianCheckOptions {
  CheckOptions base;
  // Compare d gamma with 0 instead of -mu^* omega_1.
  bool drop_omega1 = false;
};

// (a) invariance, (b) d gamma = 0, (c) iota_{v_x} gamma = mu^* dx, (d) nondegenerate.
Verdict check_hamiltonian(const HamiltonianSpace& h, const LagrangianCheckOptions& opt);
Verdict check_hamiltonian(const HamiltonianSpace& h, const std::vector<QVec>& points, const LagrangianCheckOptions& opt);

// (a) invariance, (b) iota_{v_x} gamma = mu^* <beta, x>, (c) d gamma = -mu^* omega_1,
// (d) ker gamma ∩ ker d mu = 0.
Verdict check_quasi_hamiltonian(const QuasiHamiltonianSpace& q, const LagrangianCheckOptions& opt);
Verdict check_quasi_hamiltonian(const QuasiHamiltonianSpace& q, const std::vector<QVec>& points,
                                const LagrangianCheckOptions& opt);

// Matrix of gamma on the tangent basis at pt.
QMat gamma_matrix(const EquivariantForm& gamma, const QVec& pt, const std::vector<QVec>& tangent);
// Columns d mu(t_i) in ambient target coordinates.
QMat differential_matrix(const SpaceMap& mu, const QVec& pt, const std::vector<QVec>& tangent);

QVec eval_map(const SpaceMap& mu, const QVec& pt);

}  // namespace shc
