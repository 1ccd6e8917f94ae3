#include "shc/lagstruct/structures.hpp"

#include <sstream>

#include "shc/liecore/sampling.hpp"

namespace shc {

bool Verdict::passed() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

const IdentityReport& Verdict::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw Error("verdict has no identity named " + name);
}

QVec eval_map(const SpaceMap& mu, const QVec& pt) { return value_part(mu(lift(pt))); }

QMat gamma_matrix(const EquivariantForm& gamma, const QVec& pt, const std::vector<QVec>& tangent) {
  QVec x(gamma.space()->group()->dim());
  QMat m(tangent.size(), tangent.size());
  for (std::size_t i = 0; i < tangent.size(); ++i)
    for (std::size_t j = i + 1; j < tangent.size(); ++j) {
      m(i, j) = gamma.eval(x, pt, {tangent[i], tangent[j]});
      m(j, i) = -m(i, j);
    }
  return m;
}

QMat differential_matrix(const SpaceMap& mu, const QVec& pt, const std::vector<QVec>& tangent) {
  std::vector<QVec> cols;
  for (const auto& t : tangent) cols.push_back(value_part(push_vector(mu, lift(pt), lift(t))));
  std::size_t rows = eval_map(mu, pt).size();
  return QMat::from_columns(rows, cols);
}

namespace {

std::string describe(const QVec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

// gamma(h.pt)(h_* u, h_* w) = gamma(pt)(u, w) and mu(h.pt) = h . mu(pt).
template <typename MuAct>
IdentityReport invariance(const GSpace& space, const SpaceMap& mu, const EquivariantForm& gamma,
                          const std::vector<SampleArgs>& samples, std::uint64_t seed, MuAct&& mu_act) {
  IdentityReport r;
  r.name = identity::kInvariance;
  auto hs = sample_points(*space.group(), samples.size(), seed + 17);
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const auto& a = samples[s];
    const QMat& h = hs[s];
    QVec hp = space.act(h, a.point);
    ++r.points;
    ++r.evaluations;
    if (!(eval_map(mu, hp) == mu_act(h, eval_map(mu, a.point)))) {
      r.holds = false;
      r.counterexample = "moment map not equivariant at " + describe(a.point);
      return r;
    }
    std::vector<QVec> pushed;
    for (const auto& t : a.tangent) pushed.push_back(space.push_forward(h, a.point, t));
    for (std::size_t i = 0; i < a.tangent.size(); ++i)
      for (std::size_t j = i + 1; j < a.tangent.size(); ++j) {
        ++r.evaluations;
        Rational lhs = gamma.eval(a.x, hp, {pushed[i], pushed[j]});
        Rational rhs = gamma.eval(a.x, a.point, {a.tangent[i], a.tangent[j]});
        if (lhs != rhs) {
          r.holds = false;
          r.counterexample = "gamma not invariant at " + describe(a.point);
          return r;
        }
      }
  }
  return r;
}

IdentityReport kernel_condition(const QuasiHamiltonianSpace& q, const std::vector<SampleArgs>& samples) {
  IdentityReport r;
  r.name = identity::kNondegenerate;
  for (const auto& a : samples) {
    ++r.points;
    if (a.tangent.empty()) continue;
    QMat g = gamma_matrix(q.gamma, a.point, a.tangent);
    QMat d = differential_matrix(q.mu, a.point, a.tangent);
    QMat stacked(g.rows() + d.rows(), a.tangent.size());
    stacked.set_block(0, 0, g);
    stacked.set_block(g.rows(), 0, d);
    ++r.evaluations;
    if (rank(stacked) != a.tangent.size()) {
      r.holds = false;
      r.counterexample = "ker gamma ∩ ker dmu != 0 at " + describe(a.point);
      return r;
    }
  }
  return r;
}

IdentityReport gamma_nondegenerate(const EquivariantForm& gamma, const std::vector<SampleArgs>& samples) {
  IdentityReport r;
  r.name = identity::kNondegenerate;
  for (const auto& a : samples) {
    ++r.points;
    ++r.evaluations;
    if (a.tangent.empty()) continue;
    if (rank(gamma_matrix(gamma, a.point, a.tangent)) != a.tangent.size()) {
      r.holds = false;
      r.counterexample = "gamma degenerate at " + describe(a.point);
      return r;
    }
  }
  return r;
}

}  // namespace

Verdict check_hamiltonian(const HamiltonianSpace& h, const LagrangianCheckOptions& opt) {
  return check_hamiltonian(h, h.space->sample_points(opt.base.samples, opt.base.seed), opt);
}

Verdict check_hamiltonian(const HamiltonianSpace& h, const std::vector<QVec>& points,
                          const LagrangianCheckOptions& opt) {
  const MatrixGroup& g = *h.space->group();
  auto samples = make_samples_at(*h.space, points, opt.base.seed);
  Verdict v;
  v.structure = h.name;
  v.checks.push_back(invariance(*h.space, h.mu, h.gamma, samples, opt.base.seed, [&](const QMat& m, const QVec& xi) {
    CoadjointSpace co(h.space->group());
    return static_cast<const GSpace&>(co).act(m, xi);
  }));
  v.checks.push_back(check_vanishes_on(de_rham(h.gamma), samples, opt.base.execution, identity::kClosed));
  SpaceMap mu = h.mu;
  std::size_t dim = g.dim();
  FormKernel dmu = [mu, dim](const JVec& x, const JVec& pt, const std::vector<JVec>& vs) {
    JVec d = push_vector(mu, pt, vs[0]);
    JetQ s;
    for (std::size_t i = 0; i < dim; ++i) s += d[i] * x[i];
    return s;
  };
  EquivariantForm mu_dx(h.space, 1, 1, 0, dmu, "mu^* dx");
  v.checks.push_back(check_vanishes_on(contract_action(h.gamma) - mu_dx, samples, opt.base.execution, identity::kMoment));
  v.checks.push_back(gamma_nondegenerate(h.gamma, samples));
  return v;
}

Verdict check_quasi_hamiltonian(const QuasiHamiltonianSpace& q, const LagrangianCheckOptions& opt) {
  return check_quasi_hamiltonian(q, q.space->sample_points(opt.base.samples, opt.base.seed), opt);
}

Verdict check_quasi_hamiltonian(const QuasiHamiltonianSpace& q, const std::vector<QVec>& points,
                                const LagrangianCheckOptions& opt) {
  const GroupPtr& g = q.space->group();
  auto samples = make_samples_at(*q.space, points, opt.base.seed);
  Verdict v;
  v.structure = q.name;
  std::size_t n = g->size();
  v.checks.push_back(invariance(*q.space, q.mu, q.gamma, samples, opt.base.seed, [n](const QMat& h, const QVec& m) {
    return QMat(h * QMat::from_rows(n, n, m) * inverse(h)).data();
  }));
  SpacePtr target = conjugation_space(g);
  EquivariantForm w0 = pullback(build_omega0(g, q.pairing), q.space, q.mu, "mu^* omega0");
  v.checks.push_back(check_vanishes_on(contract_action(q.gamma) - w0, samples, opt.base.execution, identity::kMoment));
  EquivariantForm dg = de_rham(q.gamma);
  if (!opt.drop_omega1) dg = dg + pullback(build_omega1(g, q.pairing), q.space, q.mu, "mu^* omega1");
  v.checks.push_back(check_vanishes_on(dg, samples, opt.base.execution, identity::kClosure));
  v.checks.push_back(kernel_condition(q, samples));
  return v;
}

}  // namespace shc
