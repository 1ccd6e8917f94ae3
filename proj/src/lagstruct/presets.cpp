#include "shc/lagstruct/presets.hpp"

namespace shc {

namespace {

JMat mc_value(const MaurerCartanPullback& m, const JVec& pt, const JVec& v) {
  JMat g = as_matrix(m.map(pt), m.size);
  JMat dg = as_matrix(push_vector(m.map, pt, v), m.size);
  JMat ginv = inverse(g);
  return m.right ? JMat(dg * ginv) : JMat(ginv * dg);
}

SpaceMap block_map(SpaceMap mu, std::size_t big, std::size_t offset, std::size_t size) {
  return [mu, big, offset, size](const JVec& pt) {
    JMat m = as_matrix(mu(pt), big);
    return m.block(offset, offset, size, size).data();
  };
}

InvariantPairing factor_pairing(const InvariantPairing& p, const GroupFactor& f) {
  std::size_t d = f.group->dim();
  return {f.group->lie(), p.gram.block(f.lie_offset, f.lie_offset, d, d)};
}

InvariantPairing block_pairing(const GroupPtr& group, const std::vector<InvariantPairing>& parts) {
  QMat gram(group->dim(), group->dim());
  std::size_t off = 0;
  for (const auto& p : parts) {
    gram.set_block(off, off, p.gram);
    off += p.gram.rows();
  }
  return {group->lie(), gram};
}

std::vector<GroupFactor> factors_of(const GroupPtr& g) {
  if (!g->factors().empty()) return g->factors();
  return {GroupFactor{g, 0, 0}};
}

JVec slice(const JVec& v, std::size_t from, std::size_t len) {
  return JVec(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + len));
}

}  // namespace

EquivariantForm pairing_wedge(SpacePtr space, const GroupPtr& group, const InvariantPairing& pairing,
                              MaurerCartanPullback alpha, MaurerCartanPullback beta, const Rational& coeff,
                              std::string label) {
  FormKernel k = [alpha, beta, group, pairing, coeff](const JVec&, const JVec& pt, const std::vector<JVec>& vs) {
    JMat au = mc_value(alpha, pt, vs[0]), aw = mc_value(alpha, pt, vs[1]);
    JMat bu = mc_value(beta, pt, vs[0]), bw = mc_value(beta, pt, vs[1]);
    JetQ s = ambient_pairing(*group, pairing, au, bw) - ambient_pairing(*group, pairing, aw, bu);
    return s * JetQ(coeff);
  };
  return EquivariantForm(std::move(space), 2, 0, 0, std::move(k), std::move(label));
}

HamiltonianSpace cotangent_preset(const GroupPtr& group) {
  auto space = std::make_shared<CotangentSpace>(group);
  std::size_t n = group->size();
  GroupPtr g = group;
  SpaceMap mu = [g, n](const JVec& pt) {
    JVec q = slice(pt, 0, n), p = slice(pt, n, n);
    JVec out(g->dim());
    for (std::size_t k = 0; k < g->dim(); ++k) {
      JVec xq = lift(g->basis()[k]) * q;
      out[k] = dot(p, xq);
    }
    return out;
  };
  FormKernel k = [n](const JVec&, const JVec&, const std::vector<JVec>& vs) {
    JetQ s;
    for (std::size_t i = 0; i < n; ++i) s += vs[0][i] * vs[1][n + i] - vs[1][i] * vs[0][n + i];
    return s;
  };
  EquivariantForm gamma(space, 2, 0, 0, k, "sum dq ∧ dp");
  return {"cotangent-" + group->name(), space, mu, gamma, {"gamma = sum_i dq_i ∧ dp_i", "mu(q,p)(x) = p^T x q"}};
}

HamiltonianSpace hamiltonian_point(const GroupPtr& group) {
  auto space = std::make_shared<PointSpace>(group);
  std::size_t d = group->dim();
  SpaceMap mu = [d](const JVec&) { return JVec(d); };
  return {"point", space, mu, zero_form(space, 2, 0, 0), {}};
}

QuasiHamiltonianSpace conjugacy_class_preset(const GroupPtr& group, const InvariantPairing& pairing,
                                             const QMat& base) {
  auto space = std::make_shared<ConjugacyClassSpace>(group, base);
  std::size_t n = group->size(), d = group->dim();
  GroupPtr g = group;
  FormKernel k = [g, pairing, n, d](const JVec&, const JVec& pt, const std::vector<JVec>& vs) {
    JMat m = as_matrix(pt, n);
    JMat minv = inverse(m);
    JMat adj(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      JMat e = lift(g->basis()[j]);
      JVec c = g->lie_coords(JMat(e - m * e * minv));
      for (std::size_t i = 0; i < d; ++i) adj(i, j) = c[i];
    }
    auto generator = [&](const JVec& v) { return pivot_solve(adj, g->lie_coords(JMat(as_matrix(v, n) * minv))); };
    JVec xu = generator(vs[0]), xw = generator(vs[1]);
    auto ad = [&](const JVec& x) { return g->lie_coords(JMat(m * g->lie_matrix(x) * minv)); };
    return (pairing(xw, ad(xu)) - pairing(xu, ad(xw))) * JetQ(Rational(1, 2));
  };
  EquivariantForm gamma(space, 2, 0, 0, k, "gamma_O");
  SpaceMap mu = [](const JVec& pt) { return pt; };
  return {"conjclass-" + group->name(),
          space,
          mu,
          gamma,
          pairing,
          {"chart: level set tr(g^k) = tr(g0^k), k < n", "generator of a tangent vector solved on pivot rows of 1 - Ad_g",
           "formula imported from cited reference (AMM)"}};
}

QuasiHamiltonianSpace double_preset(const GroupPtr& group, const InvariantPairing& pairing, DoubleTerms terms) {
  SpacePtr space = double_space(group);
  std::size_t n = group->size();
  SpaceMap a = [n](const JVec& pt) { return slice(pt, 0, n * n); };
  SpaceMap b = [n](const JVec& pt) { return slice(pt, n * n, n * n); };
  SpaceMap ab = [n](const JVec& pt) { return JMat(as_matrix(pt, n, 0) * as_matrix(pt, n, n * n)).data(); };
  SpaceMap ab_inv = [n](const JVec& pt) {
    return JMat(inverse(as_matrix(pt, n, 0)) * inverse(as_matrix(pt, n, n * n))).data();
  };
  SpaceMap mu = [n](const JVec& pt) {
    JMat x = as_matrix(pt, n, 0), y = as_matrix(pt, n, n * n);
    return JMat(x * y * inverse(x) * inverse(y)).data();
  };
  Rational half(1, 2);
  EquivariantForm gamma = pairing_wedge(space, group, pairing, {a, n, false}, {b, n, true}, half, "a theta, b theta_bar") +
                          pairing_wedge(space, group, pairing, {a, n, true}, {b, n, false}, half, "a theta_bar, b theta");
  if (terms == DoubleTerms::Three)
    gamma = gamma + pairing_wedge(space, group, pairing, {ab, n, false}, {ab_inv, n, true}, half, "ab theta, (ab)^-1 theta_bar");
  std::vector<std::string> notes{"mu(a,b) = a b a^-1 b^-1", "formula imported from cited reference (AMM)"};
  if (terms == DoubleTerms::Two) notes.push_back("third term omitted");
  return {"double-" + group->name(), space, mu, gamma.relabel("gamma_D"), pairing, notes};
}

QuasiHamiltonianSpace identity_point(const GroupPtr& group, const InvariantPairing& pairing) {
  auto space = std::make_shared<PointSpace>(group);
  QVec e = QMat::identity(group->size()).data();
  SpaceMap mu = [e](const JVec&) { return lift(e); };
  return {"point-e", space, mu, zero_form(space, 2, 0, 0), pairing, {}};
}

QuasiHamiltonianSpace product(const QuasiHamiltonianSpace& a, const QuasiHamiltonianSpace& b) {
  auto space = std::make_shared<ProductSpace>(a.space, b.space);
  std::size_t na = a.space->ambient_dim();
  std::size_t sa = a.space->group()->size(), sb = b.space->group()->size();
  std::size_t da = a.space->group()->dim(), db = b.space->group()->dim();
  SpaceMap mua = a.mu, mub = b.mu;
  std::size_t nb = b.space->ambient_dim();
  SpaceMap mu = [=](const JVec& pt) {
    JMat m(sa + sb, sb + sa);
    m.set_block(0, 0, as_matrix(mua(slice(pt, 0, na)), sa));
    m.set_block(sa, sa, as_matrix(mub(slice(pt, na, nb)), sb));
    return m.data();
  };
  EquivariantForm ga = a.gamma, gb = b.gamma;
  FormKernel k = [=](const JVec&, const JVec& pt, const std::vector<JVec>& vs) {
    std::vector<JVec> va, vb;
    for (const auto& v : vs) {
      va.push_back(slice(v, 0, na));
      vb.push_back(slice(v, na, nb));
    }
    return ga.eval_raw(JVec(da), slice(pt, 0, na), va) + gb.eval_raw(JVec(db), slice(pt, na, nb), vb);
  };
  EquivariantForm gamma(space, 2, 0, 0, k, a.gamma.label() + " + " + b.gamma.label());
  InvariantPairing p = block_pairing(space->group(), {a.pairing, b.pairing});
  std::vector<std::string> notes = a.notes;
  notes.insert(notes.end(), b.notes.begin(), b.notes.end());
  return {a.name + " x " + b.name, space, mu, gamma, p, notes};
}

QuasiHamiltonianSpace fuse_factors(const QuasiHamiltonianSpace& q, std::size_t i, std::size_t j, int sign) {
  const GroupPtr& big = q.space->group();
  auto fs = factors_of(big);
  if (!(i < j && j < fs.size())) throw DimensionMismatch("fusion needs factor indices i < j");
  if (fs[i].group != fs[j].group && fs[i].group->name() != fs[j].group->name())
    throw DimensionMismatch("fused factors must be the same group");

  std::vector<GroupPtr> kept;
  std::vector<std::size_t> kept_index;
  std::vector<std::size_t> map(fs.size());
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (k == j) continue;
    map[k] = kept.size();
    kept.push_back(fs[k].group);
    kept_index.push_back(k);
  }
  map[j] = map[i];
  GroupPtr small = kept.size() == 1 ? kept[0] : MatrixGroup::product(kept);
  auto space = std::make_shared<RestrictedSpace>(q.space, small, map);

  std::size_t nbig = big->size(), nsmall = small->size();
  SpaceMap mu0 = q.mu;
  SpaceMap mu = [=](const JVec& pt) {
    JMat m = as_matrix(mu0(pt), nbig);
    JMat out(nsmall, nsmall);
    std::size_t off = 0;
    for (std::size_t k : kept_index) {
      std::size_t s = fs[k].group->size();
      JMat blk = m.block(fs[k].offset, fs[k].offset, s, s);
      if (k == i) blk = blk * m.block(fs[j].offset, fs[j].offset, s, s);
      out.set_block(off, off, blk);
      off += s;
    }
    return out.data();
  };

  EquivariantForm g0 = q.gamma;
  std::size_t dbig = big->dim();
  FormKernel k0 = [g0, dbig](const JVec&, const JVec& pt, const std::vector<JVec>& vs) {
    return g0.eval_raw(JVec(dbig), pt, vs);
  };
  EquivariantForm base(space, 2, 0, 0, k0, q.gamma.label());
  std::size_t s = fs[i].group->size();
  MaurerCartanPullback left{block_map(q.mu, nbig, fs[i].offset, s), s, false};
  MaurerCartanPullback right{block_map(q.mu, nbig, fs[j].offset, s), s, true};
  EquivariantForm corr = pairing_wedge(space, fs[i].group, factor_pairing(q.pairing, fs[i]), left, right,
                                       Rational(sign, 2), "fusion term");
  std::vector<InvariantPairing> parts;
  for (std::size_t k : kept_index) parts.push_back(factor_pairing(q.pairing, fs[k]));
  std::vector<std::string> notes = q.notes;
  notes.push_back("fusion correction imported from cited reference (AMM)");
  return {"fuse(" + q.name + ")", space, mu, (base + corr).relabel("gamma_fused"), block_pairing(small, parts), notes};
}

QuasiHamiltonianSpace fuse(const QuasiHamiltonianSpace& q, const LagrangianCheckOptions& opt) {
  Verdict v = check_quasi_hamiltonian(q, opt);
  if (!v.passed()) throw RefusedInput("fusion input fails its quasi-Hamiltonian check: " + q.name);
  return fuse_factors(q, 0, 1);
}

const char* perturbation_name(Perturbation p) {
  switch (p) {
    case Perturbation::None: return "none";
    case Perturbation::ScaleMu: return "mu";
    case Perturbation::ScaleGamma: return "gamma";
    case Perturbation::DropOmega1: return "omega1";
  }
  return "?";
}

const char* perturbation_target(Perturbation p) {
  switch (p) {
    case Perturbation::None: return "";
    case Perturbation::ScaleMu: return identity::kMoment;
    case Perturbation::ScaleGamma: return identity::kMoment;
    case Perturbation::DropOmega1: return identity::kClosure;
  }
  return "";
}

QuasiHamiltonianSpace perturb(const QuasiHamiltonianSpace& q, Perturbation p) {
  QuasiHamiltonianSpace out = q;
  std::size_t n = q.space->group()->size();
  if (p == Perturbation::ScaleMu) {
    SpaceMap mu = q.mu;
    out.mu = [mu, n](const JVec& pt) {
      JMat m = as_matrix(mu(pt), n);
      return JMat(m * m).data();
    };
  } else if (p == Perturbation::ScaleGamma) {
    out.gamma = scale(q.gamma, Rational(2));
  }
  out.name += std::string("+perturb:") + perturbation_name(p);
  return out;
}

HamiltonianSpace perturb(const HamiltonianSpace& h, Perturbation p) {
  HamiltonianSpace out = h;
  if (p == Perturbation::ScaleMu) {
    SpaceMap mu = h.mu;
    out.mu = [mu](const JVec& pt) { return scaled(mu(pt), JetQ(Rational(2))); };
  } else if (p == Perturbation::ScaleGamma) {
    out.gamma = scale(h.gamma, Rational(2));
  }
  out.name += std::string("+perturb:") + perturbation_name(p);
  return out;
}

Verdict check_perturbed(const QuasiHamiltonianSpace& q, Perturbation p, const LagrangianCheckOptions& opt) {
  LagrangianCheckOptions o = opt;
  o.drop_omega1 = p == Perturbation::DropOmega1;
  return check_quasi_hamiltonian(perturb(q, p), o);
}

ReductionReport reduce(const QuasiHamiltonianSpace& q, const QVec& pt) {
  const GroupPtr& g = q.space->group();
  if (!(eval_map(q.mu, pt) == QMat::identity(g->size()).data())) throw RefusedInput("mu(pt) is not the identity");
  if (!q.space->contains(pt)) throw NotOnSpace("reduction point is not on " + q.space->name());
  ReductionReport r;
  auto tangent = q.space->tangent_basis(pt);
  std::size_t k = tangent.size();
  r.tangent_dim = k;
  QMat gam = gamma_matrix(q.gamma, pt, tangent);
  QMat dmu = differential_matrix(q.mu, pt, tangent);
  std::vector<QVec> ker = k == 0 ? std::vector<QVec>{} : kernel_basis(dmu);
  r.kernel_dim = ker.size();

  QuotientTangent t;
  t.point = pt;
  t.tangent_basis = tangent;
  std::vector<QVec> orbit;
  for (std::size_t j = 0; j < g->dim(); ++j) {
    QVec x(g->dim());
    x[j] = Rational(1);
    QVec c = t.coords(q.space->action_field(x, pt));
    std::vector<QVec> trial = orbit;
    trial.push_back(c);
    if (k > 0 && rank(QMat::from_columns(k, trial)) == trial.size()) orbit = std::move(trial);
  }
  r.orbit_dim = orbit.size();

  r.descends = true;
  for (const auto& o : orbit)
    for (const auto& v : ker)
      if (!dot(o, gam * v).is_zero()) r.descends = false;

  std::vector<QVec> basis = orbit, complement;
  for (const auto& v : ker) {
    std::vector<QVec> trial = basis;
    trial.push_back(v);
    if (rank(QMat::from_columns(k, trial)) == trial.size()) {
      basis = std::move(trial);
      complement.push_back(v);
    }
  }
  r.reduced_dim = complement.size();
  QMat red(r.reduced_dim, r.reduced_dim);
  for (std::size_t a = 0; a < r.reduced_dim; ++a)
    for (std::size_t b = 0; b < r.reduced_dim; ++b) red(a, b) = dot(complement[a], gam * complement[b]);
  r.skew = red == -red.transpose();
  r.nondegenerate = r.descends && (r.reduced_dim == 0 || rank(red) == r.reduced_dim);
  r.reduced_gram = red;
  return r;
}

LinearLagrangian<Rational> linearize(const QuasiHamiltonianSpace& q, const QVec& pt) {
  const GroupPtr& g = q.space->group();
  AdjointPoint target = build_adjoint_group(g, q.pairing, eval_map(q.mu, pt));
  QuotientTangent src = tangent_complex_quotient(*q.space, pt);
  ChainMap<Rational> f(src.complex, target.form.tangent);
  f.set(-1, QMat::identity(g->dim()));
  QMat dmu = differential_matrix(q.mu, pt, src.tangent_basis);
  QMat m(target.form.tangent.dim(0), src.tangent_basis.size());
  for (std::size_t i = 0; i < src.tangent_basis.size(); ++i) {
    QVec c = target.tangent.coords(dmu.col(i));
    for (std::size_t r = 0; r < c.size(); ++r) m(r, i) = c[r];
  }
  f.set(0, m);
  GradedPairing<Rational> h(0);
  h.set(0, gamma_matrix(q.gamma, pt, src.tangent_basis));
  return {src.complex, target.form, f, h};
}

LinearLagrangian<Rational> linearize(const HamiltonianSpace& hs, const QVec& pt) {
  const GroupPtr& g = hs.space->group();
  QForm target = build_coadjoint(g->lie(), eval_map(hs.mu, pt));
  QuotientTangent src = tangent_complex_quotient(*hs.space, pt);
  ChainMap<Rational> f(src.complex, target.tangent);
  f.set(-1, QMat::identity(g->dim()));
  f.set(0, differential_matrix(hs.mu, pt, src.tangent_basis));
  GradedPairing<Rational> h(0);
  h.set(0, gamma_matrix(hs.gamma, pt, src.tangent_basis));
  return {src.complex, target, f, h};
}

CompositionReport describe(const LinearCorrespondence<Rational>& c) {
  CompositionReport r{c, witness_holds(c.lagrangian), false};
  r.lagrangian = r.witness_holds && is_lagrangian(c.lagrangian);
  return r;
}

CompositionReport compose_correspondences(const LinearCorrespondence<Rational>& c1,
                                          const LinearCorrespondence<Rational>& c2) {
  return describe(compose(c1, c2));
}

}  // namespace shc
