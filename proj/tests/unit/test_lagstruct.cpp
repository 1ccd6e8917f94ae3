#include "doctest.h"
#include "shc/lagstruct/presets.hpp"
#include "shc/liecore/sampling.hpp"

using namespace shc;

namespace {

LagrangianCheckOptions opts(std::size_t n = 4, std::uint64_t seed = 3) {
  LagrangianCheckOptions o;
  o.base.samples = n;
  o.base.seed = seed;
  return o;
}

std::vector<bool> flags(const Verdict& v) {
  std::vector<bool> out;
  for (const auto& c : v.checks) out.push_back(c.holds);
  return out;
}

struct Fixture {
  GroupPtr g = MatrixGroup::special_linear(2);
  InvariantPairing tr = g->trace_pairing();
  QMat b1{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  QMat b2{{Rational(3), Rational(1)}, {Rational(-1), Rational(0)}};
};

QVec concat(std::initializer_list<QMat> ms) {
  QVec out;
  for (const auto& m : ms) out.insert(out.end(), m.data().begin(), m.data().end());
  return out;
}

}  // namespace

TEST_CASE_FIXTURE(Fixture, "Hamiltonian examples") {
  Verdict v = check_hamiltonian(cotangent_preset(g), opts());
  CHECK(v.passed());
  CHECK(v.checks.size() == 4);
  CHECK(check_hamiltonian(hamiltonian_point(g), opts()).passed());

  Verdict doubled = check_hamiltonian(perturb(cotangent_preset(g), Perturbation::ScaleMu), opts());
  CHECK(flags(doubled) == std::vector<bool>{true, true, false, true});
  CHECK_FALSE(doubled.check(identity::kMoment).holds);

  // sum dp ∧ dq is the opposite orientation and breaks the moment identity.
  HamiltonianSpace flipped = cotangent_preset(g);
  flipped.gamma = scale(flipped.gamma, Rational(-1));
  CHECK(flags(check_hamiltonian(flipped, opts())) == std::vector<bool>{true, true, false, true});
}

TEST_CASE_FIXTURE(Fixture, "quasi-Hamiltonian examples") {
  auto cls = conjugacy_class_preset(g, tr, b1);
  CHECK(check_quasi_hamiltonian(cls, opts(8)).passed());
  CHECK(check_quasi_hamiltonian(identity_point(g, tr), opts()).passed());
  CHECK(check_quasi_hamiltonian(double_preset(g, tr), opts(6)).passed());

  auto opposite = cls;
  opposite.gamma = scale(cls.gamma, Rational(-1));
  CHECK(flags(check_quasi_hamiltonian(opposite, opts())) == std::vector<bool>{true, false, true, true});

  Verdict two = check_quasi_hamiltonian(double_preset(g, tr, DoubleTerms::Two), opts());
  CHECK_FALSE(two.check(identity::kMoment).holds);
  CHECK_FALSE(two.check(identity::kClosure).holds);
}

TEST_CASE_FIXTURE(Fixture, "conjugacy class form on action vectors") {
  auto cls = conjugacy_class_preset(g, tr, b1);
  std::mt19937_64 rng(5);
  for (const auto& pt : cls.space->sample_points(5, 2)) {
    QVec x = random_lie_coords(*g, rng), y = random_lie_coords(*g, rng);
    QVec vx = cls.space->action_field(x, pt), vy = cls.space->action_field(y, pt);
    QMat m = QMat::from_rows(2, 2, pt);
    auto ad = [&](const QVec& z) { return g->lie_coords(QMat(m * g->lie_matrix(z) * inverse(m))); };
    Rational oracle = (tr(y, ad(x)) - tr(x, ad(y))) * Rational(1, 2);
    CHECK(cls.gamma.eval(QVec(3), pt, {vx, vy}) == oracle);
  }
}

TEST_CASE_FIXTURE(Fixture, "verdicts are invariant under translating the sample points") {
  auto cls = conjugacy_class_preset(g, tr, b1);
  auto pts = cls.space->sample_points(4, 9);
  auto hs = sample_points(*g, 4, 10);
  std::vector<QVec> moved;
  for (std::size_t i = 0; i < pts.size(); ++i) moved.push_back(static_cast<const GSpace&>(*cls.space).act(hs[i], pts[i]));
  for (auto p : {Perturbation::None, Perturbation::ScaleGamma}) {
    auto q = perturb(cls, p);
    CHECK(flags(check_quasi_hamiltonian(q, pts, opts())) == flags(check_quasi_hamiltonian(q, moved, opts())));
  }
  auto cot = cotangent_preset(g);
  auto cp = cot.space->sample_points(4, 1);
  std::vector<QVec> cm;
  for (std::size_t i = 0; i < cp.size(); ++i) cm.push_back(static_cast<const GSpace&>(*cot.space).act(hs[i], cp[i]));
  CHECK(flags(check_hamiltonian(cot, cp, opts())) == flags(check_hamiltonian(cot, cm, opts())));
}

TEST_CASE_FIXTURE(Fixture, "perturbations flip the identities they touch") {
  auto cls = conjugacy_class_preset(g, tr, b1);
  auto dbl = double_preset(g, tr);
  auto o = opts(3);
  CHECK(flags(check_perturbed(cls, Perturbation::ScaleMu, o)) == std::vector<bool>{true, false, true, true});
  CHECK(flags(check_perturbed(cls, Perturbation::ScaleGamma, o)) == std::vector<bool>{true, false, true, true});
  CHECK(flags(check_perturbed(dbl, Perturbation::DropOmega1, o)) == std::vector<bool>{true, true, false, true});
  // On the double d gamma != 0, so rescaling gamma also breaks closure; on a
  // 2-dimensional class every 3-form vanishes, so dropping omega_1 is inert.
  CHECK(flags(check_perturbed(dbl, Perturbation::ScaleGamma, o)) == std::vector<bool>{true, false, false, true});
  CHECK(check_perturbed(cls, Perturbation::DropOmega1, o).passed());
}

TEST_CASE_FIXTURE(Fixture, "fusion") {
  auto c1 = conjugacy_class_preset(g, tr, b1), c2 = conjugacy_class_preset(g, tr, b2);
  auto o = opts(3);
  auto f = fuse(product(c1, c2), o);
  CHECK(f.space->group()->dim() == 3);
  CHECK(check_quasi_hamiltonian(f, o).passed());
  for (const auto& pt : f.space->sample_points(3, 4)) {
    QVec a(pt.begin(), pt.begin() + 4), b(pt.begin() + 4, pt.end());
    CHECK(eval_map(f.mu, pt) == QMat(QMat::from_rows(2, 2, a) * QMat::from_rows(2, 2, b)).data());
  }
  CHECK_FALSE(check_quasi_hamiltonian(fuse_factors(product(c1, c2), 0, 1, -1), o).passed());

  auto neutral = fuse(product(c1, identity_point(g, tr)), o);
  CHECK(flags(check_quasi_hamiltonian(neutral, o)) == flags(check_quasi_hamiltonian(c1, o)));
  for (const auto& pt : c1.space->sample_points(3, 6)) {
    auto t = c1.space->tangent_basis(pt);
    CHECK(gamma_matrix(neutral.gamma, pt, t) == gamma_matrix(c1.gamma, pt, t));
  }

  auto bad = perturb(c1, Perturbation::ScaleGamma);
  CHECK_THROWS_AS(fuse(product(bad, c2), o), RefusedInput);
}

TEST_CASE_FIXTURE(Fixture, "fusing the double with itself and with a class") {
  auto d = double_preset(g, tr);
  auto o = opts(2);
  CHECK(check_quasi_hamiltonian(fuse(product(d, d), o), o).passed());
  CHECK(check_quasi_hamiltonian(fuse(product(d, conjugacy_class_preset(g, tr, b1)), o), o).passed());
}

TEST_CASE_FIXTURE(Fixture, "reduction") {
  auto d = double_preset(g, tr);
  QMat a{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
  QMat b{{Rational(2), Rational(0)}, {Rational(1), Rational(1, 2)}};
  QMat c = inverse(QMat(a * b * inverse(a) * inverse(b)));
  auto f = fuse_factors(product(d, conjugacy_class_preset(g, tr, c)), 0, 1);
  auto r = reduce(f, concat({a, b, c}));
  CHECK(r.descends);
  CHECK(r.skew);
  CHECK(r.reduced_dim == 2);
  CHECK(r.nondegenerate);
  CHECK(rank(r.reduced_gram) == r.reduced_dim);

  // Commuting regular pair: stabilizer is the diagonal torus.
  QMat s{{Rational(2), Rational(0)}, {Rational(0), Rational(1, 2)}};
  QMat t{{Rational(3), Rational(0)}, {Rational(0), Rational(1, 3)}};
  auto rc = reduce(d, concat({s, t}));
  CHECK(rc.descends);
  CHECK(rc.orbit_dim == 2);
  CHECK(rc.reduced_dim == 2);
  CHECK(rc.skew);

  // Trivial group: reduction restricts gamma to the level set.
  auto one = MatrixGroup::special_linear(1);
  auto plane = std::make_shared<AffineSpace>(one, 2);
  FormKernel area = [](const JVec&, const JVec&, const std::vector<JVec>& vs) {
    return vs[0][0] * vs[1][1] - vs[0][1] * vs[1][0];
  };
  QuasiHamiltonianSpace q{"plane", plane, [](const JVec&) { return JVec{JetQ(Rational(1))}; },
                          EquivariantForm(plane, 2, 0, 0, area, "area"), one->trace_pairing(), {}};
  auto rt = reduce(q, {Rational(1), Rational(2)});
  CHECK(rt.reduced_dim == 2);
  CHECK(rt.nondegenerate);

  CHECK_THROWS_AS(reduce(d, concat({a, b})), RefusedInput);
}

TEST_CASE_FIXTURE(Fixture, "linearized Lagrangians agree with the pointwise checks") {
  auto d = double_preset(g, tr);
  auto cls = conjugacy_class_preset(g, tr, b1);
  for (const auto* q : {&d, &cls}) {
    for (const auto& pt : q->space->sample_points(3, 8)) {
      auto l = linearize(*q, pt);
      CHECK(witness_holds(l));
      CHECK(is_lagrangian(l));
    }
  }
  auto wrong = perturb(cls, Perturbation::ScaleGamma);
  CHECK_FALSE(witness_holds(linearize(wrong, cls.space->sample_points(1, 2)[0])));
  auto cot = cotangent_preset(g);
  for (const auto& pt : cot.space->sample_points(3, 2)) {
    auto l = linearize(cot, pt);
    CHECK(witness_holds(l));
    CHECK(is_lagrangian(l));
  }
}

TEST_CASE_FIXTURE(Fixture, "composing Lagrangian correspondences") {
  auto d = double_preset(g, tr);
  QMat a{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
  QMat b{{Rational(2), Rational(0)}, {Rational(1), Rational(1, 2)}};
  QMat m = a * b * inverse(a) * inverse(b);
  auto ld = linearize(d, concat({a, b}));
  auto lo = linearize(conjugacy_class_preset(g, tr, m), m.data());

  auto cd = to_point(ld);
  auto with_diag = compose_correspondences(diagonal(cd.left), cd);
  CHECK(with_diag.witness_holds);
  CHECK(with_diag.lagrangian == describe(cd).lagrangian);
  auto other_side = compose_correspondences(cd, diagonal(cd.right));
  CHECK(other_side.lagrangian == describe(cd).lagrangian);

  // Derived intersection of the double with a class: 0-shifted symplectic apex.
  auto meet = compose_correspondences(from_point(lo), cd);
  CHECK(meet.witness_holds);
  CHECK(meet.lagrangian);
  const auto& apex = meet.value.lagrangian.source;
  CHECK(apex.cohomology_dim(-1) == 0);
  CHECK(apex.cohomology_dim(0) == 2);
  CHECK(apex.cohomology_dim(1) == 0);

  auto elsewhere = linearize(conjugacy_class_preset(g, tr, b1), b1.data());
  CHECK_THROWS_AS(compose(from_point(elsewhere), cd), TargetMismatch);
}
