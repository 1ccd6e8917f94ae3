#include <random>

#include "doctest.h"
#include "shc/eqforms/check.hpp"
#include "shc/eqforms/form.hpp"
#include "shc/eqforms/omega.hpp"
#include "shc/liecore/sampling.hpp"

using namespace shc;

namespace {

CheckOptions opts(std::size_t n = 20, std::uint64_t seed = 7) {
  CheckOptions o;
  o.samples = n;
  o.seed = seed;
  return o;
}

// Polynomial-coefficient p-form sum_I c_I(pt) dx_I on affine space, alternated.
EquivariantForm random_affine_form(SpacePtr space, int p, std::mt19937_64& rng) {
  std::size_t n = space->ambient_dim();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::pair<std::vector<std::size_t>, Polynomial>> parts;
  for (const auto& idx : increasing_tuples(n, static_cast<std::size_t>(p))) {
    Polynomial c(names);
    for (int t = 0; t < 3; ++t) {
      Polynomial::Exponents e(n, 0u);
      for (unsigned k = 0; k < rng() % 4; ++k) e[rng() % n] += 1;
      c.add_term(e, random_small_rational(rng));
    }
    parts.emplace_back(idx, c);
  }
  FormKernel k = [parts, p](const JVec&, const JVec& pt, const std::vector<JVec>& vs) {
    JetQ acc;
    for (const auto& [idx, c] : parts) {
      // dx_I(v_1..v_p) = det[v_j(I_i)]
      JMat m(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) m(i, j) = vs[j][idx[i]];
      JetQ det = p == 0 ? JetQ(Rational(1)) : JetQ();
      if (p == 1) det = m(0, 0);
      if (p == 2) det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
      if (p == 3) {
        det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
              m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
      }
      acc += c.eval(pt) * det;
    }
    return acc;
  };
  return EquivariantForm(space, p, 0, 0, k, "random");
}

QVec adjoint_coords(const MatrixGroup& g, const QMat& h, const QVec& x) {
  return g.lie_coords(QMat(h * g.lie_matrix(x) * inverse(h)));
}

}  // namespace

TEST_CASE("eval of a 0-form is its coefficient function") {
  auto triv = MatrixGroup::special_linear(1);
  auto space = std::make_shared<AffineSpace>(triv, 2);
  EquivariantForm f(space, 0, 0, 0,
                    [](const JVec&, const JVec& pt, const std::vector<JVec>&) { return pt[0] * pt[1]; }, "xy");
  CHECK(f.eval({}, {Rational(2), Rational(3)}, {}) == Rational(6));
  CHECK_THROWS_AS(f.eval({}, {Rational(2), Rational(3)}, {{Rational(1), Rational(0)}}), ArityMismatch);
  CHECK_THROWS_AS(contract_action(f), DegreeError);
}

TEST_CASE("de_rham on coordinate forms") {
  auto triv = MatrixGroup::special_linear(1);
  auto space = std::make_shared<AffineSpace>(triv, 3);
  EquivariantForm c(space, 0, 0, 0, [](const JVec&, const JVec&, const std::vector<JVec>&) { return JetQ(5); },
                    "5");
  QVec pt{Rational(1), Rational(2), Rational(3)};
  QVec e0{Rational(1), Rational(0), Rational(0)}, e1{Rational(0), Rational(1), Rational(0)},
      e2{Rational(0), Rational(0), Rational(1)};
  CHECK(de_rham(c).eval({}, pt, {e0}) == Rational(0));
  // x_0 dx_1
  EquivariantForm f(space, 1, 0, 0,
                    [](const JVec&, const JVec& p, const std::vector<JVec>& vs) { return p[0] * vs[0][1]; },
                    "x0 dx1");
  EquivariantForm df = de_rham(f);
  CHECK(df.eval({}, pt, {e0, e1}) == Rational(1));
  CHECK(df.eval({}, pt, {e1, e0}) == Rational(-1));
  CHECK(df.eval({}, pt, {e0, e2}) == Rational(0));
  CHECK(df.eval({}, pt, {e1, e2}) == Rational(0));
}

TEST_CASE("d squared vanishes on random forms") {
  auto triv = MatrixGroup::special_linear(1);
  auto space = std::make_shared<AffineSpace>(triv, 4);
  std::mt19937_64 rng(12);
  for (int p = 0; p <= 2; ++p) {
    EquivariantForm f = random_affine_form(space, p, rng);
    CHECK(check_vanishes(de_rham(de_rham(f)), opts(), "dd").holds);
  }
  auto sl2 = MatrixGroup::special_linear(2);
  auto tr = sl2->trace_pairing();
  CHECK(check_vanishes(de_rham(de_rham(build_omega0(sl2, tr))), opts(), "dd omega0").holds);
}

TEST_CASE("alternation of built forms") {
  auto sl2 = MatrixGroup::special_linear(2);
  auto tr = sl2->trace_pairing();
  EquivariantForm w1 = build_omega1(sl2, tr);
  EquivariantForm dw0 = de_rham(build_omega0(sl2, tr));
  std::mt19937_64 rng(1);
  for (const auto& s : make_samples(*w1.space(), opts(5))) {
    const auto& t = s.tangent;
    CHECK(w1.eval(s.x, s.point, {t[0], t[1], t[2]}) == -w1.eval(s.x, s.point, {t[1], t[0], t[2]}));
    CHECK(w1.eval(s.x, s.point, {t[0], t[1], t[2]}) == -w1.eval(s.x, s.point, {t[0], t[2], t[1]}));
    CHECK(dw0.eval(s.x, s.point, {t[0], t[1]}) == -dw0.eval(s.x, s.point, {t[1], t[0]}));
  }
}

TEST_CASE("omega0 at the identity") {
  auto sl2 = MatrixGroup::special_linear(2);
  auto tr = sl2->trace_pairing();
  EquivariantForm w0 = build_omega0(sl2, tr);
  QVec e = QMat::identity(2).data();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    QVec x = random_lie_coords(*sl2, rng), y = random_lie_coords(*sl2, rng);
    // action vectors vanish at e
    QVec vy = w0.space()->action_field(y, e);
    CHECK(is_zero_vec(vy));
    CHECK(w0.eval(x, e, {vy}) == Rational(0));
    // on a general tangent vector beta(v) = v, so omega0 = tr(v x)
    QMat v = sl2->lie_matrix(y);
    CHECK(w0.eval(x, e, {v.data()}) == (v * sl2->lie_matrix(x)).trace());
  }
}

TEST_CASE("contraction with the action field") {
  auto sl2 = MatrixGroup::special_linear(2);
  SpacePtr space = conjugation_space(sl2);
  std::mt19937_64 rng(8);
  for (std::size_t c = 0; c < 4; ++c) {
    EquivariantForm dxc(space, 1, 0, 0, [c](const JVec&, const JVec&, const std::vector<JVec>& vs) { return vs[0][c]; },
                        "dx");
    EquivariantForm ic = contract_action(dxc);
    CHECK(ic.form_degree() == 0);
    CHECK(ic.lie_degree() == 1);
    for (const auto& g : sample_points(*sl2, 5, c)) {
      QVec x = random_lie_coords(*sl2, rng);
      QMat v = conjugation_field(sl2->lie_matrix(x), g);
      CHECK(ic.eval(x, g.data(), {}) == v.data()[c]);
    }
  }
}

TEST_CASE("coadjoint action field agrees with the differentiated action") {
  auto sl2 = MatrixGroup::special_linear(2);
  CoadjointSpace co(sl2);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    JVec x = lift(random_lie_coords(*sl2, rng)), xi = lift(random_lie_coords(*sl2, rng));
    CHECK(co.action_field(x, xi) == co.GSpace::action_field(x, xi));
  }
}

TEST_CASE("Cartan closure of omega0 + u omega1") {
  for (const auto& g : {MatrixGroup::special_linear(2), MatrixGroup::special_linear(3)}) {
    auto tr = g->trace_pairing();
    EquivariantForm w0 = build_omega0(g, tr);
    EquivariantForm w1 = build_omega1(g, tr);
    CHECK(check_vanishes(d_lr(w0), opts(), "dLR omega0").holds);
    CHECK(check_vanishes(de_rham(w0) + d_lr(w1), opts(), "d omega0 + dLR omega1").holds);
    CHECK(check_vanishes(de_rham(w1), opts(), "d omega1").holds);
    CartanElement dc = cartan_diff(adjoint_cartan_element(g, tr));
    REQUIRE(dc.summands().size() == 3);
    for (const auto& s : dc.summands()) CHECK(check_vanishes(s, opts(), s.label()).holds);
  }
}

TEST_CASE("cartan_diff of omega0 alone leaves d omega0 = -dLR omega1") {
  auto g = MatrixGroup::special_linear(2);
  auto tr = g->trace_pairing();
  EquivariantForm w0 = build_omega0(g, tr);
  CartanElement dc = cartan_diff(CartanElement({w0}));
  const EquivariantForm* u1 = dc.component(1);
  REQUIRE(u1 != nullptr);
  CHECK_FALSE(check_vanishes(*u1, opts(), "d omega0").holds);
  CHECK(check_equal(*u1, scale(d_lr(build_omega1(g, tr)), Rational(-1)).with_u_power(1), opts(), "d omega0 = -dLR omega1").holds);
  CHECK(check_vanishes(*dc.component(0), opts(), "dLR omega0").holds);
}

TEST_CASE("cartan_diff of a constant is zero") {
  auto g = MatrixGroup::special_linear(2);
  EquivariantForm c(conjugation_space(g), 0, 0, 0,
                    [](const JVec&, const JVec&, const std::vector<JVec>&) { return JetQ(3); }, "3");
  CartanElement dc = cartan_diff(CartanElement({c}));
  for (const auto& s : dc.summands()) CHECK(check_vanishes(s, opts(5), "d const").holds);
}

TEST_CASE("omega1 examples") {
  auto t = MatrixGroup::torus(2);
  auto w1t = build_omega1(t, t->trace_pairing());
  CHECK(check_vanishes(w1t, opts(), "abelian omega1").holds);

  for (const auto& g : {MatrixGroup::special_linear(2), MatrixGroup::special_linear(3)}) {
    auto tr = g->trace_pairing();
    CHECK(check_equal(build_omega1(g, tr), build_omega1_bar(g, tr), opts(), "theta vs theta_bar").holds);
  }

  // At e: omega1(v1,v2,v3) = (1/2) tr(v1 [v2, v3]).
  auto sl2 = MatrixGroup::special_linear(2);
  auto w1 = build_omega1(sl2, sl2->trace_pairing());
  QVec e = QMat::identity(2).data();
  std::mt19937_64 rng(6);
  for (int i = 0; i < 10; ++i) {
    QMat a = sl2->lie_matrix(random_lie_coords(*sl2, rng));
    QMat b = sl2->lie_matrix(random_lie_coords(*sl2, rng));
    QMat c = sl2->lie_matrix(random_lie_coords(*sl2, rng));
    Rational oracle = (a * commutator(b, c)).trace() * Rational(1, 2);
    CHECK(w1.eval(QVec(3), e, {a.data(), b.data(), c.data()}) == oracle);
  }
}

TEST_CASE("built forms are G-equivariant") {
  for (const auto& g : {MatrixGroup::special_linear(2), MatrixGroup::special_linear(3)}) {
    auto tr = g->trace_pairing();
    std::vector<EquivariantForm> forms{build_omega0(g, tr), build_omega1(g, tr), de_rham(build_omega0(g, tr))};
    auto hs = sample_points(*g, 5, 77);
    std::size_t i = 0;
    for (const auto& s : make_samples(*forms[0].space(), opts(5))) {
      const QMat& h = hs[i++];
      const GSpace& sp = *forms[0].space();
      QVec hx = adjoint_coords(*g, h, s.x);
      QVec hp = sp.act(h, s.point);
      std::vector<QVec> hv;
      for (const auto& v : s.tangent) hv.push_back(sp.push_forward(h, s.point, v));
      for (const auto& f : forms) {
        std::vector<QVec> a(hv.begin(), hv.begin() + f.form_degree());
        std::vector<QVec> b(s.tangent.begin(), s.tangent.begin() + f.form_degree());
        CHECK(f.eval(hx, hp, a) == f.eval(s.x, s.point, b));
      }
    }
  }
}

TEST_CASE("builders reject non-invariant pairings") {
  auto g = MatrixGroup::special_linear(2);
  InvariantPairing bad = g->trace_pairing();
  bad.gram(0, 0) = Rational(5);
  CHECK_THROWS_AS(build_omega0(g, bad), PairingNotInvariant);
  CHECK_THROWS_AS(build_omega1(g, bad), PairingNotInvariant);
}

TEST_CASE("serial and parallel identity checks agree") {
  auto g = MatrixGroup::special_linear(2);
  auto w0 = build_omega0(g, g->trace_pairing());
  CheckOptions a = opts(6), b = opts(6);
  a.execution = Execution::Serial;
  b.execution = Execution::Parallel;
  auto ra = check_vanishes(de_rham(w0), a, "x");
  auto rb = check_vanishes(de_rham(w0), b, "x");
  CHECK(ra.holds == rb.holds);
  CHECK(ra.counterexample == rb.counterexample);
  CHECK(ra.evaluations == rb.evaluations);
}
