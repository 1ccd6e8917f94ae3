#include <random>

#include "doctest.h"
#include "shc/charstack/enumerate.hpp"
#include "shc/charstack/restriction.hpp"
#include "shc/charstack/serialize.hpp"
#include "shc/cobcat/parser.hpp"
#include "shc/lagstruct/presets.hpp"

using namespace shc;
using namespace shc::chars;
using cob::Cobordism;

namespace {

using QM = Matrix<Rational>;

QM q2(long a, long b, long c, long d) { return QM{{Rational(a), Rational(b)}, {Rational(c), Rational(d)}}; }

// Random element of SL2(Z) as a product of elementary matrices.
QM random_sl2(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> pick(-2, 2);
  QM g = QM::identity(2);
  for (int i = 0; i < 3; ++i) g = g * q2(1, pick(rng), 0, 1) * q2(1, 0, pick(rng), 1);
  return g;
}

cob::ComponentPresentation component(const std::string& expr) {
  return cob::to_cospan(cob::parse(expr)).components.at(0);
}

RepPoint<Rational> random_point(const std::string& expr, std::mt19937_64& rng) {
  RepPoint<Rational> r{component(expr), {}};
  for (std::size_t i = 0; i < r.presentation.rank(); ++i) r.images.push_back(random_sl2(rng));
  return r;
}

MatrixLie<Rational> sl2q() { return MatrixLie<Rational>(2, true, Rational(1)); }

bool antisymmetric(const QM& h) { return h.transpose() == -h; }

}  // namespace

TEST_CASE("representation counts") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  FiniteGroup sl23 = FiniteGroup::special_linear_2(3);
  CHECK(sl23.order() == 24);
  CHECK(count_reps(sl23, cob::to_cospan(cob::parse("pants")), 1u << 20) == 576);
  CHECK(count_reps(sl23, cob::to_cospan(cob::parse("genus(1; 0, 0)")), 1u << 20) == 168);
  CHECK(commuting_pairs(sl23) == 168);
  CHECK(sl23.conjugacy_class_count() == 7);
  CHECK(count_reps(s3, cob::to_cospan(cob::parse("genus(1; 0, 0)")), 1u << 20) == 18);
  CHECK(count_reps(s3, cob::to_cospan(cob::parse("cyl")), 1u << 20) == 6);
  CHECK(count_reps(s3, cob::to_cospan(cob::parse("cap ; cup")), 1u << 20) == 1);
  CHECK_THROWS_AS(count_reps(s3, cob::to_cospan(cob::parse("genus(4; 0, 0)")), 1000), BudgetExceeded);
}

TEST_CASE("parallel enumeration matches the serial reference") {
  for (auto g : {FiniteGroup::symmetric(4), FiniteGroup::special_linear_2(3), FiniteGroup::alternating(4)}) {
    for (const char* e : {"genus(1; 0, 0)", "pants", "genus(1; 1, 0)", "genus(0; 3, 0)"}) {
      auto p = component(e);
      RepList a = enumerate_reps_serial(g, p, 1u << 22), b = enumerate_reps(g, p, 1u << 22);
      CHECK(a.count == b.count);
      CHECK(a.flat == b.flat);
    }
  }
}

TEST_CASE("counts are multiplicative under disjoint union") {
  FiniteGroup g = FiniteGroup::alternating(4);
  std::uint64_t a = count_reps(g, cob::to_cospan(cob::parse("genus(1; 1, 0)")), 1u << 22);
  std::uint64_t b = count_reps(g, cob::to_cospan(cob::parse("genus(1; 0, 0)")), 1u << 22);
  CHECK(count_reps(g, cob::to_cospan(cob::parse("genus(1; 1, 0) | genus(1; 0, 0)")), 1u << 22) == a * b);
}

TEST_CASE("tangent complex examples") {
  auto lie = sl2q();
  RepPoint<Rational> triv{component("pants"), {QM::identity(2), QM::identity(2)}};
  auto t = tangent_complex(lie, triv);
  CHECK(t.h(0) == 3);
  CHECK(t.h(1) == 6);

  // Genus 2 with a1 = b2 = A, b1 = a2 = B satisfies the relator; irreducible over F7.
  MatrixLie<Fp> sl27(2, true, Fp(1, 7));
  auto f7 = [](long a, long b, long c, long d) {
    return Matrix<Fp>{{Fp(a, 7), Fp(b, 7)}, {Fp(c, 7), Fp(d, 7)}};
  };
  Matrix<Fp> a = f7(1, 1, 0, 1), b = f7(1, 0, 3, 1);
  RepPoint<Fp> g2{component("genus(2; 0, 0)"), {a, b, b, a}};
  auto t2 = tangent_complex(sl27, g2);
  CHECK(t2.h(0) == 0);
  CHECK(t2.h(1) == 6);
  CHECK(t2.h(2) == 0);
  CHECK(t2.complex.euler_characteristic() == t2.expected_euler());

  RepPoint<Rational> circle{component("cyl"), {q2(2, 1, 1, 1)}};
  auto tc = tangent_complex(lie, circle);
  CHECK(tc.h(0) == lie.rank());
  CHECK(tc.h(1) == lie.rank());

  RepPoint<Rational> bad{component("genus(1; 0, 0)"), {q2(1, 1, 0, 1), q2(1, 0, 1, 1)}};
  CHECK_THROWS_AS(tangent_complex(lie, bad), InvalidRep);
}

TEST_CASE("surface pairing is antisymmetric and the restriction is Lagrangian") {
  std::mt19937_64 rng(11);
  auto lie = sl2q();
  for (const char* e : {"cyl", "pants", "genus(1; 1, 0)", "genus(0; 2, 1)", "genus(1; 1, 1)", "cap"}) {
    for (int trial = 0; trial < 3; ++trial) {
      auto r = random_point(e, rng);
      std::string name = e;
      CAPTURE(name);
      CHECK(antisymmetric(surface_pairing(lie, r)));
      auto l = restriction_lagrangian(lie, r);
      CHECK(is_closed(l.target));
      CHECK(nondegenerate(l.target));
      CHECK(witness_holds(l));
      CHECK(is_lagrangian(l));
    }
  }
}

TEST_CASE("class Lagrangian") {
  auto lie = sl2q();
  for (QM g : {q2(2, 1, 1, 1), q2(1, 1, 0, 1), q2(3, 1, 5, 2), q2(-1, 1, 0, -1)}) {
    auto l = class_lagrangian(lie, g);
    CHECK(l.source.dim(0) == 2);
    CHECK(witness_holds(l));
    CHECK(is_lagrangian(l));
  }
  auto central = class_lagrangian(lie, QM::identity(2));
  CHECK(central.source.dim(0) == 0);
  CHECK(witness_holds(central));
  CHECK(is_lagrangian(central));
}

namespace {

std::vector<Vec<Fp>> cocycles(const MatrixLie<Fp>& lie, const RepPoint<Fp>& r) {
  return kernel_basis(relator_matrix(lie, r));
}

Matrix<Fp> f7(long a, long b, long c, long d) { return Matrix<Fp>{{Fp(a, 7), Fp(b, 7)}, {Fp(c, 7), Fp(d, 7)}}; }

RepPoint<Fp> genus_two_f7() {
  Matrix<Fp> a = f7(1, 1, 0, 1), b = f7(1, 0, 3, 1);
  return RepPoint<Fp>{component("genus(2; 0, 0)"), {a, b, b, a}};
}

}  // namespace

TEST_CASE("Goldman pairing") {
  MatrixLie<Rational> gl1(1, false, Rational(1));
  RepPoint<Rational> torus{component("genus(1; 0, 0)"), {QM::identity(1), QM::identity(1)}};
  CHECK(surface_pairing(gl1, torus) == QM{{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}});

  MatrixLie<Fp> lie(2, true, Fp(1, 7));
  RepPoint<Fp> r = genus_two_f7();
  auto z = cocycles(lie, r);
  REQUIRE(z.size() == 6 + 3);  // H^1 plus coboundaries
  Matrix<Fp> k = f7(2, 1, 1, 1), kinv = inverse(k);
  RepPoint<Fp> conj = r;
  for (auto& m : conj.images) m = k * m * kinv;
  Matrix<Fp> adk = lie.ad(k);
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = 0; j < z.size(); ++j) {
      CHECK(goldman_pairing(lie, r, z[i], z[j]) == -goldman_pairing(lie, r, z[j], z[i]));
      Vec<Fp> ui(z[i].size()), uj(z[j].size());
      for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t a = 0; a < 3; ++a)
          for (std::size_t b = 0; b < 3; ++b) {
            ui[3 * s + a] += adk(a, b) * z[i][3 * s + b];
            uj[3 * s + a] += adk(a, b) * z[j][3 * s + b];
          }
      CHECK(goldman_pairing(lie, conj, ui, uj) == goldman_pairing(lie, r, z[i], z[j]));
    }
    for (std::size_t a = 0; a < 3; ++a) {
      Vec<Fp> x(3);
      x[a] = Fp(1, 7);
      CHECK(is_zero(goldman_pairing(lie, r, coboundary(lie, r, x), z[i])));
    }
  }
  RepPoint<Rational> holed{component("genus(1; 1, 0)"), {QM::identity(2), QM::identity(2)}};
  Vec<Rational> u(6);
  CHECK_THROWS_AS(goldman_pairing(sl2q(), holed, u, u), NotACocycle);
  Vec<Fp> bad(12);
  bad[0] = Fp(1, 7);
  CHECK_THROWS_AS(goldman_pairing(lie, r, bad, z[0]), NotACocycle);
}

TEST_CASE("closed surfaces carry a closed nondegenerate 0-shifted form") {
  MatrixLie<Fp> lie(2, true, Fp(1, 7));
  auto l = restriction_lagrangian(lie, genus_two_f7());
  CHECK(l.source.lo() == -1);
  CHECK(l.witness.graded_antisymmetric(l.source));
  CHECK(witness_holds(l));
  CHECK(is_lagrangian(l));
}

TEST_CASE("restriction verdicts") {
  auto lie = sl2q();
  RepPoint<Rational> cylinder{component("cyl"), {q2(2, 1, 1, 1)}};
  RestrictionVerdict v = restriction_lagrangian_check(lie, cylinder);
  CHECK(v.status == Status::Lagrangian);
  CHECK(v.boundary_dim == 4);
  CHECK(v.image_h0 + v.image_h1 == 2);

  MatrixLie<Fp> lie7(2, true, Fp(1, 7));
  RepPoint<Fp> holed{component("genus(1; 1, 0)"), {f7(1, 1, 0, 1), f7(1, 0, 3, 1)}};
  RestrictionVerdict w = restriction_lagrangian_check(lie7, holed);
  CHECK(w.smooth);
  CHECK(w.isotropic);
  CHECK(w.half_dimensional);
  CHECK(w.chain_lagrangian);
  CHECK(w.status == Status::Lagrangian);

  RepPoint<Rational> trivial{component("genus(1; 1, 0)"), {QM::identity(2), QM::identity(2)}};
  RestrictionVerdict t = restriction_lagrangian_check(lie, trivial);
  CHECK_FALSE(t.smooth);
  CHECK(t.status == Status::Inconclusive);
  CHECK(t.chain_lagrangian);

  CHECK_THROWS_AS(restriction_lagrangian_check(lie7, genus_two_f7()), IncompatibleBoundary);
}

TEST_CASE("constrained moduli") {
  auto lie = sl2q();
  QM a = q2(1, 1, 0, 1);
  QM b{{Rational(2), Rational(0)}, {Rational(1), Rational(1, 2)}};
  RepPoint<Rational> holed{component("genus(1; 1, 0)"), {a, b}};
  QM c = inverse(a * b * inverse(a) * inverse(b));
  ModuliReport m = constrained_moduli(lie, holed, {c});
  CHECK(m.euler == m.expected_euler);
  CHECK(m.expected_euler == 2);
  CHECK(m.reduced_dim == 2);
  CHECK(m.h(-1) == 0);
  CHECK(m.h(1) == 0);
  CHECK(m.pairing_rank == 2);
  CHECK(m.witness_holds);
  CHECK(m.skew);
  CHECK(m.nondegenerate);
  CHECK(m.smooth);

  // The same point through the lagstruct reduction of the fused double times the class.
  GroupPtr g = MatrixGroup::special_linear(2);
  InvariantPairing tr = g->trace_pairing();
  auto fused = fuse_factors(product(double_preset(g, tr), conjugacy_class_preset(g, tr, c)), 0, 1);
  QVec pt;
  for (const QM& x : {a, b, c}) pt.insert(pt.end(), x.data().begin(), x.data().end());
  ReductionReport red = reduce(fused, pt);
  CHECK(red.reduced_dim == m.reduced_dim);
  CHECK(rank(red.reduced_gram) == m.pairing_rank);

  MatrixLie<Fp> lie7(2, true, Fp(1, 7));
  ModuliReport closed = constrained_moduli(lie7, genus_two_f7(), {});
  CHECK(closed.reduced_dim == 6);
  CHECK(closed.pairing_rank == 6);
  CHECK(closed.euler == closed.expected_euler);
  CHECK(closed.nondegenerate);

  RepPoint<Rational> cylinder{component("cyl"), {QM::identity(2)}};
  ModuliReport e = constrained_moduli(lie, cylinder, {QM::identity(2), QM::identity(2)});
  CHECK(e.h(-1) == 3);
  CHECK(e.h(0) == 0);
  CHECK(e.h(1) == 3);
  CHECK(e.pairing_rank == 0);
  CHECK(e.euler == e.expected_euler);
  CHECK(e.witness_holds);
  CHECK(e.nondegenerate);
  CHECK_FALSE(e.smooth);

  CHECK_THROWS_AS(constrained_moduli(lie, holed, {QM::identity(2)}), IncompatibleBoundary);
  CHECK_THROWS_AS(constrained_moduli(lie, holed, {}), IncompatibleBoundary);
}

TEST_CASE("TFT correspondence values") {
  FiniteGroup g = FiniteGroup::special_linear_2(3);
  CorrespondenceValue cyl = tft_evaluate(Cobordism::cyl(), g, 1u << 20);
  CHECK(cyl.apex_count == 24);
  CHECK(cyl.image_count == 24);
  CHECK(cyl.source_count == 24);
  CHECK(cyl.legs_consistent);
  CHECK(cyl.diagonal);

  CorrespondenceValue pants = tft_evaluate(Cobordism::pants(), g, 1u << 20);
  CHECK(pants.apex_count == 576);
  CHECK(pants.image_count == 576);
  CHECK(pants.target_count == 576);
  CHECK_FALSE(pants.diagonal);

  CorrespondenceValue cap = tft_evaluate(Cobordism::cap(), g, 1u << 20);
  CHECK(cap.apex_count == 1);
  CHECK(cap.image_count == 1);

  CorrespondenceValue two = tft_evaluate(cob::parse("cyl | cyl"), g, 1u << 20);
  CHECK(two.apex_count == 576);
  CHECK(two.diagonal);
  CHECK(two.component_counts == std::vector<std::uint64_t>{24, 24});
  CHECK_FALSE(tft_evaluate(cob::parse("genus(1; 1, 1)"), FiniteGroup::symmetric(3), 1u << 20).diagonal);
}

TEST_CASE("TFT gluing certificates") {
  FiniteGroup g = FiniteGroup::special_linear_2(3);
  GluingCertificate a = gluing_certificate(Cobordism::pants(), cob::parse("cap | cyl"), g, 1u << 24);
  CHECK(a.composite == cob::print(Cobordism::cyl()));
  CHECK(a.direct_count == 24);
  CHECK(a.holds());

  GluingCertificate pc = gluing_certificate(Cobordism::pants(), Cobordism::copants(), g, 1u << 24);
  CHECK(pc.composite == cob::print(cob::parse("genus(1; 1, 1)")));
  CHECK(pc.direct_count == 24ull * 24 * 24);
  CHECK(pc.tree_gluings == 1);
  CHECK(pc.extra_gluings == 1);
  CHECK(pc.holds());

  // Every composable pair from the generator set over small groups.
  std::vector<Cobordism> gens{Cobordism::cap(), Cobordism::cup(), Cobordism::cyl(), Cobordism::pants(),
                              Cobordism::copants(), cob::parse("genus(1; 1, 1)")};
  for (auto grp : {FiniteGroup::symmetric(3), FiniteGroup::alternating(4), FiniteGroup::cyclic(5),
                   FiniteGroup::general_linear_1(7)})
    for (const auto& x : gens)
      for (const auto& y : gens) {
        if (!(x.target() == y.source())) continue;
        GluingCertificate c = gluing_certificate(x, y, grp, 1u << 26);
        CAPTURE(c.composite);
        CHECK(c.holds());
      }
}

TEST_CASE("closed doubles reproduce the diagonal verdict") {
  // The double of the one-holed torus at (A, B) is the genus-2 point (A, B, B, A).
  MatrixLie<Fp> lie(2, true, Fp(1, 7));
  RepPoint<Fp> holed{component("genus(1; 1, 0)"), {f7(1, 1, 0, 1), f7(1, 0, 3, 1)}};
  RestrictionVerdict half = restriction_lagrangian_check(lie, holed);
  ModuliReport closed = constrained_moduli(lie, genus_two_f7(), {});
  RepPoint<Fp> cylinder{component("cyl"), {eval_word(holed.presentation.boundary[0].holonomy, holed.images,
                                                     Matrix<Fp>::identity(2, Fp(1, 7)))}};
  RestrictionVerdict diag = restriction_lagrangian_check(lie, cylinder);
  CHECK(diag.status == Status::Lagrangian);
  CHECK(half.status == diag.status);
  CHECK(closed.nondegenerate);
  // Mayer-Vietoris: H^1(double) = H^0(S^1) / H^0(M) + ker(H^1(M)^2 -> H^1(S^1)).
  std::size_t h1 = tangent_complex(lie, holed).h(1);
  CHECK(closed.h(0) == half.boundary_dim / 2 - half.image_h0 + 2 * h1 - half.image_h1);
}

TEST_CASE("certificates over the icosahedral group within budget") {
  FiniteGroup a5 = FiniteGroup::alternating(5);
  CHECK(a5.order() == 60);
  std::vector<Cobordism> gens{Cobordism::cap(), Cobordism::cup(), Cobordism::cyl(), Cobordism::pants(),
                              Cobordism::copants(), cob::parse("genus(1; 1, 1)")};
  std::size_t checked = 0, skipped = 0;
  for (const auto& x : gens)
    for (const auto& y : gens) {
      if (!(x.target() == y.source())) continue;
      try {
        GluingCertificate c = gluing_certificate(x, y, a5, 20'000'000);
        CAPTURE(c.composite);
        CHECK(c.holds());
        ++checked;
      } catch (const BudgetExceeded&) {
        ++skipped;
      }
    }
  CHECK(checked >= 10);
  CHECK(skipped <= 3);
}

TEST_CASE("reports serialize") {
  FiniteGroup g = FiniteGroup::symmetric(3);
  auto j = to_json(tft_evaluate(Cobordism::cyl(), g, 1000));
  CHECK(j["diagonal"] == true);
  CHECK(j["legs"].size() == 2);
  CHECK(j["legs"][0]["holonomy"] == "c1^-1");
  auto c = to_json(gluing_certificate(Cobordism::pants(), Cobordism::copants(), g, 1u << 20));
  CHECK(c["holds"] == true);
  CHECK(c["direct_count"] == 216);
  auto v = to_json(restriction_lagrangian_check(sl2q(), RepPoint<Rational>{component("cyl"), {q2(2, 1, 1, 1)}}));
  CHECK(v["status"] == "lagrangian");
}
