#include <random>

#include "doctest.h"
#include "shc/exactalg/fp.hpp"
#include "shc/exactalg/jet.hpp"
#include "shc/exactalg/linalg.hpp"
#include "shc/exactalg/polynomial.hpp"
#include "shc/exactalg/rational.hpp"
#include "support.hpp"

using namespace shc;
using shc::testing::random_matrix;
using shc::testing::random_rational;

TEST_CASE("rational canonical form") {
  Rational a(6, -4);
  CHECK(a.numerator() == "-3");
  CHECK(a.denominator() == "2");
  CHECK(Rational("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
}

TEST_CASE("prime field reduction and inverses") {
  Fp a(-3, 7);
  CHECK(a.value() == 4);
  for (long v = 1; v < 7; ++v) CHECK(Fp(v, 7) * Fp(v, 7).inverse() == Fp(1, 7));
  CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 5), ModulusMismatch);
  CHECK((Fp(1) + Fp(6, 7)).value() == 0);
  CHECK(to_fp(Rational(1, 2), 7) == Fp(4, 7));
  CHECK_THROWS_AS(to_fp(Rational(1, 7), 7), DivisionByZero);
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix<Rational>::identity(3)) == 3);
  CHECK(rank(Matrix<Rational>(2, 2)) == 0);
  CHECK(rank(Matrix<Rational>{{1, 2}, {2, 4}}) == 1);
  Matrix<Jet<Rational>> j(1, 1);
  CHECK_THROWS_AS(rank(j), UnsupportedScalar);
  CHECK_THROWS_AS(kernel_basis(j), UnsupportedScalar);
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(Matrix<Rational>::identity(3)).empty());
  CHECK(kernel_basis(Matrix<Rational>(2, 3)).size() == 3);
  auto k = kernel_basis(Matrix<Rational>{{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec<Rational>{Rational(-1), Rational(1)});
}

TEST_CASE("rank is transpose invariant and kernels are annihilated") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix<Rational> m = random_matrix(rng, r, c);
    if (trial % 3 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(2, 3);
    }
    CHECK(rank(m) == rank(m.transpose()));
    auto ker = kernel_basis(m);
    CHECK(ker.size() == c - rank(m));
    for (const auto& v : ker) CHECK(is_zero_vec(m * v));
  }
}

TEST_CASE("rank and kernel over F_p") {
  Matrix<Fp> m{{Fp(1, 5), Fp(2, 5)}, {Fp(3, 5), Fp(1, 5)}};
  // det = 1 - 6 = -5 = 0 mod 5
  CHECK(rank(m) == 1);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(is_zero_vec(m * k[0]));
}

TEST_CASE("inverse and determinant") {
  std::mt19937_64 rng(3);
  int done = 0;
  while (done < 20) {
    Matrix<Rational> m = random_matrix(rng, 3, 3);
    if (determinant(m).is_zero()) continue;
    CHECK(m * inverse(m) == Matrix<Rational>::identity(3));
    ++done;
  }
  CHECK(determinant(Matrix<Rational>{{1, 2}, {3, 4}}) == Rational(-2));
  CHECK_THROWS_AS(inverse(Matrix<Rational>{{1, 2}, {2, 4}}), DivisionByZero);
}

TEST_CASE("jet inverse of a matrix matches the derivative of the inverse") {
  // d(A^-1) = -A^-1 dA A^-1
  std::mt19937_64 rng(5);
  Matrix<Rational> a{{2, 1}, {1, 1}};
  Matrix<Rational> da = random_matrix(rng, 2, 2);
  Matrix<Jet<Rational>> aj(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      aj(i, j) = Jet<Rational>(a(i, j)) + Jet<Rational>::infinitesimal(0, da(i, j));
  auto inv = inverse(aj);
  Matrix<Rational> ai = inverse(a);
  Matrix<Rational> expected = -(ai * da * ai);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(inv(i, j).value() == ai(i, j));
      CHECK(inv(i, j).part(1u) == expected(i, j));
    }
}

TEST_CASE("poly_eval_jet examples") {
  std::vector<std::string> x{"x"};
  Polynomial sq = Polynomial::variable(x, 0) * Polynomial::variable(x, 0);
  CHECK(poly_eval_jet(sq, {Rational(3)}, {Rational(1)}) == std::pair{Rational(9), Rational(6)});
  Polynomial five = Polynomial::constant(x, Rational(5));
  CHECK(poly_eval_jet(five, {Rational(7)}, {Rational(2)}) == std::pair{Rational(5), Rational(0)});
  std::vector<std::string> xy{"x", "y"};
  Polynomial prod = Polynomial::variable(xy, 0) * Polynomial::variable(xy, 1);
  CHECK(poly_eval_jet(prod, {Rational(2), Rational(3)}, {Rational(1), Rational(1)}) ==
        std::pair{Rational(6), Rational(5)});
  CHECK_THROWS_AS(poly_eval_jet(prod, {Rational(2)}, {Rational(1)}), DimensionMismatch);
}

TEST_CASE("jet derivative equals symbolic partial derivatives on random polynomials") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 6;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    Polynomial p(names);
    int nterms = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < nterms; ++t) {
      Polynomial::Exponents e(n, 0u);
      unsigned budget = static_cast<unsigned>(rng() % 5);
      for (unsigned k = 0; k < budget; ++k) e[rng() % n] += 1;
      p.add_term(e, random_rational(rng));
    }
    CHECK(p.degree() <= 4);
    std::vector<Rational> pt = shc::testing::random_vec(rng, n);
    std::vector<Rational> dir = shc::testing::random_vec(rng, n);
    auto [val, der] = poly_eval_jet(p, pt, dir);
    Rational oracle;
    for (std::size_t i = 0; i < n; ++i) oracle += dir[i] * p.partial(i).eval(pt);
    CHECK(val == p.eval(pt));
    CHECK(der == oracle);
  }
}

TEST_CASE("field axioms on sampled scalars") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    Fp x(static_cast<long>(rng() % 101), 101), y(static_cast<long>(rng() % 101), 101),
        z(static_cast<long>(rng() % 101), 101);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == Fp(1, 101));
    Jet<Rational> ja = Jet<Rational>(a + Rational(7)) + Jet<Rational>::infinitesimal(0, b) +
                       Jet<Rational>::infinitesimal(1, c) + Jet<Rational>::infinitesimal(0, a) *
                                                                Jet<Rational>::infinitesimal(1, b);
    Jet<Rational> jb = Jet<Rational>(c) + Jet<Rational>::infinitesimal(1, a);
    Jet<Rational> jc = Jet<Rational>(b) + Jet<Rational>::infinitesimal(2, c);
    CHECK((ja * jb) * jc == ja * (jb * jc));
    CHECK(ja * (jb + jc) == ja * jb + ja * jc);
    CHECK(ja * ja.inverse() == Jet<Rational>(1));
  }
}

TEST_CASE("jets are nilpotent in each infinitesimal") {
  auto e0 = Jet<Rational>::infinitesimal(0);
  CHECK((e0 * e0).is_zero());
  auto j = Jet<Rational>(Rational(2)) + e0 * Jet<Rational>(Rational(3));
  CHECK(j.derivative(0) == Jet<Rational>(Rational(3)));
}
