#pragma once

#include <random>

#include "shc/exactalg/matrix.hpp"
#include "shc/exactalg/rational.hpp"

namespace shc::testing {

inline Rational random_rational(std::mt19937_64& rng, long span = 5, long max_den = 4) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                                      long span = 3) {
  Matrix<Rational> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational(rng, span, 2);
  return m;
}

inline Vec<Rational> random_vec(std::mt19937_64& rng, std::size_t n) {
  Vec<Rational> v(n);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

}  // namespace shc::testing
