#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "shc/liecore/matrix_group.hpp"

namespace shc {

// Small random rational a/b with |a| <= span, 1 <= b <= max_den.
Rational random_small_rational(std::mt19937_64& rng, long span = 3, long max_den = 3);

Vec<Rational> random_lie_coords(const MatrixGroup& g, std::mt19937_64& rng);

// Exact rational points: products of elementary matrices for SL, Cayley
// transforms for SO and Sp, random diagonals for tori. Deterministic in seed.
std::vector<Matrix<Rational>> sample_points(const MatrixGroup& g, std::size_t count, std::uint64_t seed);

// The same constructions over F_p.
std::vector<Matrix<Fp>> sample_points(const MatrixGroup& g, std::uint32_t p, std::size_t count,
                                      std::uint64_t seed);

}  // namespace shc
