#include "shc/liecore/sampling.hpp"

namespace shc {

namespace {

// Scalar source for one field kind.
struct RationalSource {
  std::mt19937_64& rng;
  Rational one() const { return Rational(1); }
  Rational any() { return random_small_rational(rng); }
  Rational nonzero() {
    Rational r;
    do { r = random_small_rational(rng); } while (r.is_zero());
    return r;
  }
  Rational lift(const Rational& r) const { return r; }
};

struct FpSource {
  std::mt19937_64& rng;
  std::uint32_t p;
  Fp one() const { return Fp(1, p); }
  Fp any() { return Fp(static_cast<long>(rng() % p), p); }
  Fp nonzero() { return Fp(static_cast<long>(1 + rng() % (p - 1)), p); }
  Fp lift(const Rational& r) const { return to_fp(r, p); }
};

template <typename T, typename Source>
Matrix<T> elementary_product(std::size_t n, Source& src, std::mt19937_64& rng) {
  Matrix<T> g = Matrix<T>::identity(n, src.one());
  if (n < 2) return g;
  for (std::size_t step = 0; step < 3 * n; ++step) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) j = (i + 1) % n;
    Matrix<T> e = Matrix<T>::identity(n, src.one());
    e(i, j) = src.any();
    g = g * e;
  }
  return g;
}

template <typename T, typename Source>
std::vector<Matrix<T>> sample_impl(const MatrixGroup& g, std::size_t count, Source& src,
                                   std::mt19937_64& rng) {
  std::vector<Matrix<T>> out;
  out.reserve(count);
  std::size_t guard = 0;
  while (out.size() < count) {
    if (++guard > 1000 * count + 1000) throw FamilyFieldIncompatible("could not sample " + g.name());
    switch (g.family()) {
      case GroupFamily::SpecialLinear:
        out.push_back(elementary_product<T>(g.size(), src, rng));
        break;
      case GroupFamily::Torus: {
        Matrix<T> d = Matrix<T>::identity(g.size(), src.one());
        for (std::size_t i = 0; i < g.size(); ++i) d(i, i) = src.nonzero();
        out.push_back(d);
        break;
      }
      case GroupFamily::SpecialOrthogonal:
      case GroupFamily::Symplectic: {
        Vec<T> c(g.dim());
        for (auto& x : c) x = src.any();
        Matrix<T> a = g.lie_matrix(c);
        Matrix<T> id = Matrix<T>::identity(g.size(), src.one());
        Matrix<T> plus = id + a;
        if (is_zero(determinant(plus))) break;  // singular I + A: skip
        out.push_back((id - a) * inverse(plus));
        break;
      }
      case GroupFamily::Product: {
        Matrix<T> big = Matrix<T>::identity(g.size(), src.one());
        for (const auto& f : g.factors()) {
          std::mt19937_64 sub(rng());
          Source child{sub};
          if constexpr (std::is_same_v<Source, FpSource>) child.p = src.p;
          auto pts = sample_impl<T>(*f.group, 1, child, sub);
          big.set_block(f.offset, f.offset, pts.front());
        }
        out.push_back(big);
        break;
      }
    }
  }
  return out;
}

}  // namespace

Rational random_small_rational(std::mt19937_64& rng, long span, long max_den) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

Vec<Rational> random_lie_coords(const MatrixGroup& g, std::mt19937_64& rng) {
  Vec<Rational> c(g.dim());
  for (auto& x : c) x = random_small_rational(rng);
  return c;
}

std::vector<Matrix<Rational>> sample_points(const MatrixGroup& g, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw Error("sample count must be at least 1");
  std::mt19937_64 rng(seed);
  RationalSource src{rng};
  return sample_impl<Rational>(g, count, src, rng);
}

std::vector<Matrix<Fp>> sample_points(const MatrixGroup& g, std::uint32_t p, std::size_t count,
                                      std::uint64_t seed) {
  if (count == 0) throw Error("sample count must be at least 1");
  if (!is_prime(p) || p >= Fp::kMaxModulus) throw Error("modulus must be a prime below 65536");
  if (p == 2 && (g.family() == GroupFamily::SpecialOrthogonal || g.family() == GroupFamily::Symplectic)) {
    throw FamilyFieldIncompatible("Cayley transform needs odd characteristic for " + g.name());
  }
  std::mt19937_64 rng(seed);
  FpSource src{rng, p};
  return sample_impl<Fp>(g, count, src, rng);
}

}  // namespace shc
