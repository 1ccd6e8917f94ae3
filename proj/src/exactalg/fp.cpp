#include "shc/exactalg/fp.hpp"

#include <gmpxx.h>

#include <ostream>

namespace shc {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

long reduce(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  return r < 0 ? r + static_cast<long>(p) : r;
}

}  // namespace

Fp::Fp(long value, std::uint32_t p) : modulus_(p) {
  if (p < 2 || p >= kMaxModulus) {
    throw Error("prime field modulus out of range: " + std::to_string(p));
  }
  value_ = reduce(value, p);
}

std::uint32_t Fp::common(const Fp& a, const Fp& b) {
  if (a.modulus_ != 0 && b.modulus_ != 0 && a.modulus_ != b.modulus_) {
    throw ModulusMismatch("F_" + std::to_string(a.modulus_) + " vs F_" + std::to_string(b.modulus_));
  }
  return a.modulus_ != 0 ? a.modulus_ : b.modulus_;
}

Fp& Fp::operator+=(const Fp& o) {
  std::uint32_t p = common(*this, o);
  if (p == 0) {
    value_ += o.value_;
  } else {
    *this = Fp(reduce(value_, p) + reduce(o.value_, p), p);
  }
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  std::uint32_t p = common(*this, o);
  if (p == 0) {
    value_ -= o.value_;
  } else {
    *this = Fp(reduce(value_, p) - reduce(o.value_, p), p);
  }
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  std::uint32_t p = common(*this, o);
  if (p == 0) {
    value_ *= o.value_;
  } else {
    *this = Fp(reduce(value_, p) * reduce(o.value_, p), p);
  }
  return *this;
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this;
  Fp acc = bound() ? Fp(1, modulus_) : Fp(1);
  while (e > 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

Fp Fp::inverse() const {
  if (!bound()) {
    if (value_ == 1 || value_ == -1) return *this;
    throw UnsupportedScalar("inverse of an unbound F_p literal");
  }
  if (value_ == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(modulus_));
  return pow(modulus_ - 2);
}

Fp Fp::inverse_against(const Fp& other) const {
  std::uint32_t p = common(*this, other);
  if (p == 0) return inverse();
  return bind(p).inverse();
}

bool operator==(const Fp& a, const Fp& b) {
  std::uint32_t p = Fp::common(a, b);
  if (p == 0) return a.value_ == b.value_;
  return reduce(a.value_, p) == reduce(b.value_, p);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.to_string(); }

Fp to_fp(const Rational& r, std::uint32_t p) {
  mpz_class num = r.raw().get_num() % p;
  mpz_class den = r.raw().get_den() % p;
  if (den == 0) throw DivisionByZero("denominator divisible by " + std::to_string(p));
  return Fp(num.get_si(), p) / Fp(den.get_si(), p);
}

}  // namespace shc
