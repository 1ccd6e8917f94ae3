#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "shc/exactalg/errors.hpp"
#include "shc/exactalg/rational.hpp"

namespace shc {

bool is_prime(std::uint32_t n);

// Element of F_p with p < 2^16. A modulus of 0 marks an integer literal that
// has not met a field element yet; it binds to the modulus of the first
// bound operand it is combined with. Default construction gives such a zero.
class Fp {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 16;

  Fp() = default;
  Fp(long literal) : value_(literal) {}  // NOLINT(google-explicit-constructor)
  Fp(int literal) : value_(literal) {}   // NOLINT(google-explicit-constructor)
  Fp(long value, std::uint32_t p);

  std::uint32_t modulus() const { return modulus_; }
  bool bound() const { return modulus_ != 0; }
  // Representative in [0, p) once bound, otherwise the literal.
  long value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;
  Fp bind(std::uint32_t p) const { return bound() ? *this : Fp(value_, p); }

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o) { return *this *= o.inverse_against(*this); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend Fp operator-(const Fp& a) { return Fp() - a; }
  friend bool operator==(const Fp& a, const Fp& b);

  std::string to_string() const { return std::to_string(value_); }

 private:
  static std::uint32_t common(const Fp& a, const Fp& b);
  Fp inverse_against(const Fp& other) const;

  long value_ = 0;
  std::uint32_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

// Image of a rational in F_p; throws DivisionByZero when p divides the denominator.
Fp to_fp(const Rational& r, std::uint32_t p);

}  // namespace shc
