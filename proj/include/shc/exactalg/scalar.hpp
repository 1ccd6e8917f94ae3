#pragma once

#include <type_traits>
#include <vector>

#include "shc/exactalg/fp.hpp"
#include "shc/exactalg/jet.hpp"
#include "shc/exactalg/rational.hpp"

namespace shc {

template <typename T>
struct is_jet : std::false_type {};
template <typename T>
struct is_jet<Jet<T>> : std::true_type {};
template <typename T>
struct is_jet<Dual<T>> : std::true_type {};
template <typename T>
inline constexpr bool is_jet_v = is_jet<T>::value;

template <typename T>
inline constexpr bool is_field_v = std::is_same_v<T, Rational> || std::is_same_v<T, Fp>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }
template <typename T>
bool is_zero(const Jet<T>& x) { return x.is_zero(); }
template <typename T>
bool is_zero(const Dual<T>& x) { return x.is_zero(); }

// Invertibility test used for pivoting.
inline bool is_unit(const Rational& x) { return !x.is_zero(); }
inline bool is_unit(const Fp& x) { return !x.is_zero(); }
template <typename T>
bool is_unit(const Jet<T>& x) { return x.is_unit(); }
template <typename T>
bool is_unit(const Dual<T>& x) { return !is_zero(x.value); }

// Lift a rational constant into the scalar kind of `like`.
inline Rational scalar_from(const Rational& r, const Rational&) { return r; }
inline Fp scalar_from(const Rational& r, const Fp& like) {
  if (!like.bound()) {
    if (!r.is_integer()) throw UnsupportedScalar("fractional constant with unbound F_p context");
    return Fp(std::stol(r.numerator()));
  }
  return to_fp(r, like.modulus());
}
template <typename T>
Jet<T> scalar_from(const Rational& r, const Jet<T>& like) {
  return Jet<T>(scalar_from(r, like.value()));
}
template <typename T>
Dual<T> scalar_from(const Rational& r, const Dual<T>& like) {
  return Dual<T>(scalar_from(r, like.value));
}

// A representative element carrying the scalar context (e.g. the modulus)
// of a list; unbound F_p zeros are skipped.
template <typename T>
T scalar_context(const std::vector<T>& xs) {
  return xs.empty() ? T{} : xs.front();
}
inline Fp scalar_context(const std::vector<Fp>& xs) {
  for (const auto& x : xs) {
    if (x.bound()) return x;
  }
  return Fp{};
}

}  // namespace shc
