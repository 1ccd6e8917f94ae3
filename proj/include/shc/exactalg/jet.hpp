#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "shc/exactalg/errors.hpp"

namespace shc {

// First-order jet a + b·ε with ε² = 0.
template <typename T>
struct Dual {
  T value{};
  T tangent{};

  Dual() = default;
  Dual(T v) : value(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Dual(int v) : value(T(v)) {}         // NOLINT(google-explicit-constructor)
  Dual(T v, T t) : value(std::move(v)), tangent(std::move(t)) {}

  Dual& operator+=(const Dual& o) { value += o.value; tangent += o.tangent; return *this; }
  Dual& operator-=(const Dual& o) { value -= o.value; tangent -= o.tangent; return *this; }
  Dual& operator*=(const Dual& o) {
    tangent = value * o.tangent + tangent * o.value;
    value *= o.value;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    T inv = T(1) / o.value;
    T v = value * inv;
    tangent = (tangent - v * o.tangent) * inv;
    value = v;
    return *this;
  }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
  friend Dual operator-(const Dual& a) { return Dual(-a.value, -a.tangent); }
  friend bool operator==(const Dual& a, const Dual& b) {
    return a.value == b.value && a.tangent == b.tangent;
  }
  bool is_zero() const { return value == T(0) && tangent == T(0); }
};

// Truncated polynomial in independent infinitesimals ε_0, ε_1, ... with
// ε_i² = 0. Terms are keyed by the bit mask of the infinitesimals they carry,
// stored sorted by mask with zero coefficients dropped.
template <typename T>
class Jet {
 public:
  using Mask = std::uint32_t;
  static constexpr int kMaxInfinitesimals = 24;

  Jet() = default;
  Jet(T v) { if (!(v == T(0))) terms_.emplace_back(0u, std::move(v)); }  // NOLINT
  Jet(int v) : Jet(T(v)) {}  // NOLINT(google-explicit-constructor)

  static Jet infinitesimal(int index, T coeff = T(1)) {
    check_index(index);
    Jet j;
    if (!(coeff == T(0))) j.terms_.emplace_back(Mask{1u} << index, std::move(coeff));
    return j;
  }

  T value() const { return part(0u); }
  T part(Mask m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const auto& t, Mask k) { return t.first < k; });
    return (it != terms_.end() && it->first == m) ? it->second : T(0);
  }
  const std::vector<std::pair<Mask, T>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const { return !(value() == T(0)); }
  // Union of all infinitesimal bits present.
  Mask support() const {
    Mask s = 0;
    for (const auto& t : terms_) s |= t.first;
    return s;
  }

  // Coefficient of ε_index, as a jet in the remaining infinitesimals.
  Jet derivative(int index) const {
    check_index(index);
    Mask bit = Mask{1u} << index;
    Jet out;
    for (const auto& [m, c] : terms_) {
      if (m & bit) out.terms_.emplace_back(m & ~bit, c);
    }
    return out;
  }

  Jet& operator+=(const Jet& o) { merge(o, false); return *this; }
  Jet& operator-=(const Jet& o) { merge(o, true); return *this; }
  Jet& operator*=(const Jet& o) { *this = multiply(*this, o); return *this; }
  Jet& operator/=(const Jet& o) { *this = multiply(*this, o.inverse()); return *this; }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b) { return multiply(a, b); }
  friend Jet operator/(const Jet& a, const Jet& b) { return multiply(a, b.inverse()); }
  friend Jet operator-(const Jet& a) {
    Jet out = a;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }
  friend bool operator==(const Jet& a, const Jet& b) { return a.terms_ == b.terms_; }

  Jet inverse() const {
    T a0 = value();
    if (a0 == T(0)) throw DivisionByZero("inverse of a jet with zero value part");
    T inv0 = T(1) / a0;
    Jet nil = *this - Jet(a0);
    Jet step = nil * Jet(-inv0);
    Jet power(T(1));
    Jet acc(T(1));
    // nil is nilpotent of order at most popcount(support) + 1.
    int bound = __builtin_popcount(nil.support());
    for (int k = 0; k < bound; ++k) {
      power = power * step;
      if (power.is_zero()) break;
      acc += power;
    }
    return acc * Jet(inv0);
  }

 private:
  static void check_index(int index) {
    if (index < 0 || index >= kMaxInfinitesimals) {
      throw Error("infinitesimal index out of range: " + std::to_string(index));
    }
  }

  void merge(const Jet& o, bool negate) {
    std::vector<std::pair<Mask, T>> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        out.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        out.emplace_back(o.terms_[j].first, negate ? -o.terms_[j].second : o.terms_[j].second);
        ++j;
      } else {
        T c = negate ? terms_[i].second - o.terms_[j].second : terms_[i].second + o.terms_[j].second;
        if (!(c == T(0))) out.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  static Jet multiply(const Jet& a, const Jet& b) {
    if (a.terms_.empty() || b.terms_.empty()) return Jet();
    if (a.terms_.size() == 1 && a.terms_[0].first == 0u) return scale(b, a.terms_[0].second);
    if (b.terms_.size() == 1 && b.terms_[0].first == 0u) return scale(a, b.terms_[0].second);
    std::vector<std::pair<Mask, T>> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if ((ma & mb) == 0u) raw.emplace_back(ma | mb, ca * cb);
      }
    }
    std::stable_sort(raw.begin(), raw.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    Jet out;
    for (auto& t : raw) {
      if (!out.terms_.empty() && out.terms_.back().first == t.first) {
        out.terms_.back().second += t.second;
      } else {
        out.terms_.push_back(std::move(t));
      }
    }
    std::erase_if(out.terms_, [](const auto& t) { return t.second == T(0); });
    return out;
  }

  static Jet scale(const Jet& a, const T& c) {
    Jet out;
    if (c == T(0)) return out;
    out.terms_.reserve(a.terms_.size());
    for (const auto& [m, v] : a.terms_) out.terms_.emplace_back(m, v * c);
    return out;
  }

  std::vector<std::pair<Mask, T>> terms_;
};

template <typename T>
std::ostream& operator<<(std::ostream& os, const Jet<T>& j) {
  if (j.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [m, c] : j.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int i = 0; i < Jet<T>::kMaxInfinitesimals; ++i) {
      if (m & (1u << i)) os << "*e" << i;
    }
  }
  return os;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Dual<T>& d) {
  return os << d.value << " + " << d.tangent << "*e";
}

}  // namespace shc
