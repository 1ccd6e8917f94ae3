#pragma once

#include "shc/shiftsym/complex.hpp"

namespace shc {

// n-shifted 2-form at a point: a graded pairing of degree -n on the tangent
// complex. Its induced map T -> L[n] sends a to h(a, -).
template <typename F>
struct ShiftedTwoForm {
  Complex<F> tangent;
  GradedPairing<F> pairing;
  int shift = 0;
  std::string name;
};

// L[n] with L^j = (T^{-j})^*; the differential in degree k is
// (-1)^{k+1} times the transpose of d_T in degree -n-k-1.
template <typename F>
Complex<F> shifted_dual(const Complex<F>& t, int n) {
  if (t.empty()) return Complex<F>();
  auto dim = [&](int k) { return t.dim(-n - k); };
  auto diff = [&](int k) { return with_sign(t.diff(-n - k - 1).transpose(), k + 1); };
  return make_complex<F>(-n - t.hi(), -n - t.lo(), dim, diff);
}

template <typename F>
ChainMap<F> induced_map(const ShiftedTwoForm<F>& w) {
  ChainMap<F> phi(w.tangent, shifted_dual(w.tangent, w.shift));
  for (int k = w.tangent.lo(); k <= w.tangent.hi(); ++k) phi.set(k, w.pairing.block(k, w.tangent).transpose());
  return phi;
}

template <typename F>
bool is_closed(const ShiftedTwoForm<F>& w) {
  return differential(w.pairing, w.tangent).is_zero_on(w.tangent);
}

// Degree-mismatched pairings are representable and simply fail here.
template <typename F>
bool nondegenerate(const ShiftedTwoForm<F>& w) {
  if (w.pairing.degree() != -w.shift) return w.tangent.acyclic();
  ChainMap<F> phi = induced_map(w);
  if (!phi.commutes()) throw NotAChainMap("pairing is not compatible with the differential: " + w.name);
  return cone(phi).acyclic();
}

template <typename F>
ShiftedTwoForm<F> opposite(const ShiftedTwoForm<F>& w) {
  return {w.tangent, w.pairing.negated(w.tangent), w.shift, w.name + "^op"};
}

template <typename F>
ShiftedTwoForm<F> product(const ShiftedTwoForm<F>& a, const ShiftedTwoForm<F>& b) {
  if (a.shift != b.shift) throw DimensionMismatch("product of forms with different shifts");
  return {direct_sum(a.tangent, b.tangent), direct_sum(a.pairing, a.tangent, b.pairing, b.tangent), a.shift,
          a.name + " x " + b.name};
}

template <typename F>
bool same_form(const ShiftedTwoForm<F>& a, const ShiftedTwoForm<F>& b) {
  return a.shift == b.shift && a.tangent == b.tangent && a.pairing.equals(b.pairing, a.tangent);
}

// Transport along invertible per-degree basis changes p[k] (new -> old coordinates).
template <typename F>
ShiftedTwoForm<F> change_basis(const ShiftedTwoForm<F>& w, const std::map<int, Matrix<F>>& p) {
  const Complex<F>& t = w.tangent;
  auto mat = [&](int k) {
    auto it = p.find(k);
    return it != p.end() ? it->second : Matrix<F>::identity(t.dim(k));
  };
  Complex<F> nt = make_complex<F>(
      t.lo(), t.hi(), [&](int k) { return t.dim(k); },
      [&](int k) { return inverse(mat(k + 1)) * t.diff(k) * mat(k); });
  GradedPairing<F> np(w.pairing.degree());
  int m = w.pairing.degree();
  for (int k = t.lo(); k <= t.hi(); ++k) np.set(k, mat(k).transpose() * w.pairing.block(k, t) * mat(m - k));
  return {nt, np, w.shift, w.name};
}

}  // namespace shc
