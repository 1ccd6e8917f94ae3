#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shc/exactalg/linalg.hpp"

namespace shc {

class NotAComplex : public Error {
 public:
  using Error::Error;
};

class NotAChainMap : public Error {
 public:
  using Error::Error;
};

template <typename F>
Matrix<F> with_sign(Matrix<F> m, int k) {
  return (k % 2 == 0) ? m : -m;
}

// Bounded cochain complex of finite-dimensional spaces. Degree k has
// dimension dim(k); diff(k) maps degree k to k + 1.
template <typename F>
class Complex {
 public:
  Complex() = default;

  // dims[i] is the dimension in degree lo + i; diffs[i] maps lo + i -> lo + i + 1.
  Complex(int lo, std::vector<std::size_t> dims, std::vector<Matrix<F>> diffs)
      : lo_(lo), dims_(std::move(dims)) {
    if (!dims_.empty() && diffs.size() + 1 != dims_.size())
      throw DimensionMismatch("complex needs one differential between consecutive degrees");
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      int k = lo_ + static_cast<int>(i);
      if (diffs[i].rows() != dim(k + 1) || diffs[i].cols() != dim(k))
        throw DimensionMismatch("differential in degree " + std::to_string(k) + " has shape " + diffs[i].shape());
      diffs_[k] = std::move(diffs[i]);
    }
    for (int k = lo_; k + 1 <= hi(); ++k)
      if (!(diff(k + 1) * diff(k)).is_zero()) throw NotAComplex("d o d != 0 in degree " + std::to_string(k));
  }

  // A single space in degree k.
  static Complex concentrated(int k, std::size_t n) { return Complex(k, {n}, {}); }

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  bool empty() const { return dims_.empty(); }

  std::size_t dim(int k) const {
    if (k < lo_ || k > hi()) return 0;
    return dims_[static_cast<std::size_t>(k - lo_)];
  }
  Matrix<F> diff(int k) const {
    auto it = diffs_.find(k);
    if (it != diffs_.end()) return it->second;
    return Matrix<F>(dim(k + 1), dim(k));
  }

  std::size_t total_dim() const {
    std::size_t s = 0;
    for (auto d : dims_) s += d;
    return s;
  }

  std::size_t rank_of_diff(int k) const {
    Matrix<F> d = diff(k);
    return d.rows() == 0 || d.cols() == 0 ? 0 : rank(d);
  }
  std::size_t cohomology_dim(int k) const { return dim(k) - rank_of_diff(k) - rank_of_diff(k - 1); }

  bool acyclic() const {
    for (int k = lo_; k <= hi(); ++k)
      if (cohomology_dim(k) != 0) return false;
    return true;
  }

  long euler_characteristic() const {
    long e = 0;
    for (int k = lo_; k <= hi(); ++k) e += (k % 2 == 0 ? 1 : -1) * static_cast<long>(dim(k));
    return e;
  }

  friend bool operator==(const Complex& a, const Complex& b) {
    int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    for (int k = lo; k <= hi; ++k) {
      if (a.dim(k) != b.dim(k)) return false;
      if (!(a.diff(k) == b.diff(k))) return false;
    }
    return true;
  }

 private:
  int lo_ = 0;
  std::vector<std::size_t> dims_;
  std::map<int, Matrix<F>> diffs_;
};

// Build a complex on [lo, hi] from per-degree dimension and differential callbacks.
template <typename F, typename Dim, typename Diff>
Complex<F> make_complex(int lo, int hi, Dim&& dim, Diff&& diff) {
  if (hi < lo) return Complex<F>();
  std::vector<std::size_t> dims;
  std::vector<Matrix<F>> diffs;
  for (int k = lo; k <= hi; ++k) dims.push_back(dim(k));
  for (int k = lo; k < hi; ++k) diffs.push_back(diff(k));
  return Complex<F>(lo, std::move(dims), std::move(diffs));
}

// Degree-0 map between complexes, one matrix per degree.
template <typename F>
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(Complex<F> source, Complex<F> target) : source_(std::move(source)), target_(std::move(target)) {}

  const Complex<F>& source() const { return source_; }
  const Complex<F>& target() const { return target_; }

  void set(int k, Matrix<F> m) {
    if (m.rows() != target_.dim(k) || m.cols() != source_.dim(k))
      throw DimensionMismatch("chain map component in degree " + std::to_string(k) + " has shape " + m.shape());
    comps_[k] = std::move(m);
  }
  Matrix<F> at(int k) const {
    auto it = comps_.find(k);
    if (it != comps_.end()) return it->second;
    return Matrix<F>(target_.dim(k), source_.dim(k));
  }

  int lo() const { return std::min(source_.lo(), target_.lo()); }
  int hi() const { return std::max(source_.hi(), target_.hi()); }

  bool commutes() const {
    for (int k = lo() - 1; k <= hi(); ++k)
      if (!(at(k + 1) * source_.diff(k) == target_.diff(k) * at(k))) return false;
    return true;
  }

 private:
  Complex<F> source_, target_;
  std::map<int, Matrix<F>> comps_;
};

// cone(f)^k = A^{k+1} + C^k with d(a, c) = (-da, f a + dc).
template <typename F>
Complex<F> cone(const ChainMap<F>& f) {
  const Complex<F>& a = f.source();
  const Complex<F>& c = f.target();
  int lo = std::min(a.empty() ? c.lo() : a.lo() - 1, c.empty() ? a.lo() - 1 : c.lo());
  int hi = std::max(a.empty() ? c.hi() : a.hi() - 1, c.empty() ? a.hi() - 1 : c.hi());
  auto dim = [&](int k) { return a.dim(k + 1) + c.dim(k); };
  auto diff = [&](int k) {
    Matrix<F> d(dim(k + 1), dim(k));
    d.set_block(0, 0, -a.diff(k + 1));
    d.set_block(a.dim(k + 2), 0, f.at(k + 1));
    d.set_block(a.dim(k + 2), a.dim(k + 1), c.diff(k));
    return d;
  };
  return make_complex<F>(lo, hi, dim, diff);
}

// A chain map is a quasi-isomorphism iff its cone is acyclic.
template <typename F>
bool quasi_isomorphism(const ChainMap<F>& f) {
  if (!f.commutes()) throw NotAChainMap("map does not commute with differentials");
  return cone(f).acyclic();
}

template <typename F>
Complex<F> direct_sum(const Complex<F>& a, const Complex<F>& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  auto dim = [&](int k) { return a.dim(k) + b.dim(k); };
  auto diff = [&](int k) {
    Matrix<F> d(dim(k + 1), dim(k));
    d.set_block(0, 0, a.diff(k));
    d.set_block(a.dim(k + 1), a.dim(k), b.diff(k));
    return d;
  };
  return make_complex<F>(lo, hi, dim, diff);
}

// Graded bilinear form h(a, b) supported on |a| + |b| = degree.
// block(k) is the dim(k) x dim(degree - k) matrix of h on that pair.
template <typename F>
class GradedPairing {
 public:
  GradedPairing() = default;
  explicit GradedPairing(int degree) : degree_(degree) {}

  int degree() const { return degree_; }

  void set(int k, Matrix<F> m) { blocks_[k] = std::move(m); }
  Matrix<F> block(int k, const Complex<F>& c) const {
    auto it = blocks_.find(k);
    if (it != blocks_.end()) {
      if (it->second.rows() != c.dim(k) || it->second.cols() != c.dim(degree_ - k))
        throw DimensionMismatch("pairing block does not fit the complex");
      return it->second;
    }
    return Matrix<F>(c.dim(k), c.dim(degree_ - k));
  }

  bool equals(const GradedPairing& o, const Complex<F>& c) const {
    if (degree_ != o.degree_) return is_zero_on(c) && o.is_zero_on(c);
    for (int k = c.lo(); k <= c.hi(); ++k)
      if (!(block(k, c) == o.block(k, c))) return false;
    return true;
  }
  bool is_zero_on(const Complex<F>& c) const {
    for (int k = c.lo(); k <= c.hi(); ++k)
      if (!block(k, c).is_zero()) return false;
    return true;
  }

  // h(a, b) = -(-1)^{|a||b|} h(b, a).
  bool graded_antisymmetric(const Complex<F>& c) const {
    for (int k = c.lo(); k <= c.hi(); ++k) {
      int j = degree_ - k;
      if (!(block(k, c) == with_sign(block(j, c).transpose(), k * j + 1))) return false;
    }
    return true;
  }

  GradedPairing scaled(const F& s, const Complex<F>& c) const {
    GradedPairing out(degree_);
    for (int k = c.lo(); k <= c.hi(); ++k) out.set(k, block(k, c) * s);
    return out;
  }
  GradedPairing negated(const Complex<F>& c) const {
    GradedPairing out(degree_);
    for (int k = c.lo(); k <= c.hi(); ++k) out.set(k, -block(k, c));
    return out;
  }

 private:
  int degree_ = 0;
  std::map<int, Matrix<F>> blocks_;
};

template <typename F>
GradedPairing<F> add(const GradedPairing<F>& a, const GradedPairing<F>& b, const Complex<F>& c) {
  if (a.degree() != b.degree()) throw DimensionMismatch("adding pairings of different degrees");
  GradedPairing<F> out(a.degree());
  for (int k = c.lo(); k <= c.hi(); ++k) out.set(k, a.block(k, c) + b.block(k, c));
  return out;
}

// (dh)(a, b) = h(da, b) + (-1)^{|a|} h(a, db); degree drops by one.
template <typename F>
GradedPairing<F> differential(const GradedPairing<F>& h, const Complex<F>& c) {
  int m = h.degree();
  GradedPairing<F> out(m - 1);
  for (int k = c.lo(); k <= c.hi(); ++k) {
    Matrix<F> blk = c.diff(k).transpose() * h.block(k + 1, c);
    blk += with_sign(h.block(k, c) * c.diff(m - 1 - k), k);
    out.set(k, std::move(blk));
  }
  return out;
}

template <typename F>
GradedPairing<F> pullback(const GradedPairing<F>& b, const ChainMap<F>& f) {
  int m = b.degree();
  const Complex<F>& s = f.source();
  GradedPairing<F> out(m);
  for (int k = s.lo(); k <= s.hi(); ++k)
    out.set(k, f.at(k).transpose() * b.block(k, f.target()) * f.at(m - k));
  return out;
}

template <typename F>
GradedPairing<F> direct_sum(const GradedPairing<F>& a, const Complex<F>& ca, const GradedPairing<F>& b,
                            const Complex<F>& cb) {
  if (a.degree() != b.degree()) throw DimensionMismatch("direct sum of pairings of different degrees");
  int m = a.degree();
  Complex<F> sum = direct_sum(ca, cb);
  GradedPairing<F> out(m);
  for (int k = sum.lo(); k <= sum.hi(); ++k) {
    Matrix<F> blk(sum.dim(k), sum.dim(m - k));
    blk.set_block(0, 0, a.block(k, ca));
    blk.set_block(ca.dim(k), ca.dim(m - k), b.block(k, cb));
    out.set(k, std::move(blk));
  }
  return out;
}

}  // namespace shc
