#pragma once

#include "shc/shiftsym/shifted_form.hpp"

namespace shc {

class TargetMismatch : public Error {
 public:
  using Error::Error;
};

// Linear model of a Lagrangian f: L -> Y at a point. The witness h has
// degree 1 - n and satisfies dh = -f^* omega_Y.
template <typename F>
struct LinearLagrangian {
  Complex<F> source;
  ShiftedTwoForm<F> target;
  ChainMap<F> map;
  GradedPairing<F> witness;
};

template <typename F>
bool witness_holds(const LinearLagrangian<F>& l) {
  if (!l.map.commutes()) return false;
  GradedPairing<F> lhs = differential(l.witness, l.source);
  GradedPairing<F> rhs = pullback(l.target.pairing, l.map).negated(l.source);
  return lhs.equals(rhs, l.source);
}

// psi: cone(f) -> L_L[n], psi(a, y)(b) = -h(a, b) + omega(y, f b).
template <typename F>
ChainMap<F> lagrangian_map(const LinearLagrangian<F>& l) {
  const Complex<F>& s = l.source;
  const Complex<F>& y = l.target.tangent;
  int n = l.target.shift;
  Complex<F> c = cone(l.map);
  ChainMap<F> psi(c, shifted_dual(s, n));
  for (int k = c.lo(); k <= c.hi(); ++k) {
    int j = -n - k;
    Matrix<F> m(s.dim(j), c.dim(k));
    m.set_block(0, 0, -l.witness.block(k + 1, s).transpose());
    m.set_block(0, s.dim(k + 1), (l.target.pairing.block(k, y) * l.map.at(j)).transpose());
    psi.set(k, std::move(m));
  }
  return psi;
}

// Nondegeneracy: psi is a quasi-isomorphism.
template <typename F>
bool is_lagrangian(const LinearLagrangian<F>& l) {
  ChainMap<F> psi = lagrangian_map(l);
  if (!psi.commutes()) throw NotAChainMap("witness does not close the pulled-back form");
  return cone(psi).acyclic();
}

// L -> X x Y^op.
template <typename F>
struct LinearCorrespondence {
  ShiftedTwoForm<F> left;
  ShiftedTwoForm<F> right;
  LinearLagrangian<F> lagrangian;
};

// Assemble from the two legs; f_left and f_right are per-degree maps from source.
template <typename F>
LinearCorrespondence<F> correspondence(ShiftedTwoForm<F> left, ShiftedTwoForm<F> right, Complex<F> source,
                                       const ChainMap<F>& f_left, const ChainMap<F>& f_right,
                                       GradedPairing<F> witness) {
  ShiftedTwoForm<F> target = product(left, opposite(right));
  ChainMap<F> f(source, target.tangent);
  for (int k = std::min(source.lo(), target.tangent.lo()); k <= std::max(source.hi(), target.tangent.hi()); ++k) {
    Matrix<F> m(target.tangent.dim(k), source.dim(k));
    m.set_block(0, 0, f_left.at(k));
    m.set_block(left.tangent.dim(k), 0, f_right.at(k));
    f.set(k, std::move(m));
  }
  LinearLagrangian<F> l{source, target, f, std::move(witness)};
  return {std::move(left), std::move(right), std::move(l)};
}

template <typename F>
ChainMap<F> identity_map(const Complex<F>& c) {
  ChainMap<F> id(c, c);
  for (int k = c.lo(); k <= c.hi(); ++k) id.set(k, Matrix<F>::identity(c.dim(k)));
  return id;
}

template <typename F>
ChainMap<F> leg(const LinearCorrespondence<F>& c, bool left_leg) {
  const auto& f = c.lagrangian.map;
  const Complex<F>& s = c.lagrangian.source;
  const Complex<F>& t = left_leg ? c.left.tangent : c.right.tangent;
  ChainMap<F> out(s, t);
  for (int k = s.lo(); k <= s.hi(); ++k) {
    std::size_t off = left_leg ? 0 : c.left.tangent.dim(k);
    out.set(k, f.at(k).block(off, 0, t.dim(k), s.dim(k)));
  }
  return out;
}

template <typename F>
ChainMap<F> zero_map(const Complex<F>& s, const Complex<F>& t) {
  return ChainMap<F>(s, t);
}

// A Lagrangian L -> Y read as a correspondence from Y to the point, or from
// the point to Y (in which case Y enters with the opposite form).
template <typename F>
LinearCorrespondence<F> to_point(const LinearLagrangian<F>& l) {
  ShiftedTwoForm<F> pt{Complex<F>(), GradedPairing<F>(-l.target.shift), l.target.shift, "pt"};
  return correspondence(l.target, pt, l.source, l.map, zero_map(l.source, pt.tangent), l.witness);
}
template <typename F>
LinearCorrespondence<F> from_point(const LinearLagrangian<F>& l) {
  ShiftedTwoForm<F> pt{Complex<F>(), GradedPairing<F>(-l.target.shift), l.target.shift, "pt"};
  return correspondence(pt, l.target, l.source, zero_map(l.source, pt.tangent), l.map,
                        l.witness.negated(l.source));
}

// The diagonal Y -> Y x Y^op with zero witness.
template <typename F>
LinearCorrespondence<F> diagonal(const ShiftedTwoForm<F>& y) {
  ChainMap<F> id = identity_map(y.tangent);
  return correspondence(y, y, y.tangent, id, id, GradedPairing<F>(1 - y.shift));
}

// L1 x_Y L2 -> X x Z^op. The apex is the homotopy fiber product
// P^k = L1^k + L2^k + Y^{k-1} with d(a1, a2, y) = (da1, da2, g1 a1 - g2 a2 - dy),
// and the witness is h1 + h2 - kappa with
// kappa(p, q) = omega(y(p), g1 q) + (-1)^{|p|} omega(g2 p, y(q)).
template <typename F>
LinearCorrespondence<F> compose(const LinearCorrespondence<F>& c1, const LinearCorrespondence<F>& c2) {
  if (!same_form(c1.right, c2.left)) throw TargetMismatch("middle targets differ: " + c1.right.name + " vs " + c2.left.name);
  const Complex<F>& l1 = c1.lagrangian.source;
  const Complex<F>& l2 = c2.lagrangian.source;
  const Complex<F>& y = c1.right.tangent;
  ChainMap<F> g1 = leg(c1, false), g2 = leg(c2, true);
  ChainMap<F> fx = leg(c1, true), fz = leg(c2, false);
  int n = c1.right.shift;

  auto lo = std::min({l1.lo(), l2.lo(), y.lo() + 1});
  auto hi = std::max({l1.hi(), l2.hi(), y.hi() + 1});
  auto dim = [&](int k) { return l1.dim(k) + l2.dim(k) + y.dim(k - 1); };
  auto diff = [&](int k) {
    Matrix<F> d(dim(k + 1), dim(k));
    d.set_block(0, 0, l1.diff(k));
    d.set_block(l1.dim(k + 1), l1.dim(k), l2.diff(k));
    std::size_t r = l1.dim(k + 1) + l2.dim(k + 1);
    d.set_block(r, 0, g1.at(k));
    d.set_block(r, l1.dim(k), -g2.at(k));
    d.set_block(r, l1.dim(k) + l2.dim(k), -y.diff(k - 1));
    return d;
  };
  Complex<F> p = make_complex<F>(lo, hi, dim, diff);

  auto proj1 = [&](int k) {
    Matrix<F> m(l1.dim(k), p.dim(k));
    m.set_block(0, 0, Matrix<F>::identity(l1.dim(k)));
    return m;
  };
  auto proj2 = [&](int k) {
    Matrix<F> m(l2.dim(k), p.dim(k));
    m.set_block(0, l1.dim(k), Matrix<F>::identity(l2.dim(k)));
    return m;
  };
  auto projy = [&](int k) {  // P^k -> Y^{k-1}
    Matrix<F> m(y.dim(k - 1), p.dim(k));
    m.set_block(0, l1.dim(k) + l2.dim(k), Matrix<F>::identity(y.dim(k - 1)));
    return m;
  };

  ChainMap<F> px(p, c1.left.tangent), pz(p, c2.right.tangent);
  for (int k = p.lo(); k <= p.hi(); ++k) {
    px.set(k, fx.at(k) * proj1(k));
    pz.set(k, fz.at(k) * proj2(k));
  }

  int m = 1 - n;
  const GradedPairing<F>& w = c1.right.pairing;
  GradedPairing<F> h(m);
  for (int k = p.lo(); k <= p.hi(); ++k) {
    int j = m - k;
    Matrix<F> blk = proj1(k).transpose() * c1.lagrangian.witness.block(k, l1) * proj1(j);
    blk += proj2(k).transpose() * c2.lagrangian.witness.block(k, l2) * proj2(j);
    Matrix<F> kappa = projy(k).transpose() * w.block(k - 1, y) * g1.at(j) * proj1(j);
    kappa += with_sign((g2.at(k) * proj2(k)).transpose() * w.block(k, y) * projy(j), k);
    blk -= kappa;
    h.set(k, std::move(blk));
  }
  return correspondence(c1.left, c2.right, p, px, pz, std::move(h));
}

}  // namespace shc
