#pragma once

#include "shc/charstack/tangent.hpp"
#include "shc/shiftsym/lagrangian.hpp"

namespace shc::chars {

class IncompatibleBoundary : public Error {
 public:
  using Error::Error;
};

// Tangent complex of Loc_G(S^1) at holonomy g (degrees -1, 0, d = 1 - Ad_g)
// with the 1-shifted form omega(x, u) = 1/2 <x, (1 + Ad_g^-1) u>.
template <typename F>
ShiftedTwoForm<F> circle_form(const MatrixLie<F>& lie, const Matrix<F>& g) {
  std::size_t d = lie.dim();
  Matrix<F> ad = lie.ad(g);
  Complex<F> t(-1, {d, d}, {lie.identity() - ad});
  Matrix<F> m = lie.gram() * (lie.identity() + inverse(ad)) * lie.constant(Rational(1, 2));
  GradedPairing<F> w(-1);
  w.set(-1, m);
  w.set(0, -m.transpose());
  return ShiftedTwoForm<F>{t, w, 1, "circle"};
}

template <typename F>
Complex<F> shifted_tangent(const RepTangentComplex<F>& t) {
  const Complex<F>& c = t.complex;
  return Complex<F>(-1, {c.dim(0), c.dim(1), c.dim(2)}, {c.diff(0), c.diff(1)});
}

// Product of the circle forms at the boundary-word holonomies, in boundary order.
template <typename F>
ShiftedTwoForm<F> boundary_form(const MatrixLie<F>& lie, const RepPoint<F>& r) {
  Matrix<F> one = Matrix<F>::identity(lie.n(), lie.one());
  ShiftedTwoForm<F> out{Complex<F>(), GradedPairing<F>(-1), 1, "boundary"};
  for (const auto& bw : r.presentation.boundary) out = product(out, circle_form(lie, eval_word(bw.boundary, r.images, one)));
  return out;
}

// Loc_G(M) -> Loc_G(boundary M) at r, with the surface pairing as witness.
template <typename F>
LinearLagrangian<F> restriction_lagrangian(const MatrixLie<F>& lie, const RepPoint<F>& r) {
  RepTangentComplex<F> t = tangent_complex(lie, r);
  Complex<F> src = shifted_tangent(t);
  ShiftedTwoForm<F> tgt = boundary_form(lie, r);
  std::size_t d = lie.dim(), b = r.presentation.boundary.size(), g = r.images.size();
  ChainMap<F> f(src, tgt.tangent);
  Matrix<F> f0(d * b, d * g), fm(d * b, d);
  for (std::size_t j = 0; j < b; ++j) {
    fm.set_block(d * j, 0, lie.identity());
    f0.set_block(d * j, 0, fox_matrix(lie, r.presentation.boundary[j].boundary, r.images));
  }
  f.set(-1, fm);
  f.set(0, f0);
  GradedPairing<F> h(0);
  h.set(0, surface_pairing(lie, r));
  std::size_t nr = r.presentation.relators.size();
  if (nr > 0) {
    Matrix<F> x(d, d * nr);
    for (std::size_t k = 0; k < nr; ++k) x.set_block(0, d * k, lie.gram());
    h.set(-1, x);
    h.set(1, x.transpose());
  }
  return LinearLagrangian<F>{src, tgt, f, h};
}

// [O/G] -> [G/G] at g: tangent g -> T_g O (pivot columns of 1 - Ad_g), witness
// the class form 1/2 <x, (Ad_g - Ad_g^-1) y> on u = (1 - Ad_g) x, v = (1 - Ad_g) y.
template <typename F>
LinearLagrangian<F> class_lagrangian(const MatrixLie<F>& lie, const Matrix<F>& g) {
  std::size_t d = lie.dim();
  Matrix<F> ad = lie.ad(g), adinv = inverse(ad);
  Matrix<F> a = lie.identity() - ad;
  Echelon<F> e = row_reduce(a);
  std::size_t k = e.pivots.size();
  Matrix<F> basis(d, k), coords = e.reduced.block(0, 0, k, d);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < d; ++r) basis(r, i) = a(r, e.pivots[i]);
  Complex<F> src = k == 0 ? Complex<F>::concentrated(-1, d) : Complex<F>(-1, {d, k}, {coords});
  ShiftedTwoForm<F> tgt = circle_form(lie, g);
  ChainMap<F> f(src, tgt.tangent);
  f.set(-1, lie.identity());
  if (k > 0) f.set(0, basis);
  Matrix<F> cls = lie.gram() * (ad - adinv) * lie.constant(Rational(1, 2));
  Matrix<F> w(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) w(i, j) = cls(e.pivots[i], e.pivots[j]);
  GradedPairing<F> h(0);
  if (k > 0) h.set(0, w);
  return LinearLagrangian<F>{src, tgt, f, h};
}

template <typename F>
ChainMap<F> direct_sum(const ChainMap<F>& a, const ChainMap<F>& b) {
  ChainMap<F> out(direct_sum(a.source(), b.source()), direct_sum(a.target(), b.target()));
  for (int k = std::min(a.lo(), b.lo()); k <= std::max(a.hi(), b.hi()); ++k) {
    Matrix<F> m(out.target().dim(k), out.source().dim(k));
    m.set_block(0, 0, a.at(k));
    m.set_block(a.target().dim(k), a.source().dim(k), b.at(k));
    out.set(k, m);
  }
  return out;
}

template <typename F>
LinearLagrangian<F> direct_sum(const LinearLagrangian<F>& a, const LinearLagrangian<F>& b) {
  return LinearLagrangian<F>{direct_sum(a.source, b.source), product(a.target, b.target), direct_sum(a.map, b.map),
                             direct_sum(a.witness, a.source, b.witness, b.source)};
}

enum class Status { Lagrangian, NotLagrangian, Inconclusive };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Lagrangian: return "lagrangian";
    case Status::NotLagrangian: return "not-lagrangian";
    default: return "inconclusive";
  }
}

// Image of H^*(M) -> H^*(boundary) against the pairing H^0 x H^1 -> k,
// sum_j sign_j <x, u(hol_j)>.
struct RestrictionVerdict {
  std::size_t boundary_dim = 0;  // dim H^0 + dim H^1 of the boundary circles
  std::size_t image_h0 = 0;
  std::size_t image_h1 = 0;
  bool isotropic = false;
  bool half_dimensional = false;
  bool smooth = false;
  bool witness_holds = false;  // chain-level dh = -f^* omega
  bool chain_lagrangian = false;
  Status status = Status::Inconclusive;
};

template <typename F>
std::size_t rank_or_zero(const Matrix<F>& m) {
  return m.rows() == 0 || m.cols() == 0 ? 0 : rank(m);
}

template <typename F>
std::vector<Vec<F>> kernel_or_all(const Matrix<F>& m) {
  if (m.rows() == 0) {
    std::vector<Vec<F>> all;
    for (std::size_t i = 0; i < m.cols(); ++i) {
      Vec<F> v(m.cols());
      v[i] = F(1);
      all.push_back(v);
    }
    return all;
  }
  return kernel_basis(m);
}

template <typename F>
RestrictionVerdict restriction_lagrangian_check(const MatrixLie<F>& lie, const RepPoint<F>& r) {
  const auto& p = r.presentation;
  if (p.boundary.empty()) throw IncompatibleBoundary("restriction check needs a boundary");
  RepTangentComplex<F> t = tangent_complex(lie, r);
  std::size_t d = lie.dim(), b = p.boundary.size(), g = r.images.size();
  Matrix<F> one = Matrix<F>::identity(lie.n(), lie.one()), gram = lie.gram();

  RestrictionVerdict v;
  v.smooth = true;
  std::vector<Matrix<F>> fox;
  Matrix<F> im(d * b, d * b);
  std::size_t ker_total = 0;
  for (std::size_t j = 0; j < b; ++j) {
    Matrix<F> a = lie.identity() - lie.ad(eval_word(p.boundary[j].holonomy, r.images, one));
    std::size_t ker = d - rank(a);
    ker_total += ker;
    v.smooth = v.smooth && ker == lie.rank();
    im.set_block(d * j, d * j, a);
    fox.push_back(fox_matrix(lie, p.boundary[j].holonomy, r.images));
  }
  v.boundary_dim = 2 * ker_total;

  std::vector<Vec<F>> h0 = kernel_or_all(t.complex.diff(0));
  std::vector<Vec<F>> z1 = kernel_or_all(t.complex.diff(1));
  v.image_h0 = h0.size();
  std::vector<Vec<F>> restricted;
  for (const auto& u : z1) {
    Vec<F> ru(d * b);
    for (std::size_t j = 0; j < b; ++j) {
      Vec<F> uj = fox[j] * u;
      for (std::size_t a = 0; a < d; ++a) ru[d * j + a] = uj[a];
    }
    restricted.push_back(ru);
  }
  std::vector<Vec<F>> all = restricted;
  for (std::size_t c = 0; c < im.cols(); ++c) all.push_back(im.col(c));
  v.image_h1 = rank_or_zero(Matrix<F>::from_columns(d * b, all)) - rank_or_zero(im);

  v.isotropic = true;
  for (const auto& x : h0)
    for (const auto& ru : restricted) {
      F s = F();
      for (std::size_t j = 0; j < b; ++j) {
        Vec<F> gx = gram * x;
        F term = F();
        for (std::size_t a = 0; a < d; ++a) term += gx[a] * ru[d * j + a];
        s += p.boundary[j].sign > 0 ? term : -term;
      }
      if (!is_zero(s)) v.isotropic = false;
    }
  v.half_dimensional = 2 * (v.image_h0 + v.image_h1) == v.boundary_dim;

  LinearLagrangian<F> l = restriction_lagrangian(lie, r);
  v.witness_holds = witness_holds(l);
  v.chain_lagrangian = v.witness_holds && is_lagrangian(l);
  if (!v.smooth)
    v.status = Status::Inconclusive;
  else
    v.status = v.isotropic && v.half_dimensional ? Status::Lagrangian : Status::NotLagrangian;
  (void)g;
  return v;
}

// Loc_G(M; O_1..O_n): derived intersection of Loc_G(M) and prod [O_j/G] over
// Loc_G(boundary M), as a 0-shifted complex with its induced pairing.
struct ModuliReport {
  int lo = 0;
  std::vector<std::size_t> cohomology;  // degrees lo, lo + 1, ...
  long euler = 0;
  long expected_euler = 0;
  bool witness_holds = false;
  bool skew = false;  // on representatives of H^0
  std::size_t reduced_dim = 0;  // dim H^0
  std::size_t pairing_rank = 0;
  bool nondegenerate = false;  // chain level: cone of psi acyclic
  bool smooth = false;

  std::size_t h(int k) const {
    if (k < lo || k >= lo + static_cast<int>(cohomology.size())) return 0;
    return cohomology[static_cast<std::size_t>(k - lo)];
  }
};

// Membership of g in the class of c: equal if c is central, otherwise both
// regular with the same power traces.
template <typename F>
bool same_class(const MatrixLie<F>& lie, const Matrix<F>& g, const Matrix<F>& c) {
  std::size_t kc = lie.dim() - rank(lie.identity() - lie.ad(c));
  if (kc == lie.dim()) return g == c;
  std::size_t kg = lie.dim() - rank(lie.identity() - lie.ad(g));
  if (kc != lie.rank() || kg != lie.rank()) return false;
  Matrix<F> pg = g, pc = c;
  for (std::size_t k = 1; k <= lie.n(); ++k) {
    if (!(pg.trace() == pc.trace())) return false;
    pg = pg * g;
    pc = pc * c;
  }
  return true;
}

template <typename F>
ModuliReport constrained_moduli(const MatrixLie<F>& lie, const RepPoint<F>& r, const std::vector<Matrix<F>>& classes) {
  const auto& p = r.presentation;
  if (classes.size() != p.boundary.size()) throw IncompatibleBoundary("one class per boundary circle");
  Matrix<F> one = Matrix<F>::identity(lie.n(), lie.one());
  ModuliReport rep;
  rep.smooth = true;
  LinearLagrangian<F> lm = restriction_lagrangian(lie, r);
  rep.smooth = tangent_complex(lie, r).h(0) == (lie.traceless() ? 0 : lie.dim());

  LinearCorrespondence<F> meet;
  long class_dims = 0;
  if (p.boundary.empty()) {
    meet = to_point(lm);
  } else {
    LinearLagrangian<F> lo;
    bool first = true;
    for (std::size_t j = 0; j < p.boundary.size(); ++j) {
      const auto& bw = p.boundary[j];
      if (!same_class(lie, eval_word(bw.holonomy, r.images, one), classes[j]))
        throw IncompatibleBoundary("boundary circle " + std::to_string(j) + " is not in its prescribed class");
      Matrix<F> g = eval_word(bw.boundary, r.images, one);
      LinearLagrangian<F> lj = class_lagrangian(lie, g);
      class_dims += static_cast<long>(lj.source.dim(0));
      rep.smooth = rep.smooth && lie.dim() - rank(lie.identity() - lie.ad(g)) == lie.rank();
      lo = first ? lj : direct_sum(lo, lj);
      first = false;
    }
    meet = compose(from_point(lo), to_point(lm));
  }
  const LinearLagrangian<F>& l = meet.lagrangian;
  const Complex<F>& pc = l.source;
  rep.lo = pc.lo();
  for (int k = pc.lo(); k <= pc.hi(); ++k) rep.cohomology.push_back(pc.cohomology_dim(k));
  rep.euler = pc.euler_characteristic();
  rep.expected_euler = (2L * p.genus - 2) * static_cast<long>(lie.dim()) + class_dims;
  rep.witness_holds = witness_holds(l);
  rep.reduced_dim = pc.cohomology_dim(0);

  // Pairing on representatives of H^0.
  Matrix<F> w = l.witness.block(0, pc);
  std::vector<Vec<F>> cocycles = kernel_or_all(pc.diff(0));
  std::vector<Vec<F>> chosen;
  Matrix<F> bdry = pc.diff(-1);
  std::vector<Vec<F>> span;
  for (std::size_t c = 0; c < bdry.cols(); ++c) span.push_back(bdry.col(c));
  std::size_t base = span.empty() ? 0 : rank(Matrix<F>::from_columns(pc.dim(0), span));
  for (const auto& z : cocycles) {
    span.push_back(z);
    std::size_t rk = rank(Matrix<F>::from_columns(pc.dim(0), span));
    if (rk > base) {
      chosen.push_back(z);
      base = rk;
    } else {
      span.pop_back();
    }
  }
  if (!chosen.empty()) {
    Matrix<F> basis = Matrix<F>::from_columns(pc.dim(0), chosen);
    Matrix<F> reduced = basis.transpose() * w * basis;
    rep.pairing_rank = rank(reduced);
    rep.skew = reduced.transpose() == -reduced;
  } else {
    rep.skew = true;
  }
  rep.nondegenerate = rep.witness_holds && is_lagrangian(l);
  return rep;
}

}  // namespace shc::chars
