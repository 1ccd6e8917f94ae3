#pragma once

#include <vector>

#include "shc/cobcat/cospan.hpp"
#include "shc/exactalg/scalar.hpp"
#include "shc/shiftsym/complex.hpp"

namespace shc::chars {

class NotACocycle : public Error {
 public:
  using Error::Error;
};

class InvalidRep : public Error {
 public:
  using Error::Error;
};

// gl_n or sl_n over F with the trace pairing. Basis: off-diagonal E_ij in
// row-major order, then E_ii (gl_n) or E_ii - E_{i+1,i+1} (sl_n).
template <typename F>
class MatrixLie {
 public:
  MatrixLie(std::size_t n, bool traceless, F one) : n_(n), traceless_(traceless), one_(one) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) offdiag_.push_back({i, j});
  }

  std::size_t n() const { return n_; }
  std::size_t dim() const { return offdiag_.size() + (traceless_ ? n_ - 1 : n_); }
  std::size_t rank() const { return traceless_ ? n_ - 1 : n_; }
  bool traceless() const { return traceless_; }
  const F& one() const { return one_; }
  F constant(const Rational& r) const { return scalar_from(r, one_); }

  Matrix<F> basis(std::size_t a) const {
    Matrix<F> m(n_, n_);
    if (a < offdiag_.size()) {
      m(offdiag_[a].first, offdiag_[a].second) = one_;
      return m;
    }
    std::size_t k = a - offdiag_.size();
    m(k, k) = one_;
    if (traceless_) m(k + 1, k + 1) = -one_;
    return m;
  }

  Vec<F> coords(const Matrix<F>& x) const {
    Vec<F> v(dim());
    for (std::size_t a = 0; a < offdiag_.size(); ++a) v[a] = x(offdiag_[a].first, offdiag_[a].second);
    F run = F();
    for (std::size_t k = 0; k < rank(); ++k) {
      run = traceless_ ? run + x(k, k) : x(k, k);
      v[offdiag_.size() + k] = run;
    }
    return v;
  }

  Matrix<F> gram() const {
    Matrix<F> g(dim(), dim());
    for (std::size_t a = 0; a < dim(); ++a)
      for (std::size_t b = 0; b < dim(); ++b) g(a, b) = (basis(a) * basis(b)).trace();
    return g;
  }

  // Ad_g in the basis.
  Matrix<F> ad(const Matrix<F>& g) const { return ad(g, inverse(g)); }
  Matrix<F> ad(const Matrix<F>& g, const Matrix<F>& ginv) const {
    Matrix<F> out(dim(), dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      Vec<F> c = coords(g * basis(a) * ginv);
      for (std::size_t b = 0; b < dim(); ++b) out(b, a) = c[b];
    }
    return out;
  }

  Matrix<F> identity() const { return Matrix<F>::identity(dim(), one_); }

 private:
  std::size_t n_;
  bool traceless_;
  F one_;
  std::vector<std::pair<std::size_t, std::size_t>> offdiag_;
};

// Images of the generators of one component presentation.
template <typename F>
struct RepPoint {
  cob::ComponentPresentation presentation;
  std::vector<Matrix<F>> images;
};

template <typename F>
Matrix<F> eval_word(const cob::Word& w, const std::vector<Matrix<F>>& images, const Matrix<F>& one) {
  Matrix<F> x = one;
  for (int l : w.letters()) {
    const Matrix<F>& g = images.at(static_cast<std::size_t>(l > 0 ? l - 1 : -l - 1));
    x = l > 0 ? x * g : x * inverse(g);
  }
  return x;
}

template <typename F>
bool is_valid(const RepPoint<F>& r, const MatrixLie<F>& lie) {
  Matrix<F> one = Matrix<F>::identity(lie.n(), lie.one());
  if (r.images.size() != r.presentation.rank()) return false;
  for (const auto& rel : r.presentation.relators)
    if (!(eval_word(rel, r.images, one) == one)) return false;
  return true;
}

// The linear map u -> u(w) on group 1-cochains with u(xy) = u(x) + Ad_x u(y),
// as a dim x (dim * rank) matrix (Fox derivatives under Ad).
template <typename F>
Matrix<F> fox_matrix(const MatrixLie<F>& lie, const cob::Word& w, const std::vector<Matrix<F>>& images) {
  std::size_t d = lie.dim();
  Matrix<F> out(d, d * images.size());
  Matrix<F> p = Matrix<F>::identity(lie.n(), lie.one());
  for (int l : w.letters()) {
    std::size_t i = static_cast<std::size_t>(l > 0 ? l - 1 : -l - 1);
    if (l > 0) {
      Matrix<F> blk = out.block(0, d * i, d, d) + lie.ad(p);
      out.set_block(0, d * i, blk);
      p = p * images[i];
    } else {
      p = p * inverse(images[i]);
      Matrix<F> blk = out.block(0, d * i, d, d) - lie.ad(p);
      out.set_block(0, d * i, blk);
    }
  }
  return out;
}

// C^0 = g, C^1 = g^#gen, C^2 = g^#rel with d0 x = (x - Ad_s x)_s and d1 from
// Fox derivatives of the relators. Degrees are 0, 1, 2.
template <typename F>
struct RepTangentComplex {
  Complex<F> complex;
  std::size_t lie_dim = 0;
  std::size_t generators = 0;
  std::size_t relators = 0;

  long expected_euler() const {
    return static_cast<long>(lie_dim) * (1 - static_cast<long>(generators) + static_cast<long>(relators));
  }
  std::size_t h(int k) const { return complex.cohomology_dim(k); }
};

template <typename F>
Matrix<F> coboundary_matrix(const MatrixLie<F>& lie, const RepPoint<F>& r) {
  std::size_t d = lie.dim(), g = r.images.size();
  Matrix<F> d0(d * g, d);
  for (std::size_t s = 0; s < g; ++s) d0.set_block(d * s, 0, lie.identity() - lie.ad(r.images[s]));
  return d0;
}

template <typename F>
Matrix<F> relator_matrix(const MatrixLie<F>& lie, const RepPoint<F>& r) {
  std::size_t d = lie.dim(), g = r.images.size();
  const auto& rels = r.presentation.relators;
  Matrix<F> d1(d * rels.size(), d * g);
  for (std::size_t k = 0; k < rels.size(); ++k) d1.set_block(d * k, 0, fox_matrix(lie, rels[k], r.images));
  return d1;
}

template <typename F>
RepTangentComplex<F> tangent_complex(const MatrixLie<F>& lie, const RepPoint<F>& r) {
  if (!is_valid(r, lie)) throw InvalidRep("relators do not evaluate to the identity");
  std::size_t d = lie.dim(), g = r.images.size(), nr = r.presentation.relators.size();
  RepTangentComplex<F> t;
  t.complex = Complex<F>(0, {d, d * g, d * nr}, {coboundary_matrix(lie, r), relator_matrix(lie, r)});
  t.lie_dim = d;
  t.generators = g;
  t.relators = nr;
  return t;
}

// Chain-level surface pairing h(u, v) = u^T H v on C^1: the cup product
// <u(g), Ad_g v(h)> evaluated on the 2-chain
//   sum_s [p_s | w_s] - sum_i ([a_i | a_i^-1] + [b_i | b_i^-1])
// over the segments a_1 b_1 a_1^-1 b_1^-1 ... d_1 ... d_b of the standard
// relator, corrected by +1/2 <u(w), v(w)> on boundary words and -1/2 on
// relators so that it is antisymmetric on all cochains.
template <typename F>
Matrix<F> surface_pairing(const MatrixLie<F>& lie, const RepPoint<F>& r) {
  const auto& p = r.presentation;
  std::size_t d = lie.dim(), g = r.images.size();
  Matrix<F> gram = lie.gram();
  Matrix<F> one = Matrix<F>::identity(lie.n(), lie.one());
  std::vector<cob::Word> segments;
  for (int i = 0; i < p.genus; ++i) {
    cob::Word a = cob::Word::generator(2 * i), b = cob::Word::generator(2 * i + 1);
    segments.insert(segments.end(), {a, b, a.inverse(), b.inverse()});
  }
  for (const auto& bw : p.boundary) segments.push_back(bw.boundary);

  Matrix<F> h(d * g, d * g);
  cob::Word prefix;
  for (const auto& w : segments) {
    Matrix<F> left = fox_matrix(lie, prefix, r.images).transpose() * gram * lie.ad(eval_word(prefix, r.images, one));
    h += left * fox_matrix(lie, w, r.images);
    prefix = prefix * w;
  }
  for (int i = 0; i < 2 * p.genus; ++i) {
    Matrix<F> sel = fox_matrix(lie, cob::Word::generator(i), r.images);
    h += sel.transpose() * gram * sel;
  }
  F half = lie.constant(Rational(1, 2));
  for (const auto& w : p.relators) {
    Matrix<F> fw = fox_matrix(lie, w, r.images);
    h -= (fw.transpose() * gram * fw) * half;
  }
  for (const auto& bw : p.boundary) {
    Matrix<F> fw = fox_matrix(lie, bw.boundary, r.images);
    h += (fw.transpose() * gram * fw) * half;
  }
  return h;
}

template <typename F>
bool is_cocycle(const MatrixLie<F>& lie, const RepPoint<F>& r, const Vec<F>& u) {
  if (r.presentation.relators.empty()) return true;
  Vec<F> image = relator_matrix(lie, r) * u;
  for (const auto& x : image)
    if (!is_zero(x)) return false;
  return true;
}

// Goldman pairing of two cocycles on a closed surface.
template <typename F>
F goldman_pairing(const MatrixLie<F>& lie, const RepPoint<F>& r, const Vec<F>& u, const Vec<F>& v) {
  if (!r.presentation.boundary.empty())
    throw NotACocycle("goldman_pairing is defined on closed surfaces; use constrained_moduli with boundary");
  if (u.size() != lie.dim() * r.images.size() || v.size() != u.size())
    throw DimensionMismatch("cochain length must be dim(g) * #generators");
  if (!is_cocycle(lie, r, u) || !is_cocycle(lie, r, v)) throw NotACocycle("argument is not a cocycle");
  Matrix<F> h = surface_pairing(lie, r);
  Vec<F> hv = h * v;
  F s = F();
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * hv[i];
  return s;
}

// Coboundary of x in C^0.
template <typename F>
Vec<F> coboundary(const MatrixLie<F>& lie, const RepPoint<F>& r, const Vec<F>& x) {
  return coboundary_matrix(lie, r) * x;
}

}  // namespace shc::chars
