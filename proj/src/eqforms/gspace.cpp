#include "shc/eqforms/gspace.hpp"

#include <numeric>
#include <random>

#include "shc/liecore/sampling.hpp"

namespace shc {

namespace {

std::vector<std::string> coordinate_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

std::vector<Polynomial> shift_equations(const std::vector<Polynomial>& eqs, std::size_t total,
                                        std::size_t offset) {
  std::vector<Polynomial> out;
  auto names = coordinate_names(total);
  for (const auto& e : eqs) {
    std::vector<std::size_t> map(e.nvars());
    std::iota(map.begin(), map.end(), offset);
    out.push_back(e.reindex(names, map));
  }
  return out;
}

std::size_t factor_count(const MatrixGroup& g) {
  return g.factors().empty() ? 1 : g.factors().size();
}

JMat factor_of(const MatrixGroup& g, const JMat& h, std::size_t k) {
  if (g.factors().empty()) return h;
  return g.factor_block(h, k);
}

std::size_t factor_size(const MatrixGroup& g, std::size_t k) {
  return g.factors().empty() ? g.size() : g.factors()[k].group->size();
}

std::size_t factor_offset(const MatrixGroup& g, std::size_t k) {
  return g.factors().empty() ? 0 : g.factors()[k].offset;
}

}  // namespace

GSpace::GSpace(GroupPtr group, std::string name, std::size_t ambient_dim, std::vector<Polynomial> equations)
    : group_(std::move(group)), name_(std::move(name)), ambient_dim_(ambient_dim), equations_(std::move(equations)) {
  for (const auto& e : equations_) {
    if (e.nvars() != ambient_dim_) throw DimensionMismatch("equation arity != ambient dimension of " + name_);
  }
}

bool GSpace::admissible(const QVec&) const { return true; }

void GSpace::check_point(std::size_t n) const {
  if (n != ambient_dim_) {
    throw DimensionMismatch(name_ + " expects " + std::to_string(ambient_dim_) + " coordinates, got " +
                            std::to_string(n));
  }
}

JVec GSpace::action_field(const JVec& x, const JVec& pt) const {
  check_point(pt.size());
  int k = fresh_index({support(x), support(pt)});
  JMat xm = group_->lie_matrix(x);
  JMat h = JMat::identity(group_->size(), JetQ(Rational(1)));
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) += xm(i, j) * JetQ::infinitesimal(k);
  return derivative(act(h, pt), k);
}

QVec GSpace::action_field(const QVec& x, const QVec& pt) const {
  return value_part(action_field(lift(x), lift(pt)));
}

bool GSpace::contains(const QVec& pt) const {
  if (pt.size() != ambient_dim_) return false;
  for (const auto& e : equations_) {
    if (!e.eval(pt).is_zero()) return false;
  }
  return admissible(pt);
}

QMat GSpace::jacobian(const QVec& pt) const {
  check_point(pt.size());
  QMat j(equations_.size(), ambient_dim_);
  for (std::size_t r = 0; r < equations_.size(); ++r)
    for (std::size_t c = 0; c < ambient_dim_; ++c) j(r, c) = equations_[r].partial(c).eval(pt);
  return j;
}

bool GSpace::is_tangent(const QVec& pt, const QVec& v) const {
  check_point(v.size());
  return is_zero_vec(jacobian(pt) * v);
}

std::vector<QVec> GSpace::tangent_basis(const QVec& pt) const {
  if (ambient_dim_ == 0) return {};
  return kernel_basis(jacobian(pt));
}

QVec GSpace::push_forward(const QMat& h, const QVec& pt, const QVec& v) const {
  return value_part(derivative(act(lift(h), perturb(lift(pt), lift(v), 0)), 0));
}

QVec GSpace::act(const QMat& h, const QVec& pt) const { return value_part(act(lift(h), lift(pt))); }

// --- conjugation -----------------------------------------------------------

ConjugationSpace::ConjugationSpace(GroupPtr group)
    : GSpace(group, group->name() + "^ad", group->size() * group->size(),
             shift_equations(group->equations(), group->size() * group->size(), 0)) {}

JVec ConjugationSpace::act(const JMat& h, const JVec& pt) const {
  check_point(pt.size());
  JMat g = as_matrix(pt, group()->size());
  JMat out = h * g * inverse(h);
  return out.data();
}

bool ConjugationSpace::admissible(const QVec& pt) const {
  std::size_t n = group()->size();
  return !determinant(QMat::from_rows(n, n, pt)).is_zero();
}

std::vector<QVec> ConjugationSpace::sample_points(std::size_t count, std::uint64_t seed) const {
  std::vector<QVec> out;
  for (const auto& g : shc::sample_points(*group(), count, seed)) out.push_back(g.data());
  return out;
}

// --- coadjoint ---------------------------------------------------------------

CoadjointSpace::CoadjointSpace(GroupPtr group)
    : GSpace(group, group->name() + "-coadjoint", group->dim(), {}) {}

JVec CoadjointSpace::act(const JMat& h, const JVec& pt) const {
  check_point(pt.size());
  const MatrixGroup& g = *group();
  JMat hinv = inverse(h);
  JVec out(g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    JVec c = g.lie_coords(hinv * lift(g.basis()[j]) * h);
    for (std::size_t k = 0; k < g.dim(); ++k) out[j] += pt[k] * c[k];
  }
  return out;
}

JVec CoadjointSpace::action_field(const JVec& x, const JVec& pt) const {
  check_point(pt.size());
  const LieData& l = group()->lie();
  JVec out(l.dim());
  for (std::size_t j = 0; j < l.dim(); ++j) {
    JVec ej = lift(l.basis_vector(j));
    JVec br = l.bracket(x, ej);
    for (std::size_t k = 0; k < l.dim(); ++k) out[j] -= pt[k] * br[k];
  }
  return out;
}

std::vector<QVec> CoadjointSpace::sample_points(std::size_t count, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<QVec> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_lie_coords(*group(), rng));
  return out;
}

// --- point -------------------------------------------------------------------

PointSpace::PointSpace(GroupPtr group) : GSpace(group, "point", 0, {}) {}

JVec PointSpace::act(const JMat&, const JVec& pt) const { return pt; }

std::vector<QVec> PointSpace::sample_points(std::size_t count, std::uint64_t) const {
  return std::vector<QVec>(count);
}

// --- affine ----------------------------------------------------------------

AffineSpace::AffineSpace(GroupPtr group, std::size_t dim)
    : GSpace(std::move(group), "A" + std::to_string(dim), dim, {}) {}

JVec AffineSpace::act(const JMat&, const JVec& pt) const { return pt; }

std::vector<QVec> AffineSpace::sample_points(std::size_t count, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<QVec> out(count, QVec(ambient_dim()));
  for (auto& v : out)
    for (auto& c : v) c = random_small_rational(rng);
  return out;
}

// --- product -----------------------------------------------------------------

namespace {

std::vector<Polynomial> product_equations(const GSpace& a, const GSpace& b) {
  std::size_t total = a.ambient_dim() + b.ambient_dim();
  auto eqs = shift_equations(a.equations(), total, 0);
  auto eqb = shift_equations(b.equations(), total, a.ambient_dim());
  eqs.insert(eqs.end(), eqb.begin(), eqb.end());
  return eqs;
}

}  // namespace

ProductSpace::ProductSpace(SpacePtr a, SpacePtr b)
    : GSpace(MatrixGroup::product({a->group(), b->group()}), a->name() + " x " + b->name(),
             a->ambient_dim() + b->ambient_dim(), product_equations(*a, *b)),
      a_(std::move(a)),
      b_(std::move(b)) {}

JVec ProductSpace::act(const JMat& h, const JVec& pt) const {
  check_point(pt.size());
  JVec pa(pt.begin(), pt.begin() + static_cast<std::ptrdiff_t>(a_->ambient_dim()));
  JVec pb(pt.begin() + static_cast<std::ptrdiff_t>(a_->ambient_dim()), pt.end());
  std::size_t na = a_->group()->size(), nb = b_->group()->size();
  JVec out = a_->act(h.block(0, 0, na, na), pa);
  JVec ob = b_->act(h.block(na, na, nb, nb), pb);
  out.insert(out.end(), ob.begin(), ob.end());
  return out;
}

bool ProductSpace::admissible(const QVec& pt) const {
  QVec pa(pt.begin(), pt.begin() + static_cast<std::ptrdiff_t>(a_->ambient_dim()));
  QVec pb(pt.begin() + static_cast<std::ptrdiff_t>(a_->ambient_dim()), pt.end());
  return a_->admissible(pa) && b_->admissible(pb);
}

std::vector<QVec> ProductSpace::sample_points(std::size_t count, std::uint64_t seed) const {
  auto sa = a_->sample_points(count, seed);
  auto sb = b_->sample_points(count, seed * 7919 + 1);
  std::vector<QVec> out;
  for (std::size_t i = 0; i < count; ++i) {
    QVec v = sa[i];
    v.insert(v.end(), sb[i].begin(), sb[i].end());
    out.push_back(std::move(v));
  }
  return out;
}

// --- restriction along a block embedding ------------------------------------

RestrictedSpace::RestrictedSpace(SpacePtr base, GroupPtr small, std::vector<std::size_t> factor_map)
    : GSpace(small, base->name(), base->ambient_dim(), base->equations()),
      base_(std::move(base)),
      factor_map_(std::move(factor_map)) {
  const MatrixGroup& big = *base_->group();
  if (factor_map_.size() != factor_count(big)) throw DimensionMismatch("factor map length");
  for (std::size_t k = 0; k < factor_map_.size(); ++k) {
    if (factor_map_[k] >= factor_count(*small)) throw DimensionMismatch("factor map target");
    if (factor_size(big, k) != factor_size(*small, factor_map_[k])) {
      throw DimensionMismatch("factor map joins groups of different sizes");
    }
  }
}

JMat RestrictedSpace::embed(const JMat& h) const {
  const MatrixGroup& big = *base_->group();
  JMat out(big.size(), big.size());
  for (std::size_t k = 0; k < factor_map_.size(); ++k) {
    out.set_block(factor_offset(big, k), factor_offset(big, k), factor_of(*group(), h, factor_map_[k]));
  }
  return out;
}

QVec RestrictedSpace::embed_lie(const QVec& x) const {
  JMat big = embed(lift(group()->lie_matrix(x)));
  return value_part(base_->group()->lie_coords(big));
}

JVec RestrictedSpace::act(const JMat& h, const JVec& pt) const { return base_->act(embed(h), pt); }

bool RestrictedSpace::admissible(const QVec& pt) const { return base_->admissible(pt); }

std::vector<QVec> RestrictedSpace::sample_points(std::size_t count, std::uint64_t seed) const {
  return base_->sample_points(count, seed);
}

}  // namespace shc
