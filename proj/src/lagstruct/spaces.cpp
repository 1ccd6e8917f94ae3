#include "shc/lagstruct/spaces.hpp"

#include <random>

#include "shc/eqforms/omega.hpp"
#include "shc/liecore/sampling.hpp"

namespace shc {

namespace {

std::vector<std::string> entry_vars(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n * n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

std::vector<Polynomial> class_equations(const MatrixGroup& g, const QMat& base) {
  std::size_t n = g.size();
  auto vars = entry_vars(n);
  std::vector<Polynomial> eqs;
  for (const auto& e : g.equations()) {
    std::vector<std::size_t> map(e.nvars());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
    eqs.push_back(e.reindex(vars, map));
  }
  Matrix<Polynomial> x(n, n);
  for (std::size_t i = 0; i < n * n; ++i) x(i / n, i % n) = Polynomial::variable(vars, i);
  Matrix<Polynomial> power = x;
  QMat bpow = base;
  for (std::size_t k = 1; k < n; ++k) {
    Polynomial tr(vars);
    for (std::size_t i = 0; i < n; ++i) tr += power(i, i);
    eqs.push_back(tr - Polynomial::constant(vars, bpow.trace()));
    Matrix<Polynomial> next(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Polynomial s(vars);
        for (std::size_t l = 0; l < n; ++l) s += power(i, l) * x(l, j);
        next(i, j) = s;
      }
    power = next;
    bpow = bpow * base;
  }
  return eqs;
}

}  // namespace

ConjugacyClassSpace::ConjugacyClassSpace(GroupPtr group, QMat base)
    : GSpace(group, "O(" + group->name() + ")", group->size() * group->size(), class_equations(*group, base)),
      base_(std::move(base)) {
  if (!group->contains(base_)) throw NotOnSpace("conjugacy class base point is not in " + group->name());
}

JVec ConjugacyClassSpace::act(const JMat& h, const JVec& pt) const {
  check_point(pt.size());
  JMat g = as_matrix(pt, group()->size());
  return JMat(h * g * inverse(h)).data();
}

bool ConjugacyClassSpace::admissible(const QVec& pt) const {
  std::size_t n = group()->size();
  return !determinant(QMat::from_rows(n, n, pt)).is_zero();
}

std::vector<QVec> ConjugacyClassSpace::sample_points(std::size_t count, std::uint64_t seed) const {
  std::vector<QVec> out;
  for (const auto& h : shc::sample_points(*group(), count, seed)) out.push_back(QMat(h * base_ * inverse(h)).data());
  return out;
}

CotangentSpace::CotangentSpace(GroupPtr group)
    : GSpace(group, "T*Q" + std::to_string(group->size()), 2 * group->size(), {}) {}

JVec CotangentSpace::act(const JMat& h, const JVec& pt) const {
  check_point(pt.size());
  std::size_t n = group()->size();
  JVec q(pt.begin(), pt.begin() + static_cast<std::ptrdiff_t>(n));
  JVec p(pt.begin() + static_cast<std::ptrdiff_t>(n), pt.end());
  JVec out = h * q;
  JVec hp = inverse(h).transpose() * p;
  out.insert(out.end(), hp.begin(), hp.end());
  return out;
}

std::vector<QVec> CotangentSpace::sample_points(std::size_t count, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<QVec> out(count, QVec(ambient_dim()));
  for (auto& v : out)
    for (auto& c : v) c = random_small_rational(rng);
  return out;
}

SpacePtr double_space(const GroupPtr& group) {
  auto c = conjugation_space(group);
  auto prod = std::make_shared<ProductSpace>(c, c);
  return std::make_shared<RestrictedSpace>(prod, group, std::vector<std::size_t>{0, 0});
}

}  // namespace shc
