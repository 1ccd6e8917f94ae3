#pragma once

#include "shc/eqforms/gspace.hpp"

namespace shc {

// Conjugacy class of a regular element g0, charted as the level set
// tr(g^k) = tr(g0^k), k = 1..n-1, inside G.
class ConjugacyClassSpace : public GSpace {
 public:
  ConjugacyClassSpace(GroupPtr group, QMat base);
  JVec act(const JMat& h, const JVec& pt) const override;
  bool admissible(const QVec& pt) const override;
  std::vector<QVec> sample_points(std::size_t count, std::uint64_t seed) const override;
  const QMat& base() const { return base_; }

 private:
  QMat base_;
};

// T*V for the standard representation V = Q^n: h.(q, p) = (h q, h^{-T} p).
class CotangentSpace : public GSpace {
 public:
  explicit CotangentSpace(GroupPtr group);
  JVec act(const JMat& h, const JVec& pt) const override;
  std::vector<QVec> sample_points(std::size_t count, std::uint64_t seed) const override;
};

// G x G with the diagonal conjugation action.
SpacePtr double_space(const GroupPtr& group);

}  // namespace shc
