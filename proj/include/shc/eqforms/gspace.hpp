#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "shc/eqforms/jets.hpp"
#include "shc/liecore/matrix_group.hpp"

namespace shc {

// Affine G-space: a subvariety of Q^N cut out by polynomial equations, with
// a G-action given by a rational map in ambient coordinates.
class GSpace {
 public:
  GSpace(GroupPtr group, std::string name, std::size_t ambient_dim, std::vector<Polynomial> equations);
  virtual ~GSpace() = default;

  const GroupPtr& group() const { return group_; }
  const std::string& name() const { return name_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Polynomial>& equations() const { return equations_; }

  // h . pt for h a group element written as a matrix.
  virtual JVec act(const JMat& h, const JVec& pt) const = 0;
  // Open condition on top of the equations (e.g. invertibility).
  virtual bool admissible(const QVec& pt) const;
  virtual std::vector<QVec> sample_points(std::size_t count, std::uint64_t seed) const = 0;

  // v_x(pt): derivative of exp(t x) . pt at t = 0, x in Lie coordinates.
  virtual JVec action_field(const JVec& x, const JVec& pt) const;
  QVec action_field(const QVec& x, const QVec& pt) const;

  bool contains(const QVec& pt) const;
  QMat jacobian(const QVec& pt) const;
  bool is_tangent(const QVec& pt, const QVec& v) const;
  std::vector<QVec> tangent_basis(const QVec& pt) const;

  // Differential of pt -> h . pt applied to v.
  QVec push_forward(const QMat& h, const QVec& pt, const QVec& v) const;
  QVec act(const QMat& h, const QVec& pt) const;

 protected:
  void check_point(std::size_t n) const;

 private:
  GroupPtr group_;
  std::string name_;
  std::size_t ambient_dim_;
  std::vector<Polynomial> equations_;
};

using SpacePtr = std::shared_ptr<const GSpace>;

// G acting on itself by conjugation.
class ConjugationSpace : public GSpace {
 public:
  explicit ConjugationSpace(GroupPtr group);
  JVec act(const JMat& h, const JVec& pt) const override;
  bool admissible(const QVec& pt) const override;
  std::vector<QVec> sample_points(std::size_t count, std::uint64_t seed) const override;
};

// Coadjoint representation on dual Lie coordinates: (h.xi)(y) = xi(Ad_{h^-1} y).
class CoadjointSpace : public GSpace {
 public:
  explicit CoadjointSpace(GroupPtr group);
  JVec act(const JMat& h, const JVec& pt) const override;
  JVec action_field(const JVec& x, const JVec& pt) const override;
  std::vector<QVec> sample_points(std::size_t count, std::uint64_t seed) const override;
};

// A single point with trivial action.
class PointSpace : public GSpace {
 public:
  explicit PointSpace(GroupPtr group);
  JVec act(const JMat& h, const JVec& pt) const override;
  std::vector<QVec> sample_points(std::size_t count, std::uint64_t seed) const override;
};

// Q^n with the trivial action.
class AffineSpace : public GSpace {
 public:
  AffineSpace(GroupPtr group, std::size_t dim);
  JVec act(const JMat& h, const JVec& pt) const override;
  std::vector<QVec> sample_points(std::size_t count, std::uint64_t seed) const override;
};

// X1 x X2 acted on by G1 x G2 factorwise.
class ProductSpace : public GSpace {
 public:
  ProductSpace(SpacePtr a, SpacePtr b);
  JVec act(const JMat& h, const JVec& pt) const override;
  bool admissible(const QVec& pt) const override;
  std::vector<QVec> sample_points(std::size_t count, std::uint64_t seed) const override;
  const SpacePtr& left() const { return a_; }
  const SpacePtr& right() const { return b_; }

 private:
  SpacePtr a_, b_;
};

// Restriction of a G1 x ... action along a block embedding of a smaller
// group; factor `source` is used for both `source` and `target` blocks.
class RestrictedSpace : public GSpace {
 public:
  RestrictedSpace(SpacePtr base, GroupPtr small, std::vector<std::size_t> factor_map);
  JVec act(const JMat& h, const JVec& pt) const override;
  bool admissible(const QVec& pt) const override;
  std::vector<QVec> sample_points(std::size_t count, std::uint64_t seed) const override;
  const SpacePtr& base() const { return base_; }
  // Block-diagonal image of an element of the small group in the base group.
  JMat embed(const JMat& h) const;
  QVec embed_lie(const QVec& x) const;

 private:
  SpacePtr base_;
  std::vector<std::size_t> factor_map_;  // base factor k -> small factor
};

}  // namespace shc
