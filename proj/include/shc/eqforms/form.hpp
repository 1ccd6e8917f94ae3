#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "shc/eqforms/gspace.hpp"
#include "shc/liecore/errors.hpp"

namespace shc {

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

// Kernel of a form: (x in Lie coordinates, ambient point, tangent vectors) -> scalar.
using FormKernel = std::function<JetQ(const JVec& x, const JVec& pt, const std::vector<JVec>& vectors)>;

// Cartan-model element u^k * f(x) with f(x) a p-form on X depending
// polynomially on x. Total degree is p + 2 deg_x; weight is p + deg_x - k.
class EquivariantForm {
 public:
  EquivariantForm(SpacePtr space, int form_degree, int lie_degree, int u_power, FormKernel kernel,
                  std::string label);

  const SpacePtr& space() const { return space_; }
  int form_degree() const { return form_degree_; }
  int lie_degree() const { return lie_degree_; }
  int u_power() const { return u_power_; }
  int total_degree() const { return form_degree_ + 2 * lie_degree_; }
  int weight() const { return form_degree_ + lie_degree_ - u_power_; }
  const std::string& label() const { return label_; }

  JetQ eval_raw(const JVec& x, const JVec& pt, const std::vector<JVec>& vectors) const;
  Rational eval(const QVec& x, const QVec& pt, const std::vector<QVec>& vectors) const;

  EquivariantForm with_u_power(int u) const;
  EquivariantForm relabel(std::string label) const;

 private:
  SpacePtr space_;
  int form_degree_;
  int lie_degree_;
  int u_power_;
  std::shared_ptr<const FormKernel> kernel_;
  std::string label_;
};

// Kernel wrapped in the alternation (1/p!) sum_sigma sgn(sigma) k(v_sigma).
FormKernel alternate(FormKernel k, int p);

EquivariantForm zero_form(SpacePtr space, int form_degree, int lie_degree, int u_power);
EquivariantForm de_rham(const EquivariantForm& f);
EquivariantForm contract_action(const EquivariantForm& f);
EquivariantForm d_lr(const EquivariantForm& f);
EquivariantForm scale(const EquivariantForm& f, const Rational& c);
EquivariantForm operator+(const EquivariantForm& a, const EquivariantForm& b);
EquivariantForm operator-(const EquivariantForm& a, const EquivariantForm& b);

// Equivariant map between spaces over the same group, in ambient coordinates.
using SpaceMap = std::function<JVec(const JVec&)>;

// Pullback of f along phi: source -> f.space(); differentials via jets.
EquivariantForm pullback(const EquivariantForm& f, SpacePtr source, SpaceMap phi, std::string label);

// Differential of phi at pt applied to v.
JVec push_vector(const SpaceMap& phi, const JVec& pt, const JVec& v);

class CartanElement {
 public:
  CartanElement() = default;
  explicit CartanElement(std::vector<EquivariantForm> summands);

  const std::vector<EquivariantForm>& summands() const { return summands_; }
  const EquivariantForm* component(int u_power) const;
  bool empty() const { return summands_.empty(); }

 private:
  std::vector<EquivariantForm> summands_;
};

// d_LR + u d, regrouped by u-power.
CartanElement cartan_diff(const CartanElement& c);

}  // namespace shc
