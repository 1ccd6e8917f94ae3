#include "shc/eqforms/form.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace shc {

namespace {

JetQ::Mask support_all(const JVec& x, const JVec& pt, const std::vector<JVec>& vs) {
  JetQ::Mask s = support(x) | support(pt);
  for (const auto& v : vs) s |= support(v);
  return s;
}

long factorial(int p) {
  long f = 1;
  for (int i = 2; i <= p; ++i) f *= i;
  return f;
}

}  // namespace

EquivariantForm::EquivariantForm(SpacePtr space, int form_degree, int lie_degree, int u_power, FormKernel kernel,
                                 std::string label)
    : space_(std::move(space)),
      form_degree_(form_degree),
      lie_degree_(lie_degree),
      u_power_(u_power),
      kernel_(std::make_shared<const FormKernel>(std::move(kernel))),
      label_(std::move(label)) {
  if (form_degree_ < 0 || lie_degree_ < 0 || u_power_ < 0) throw DegreeError("negative degree in " + label_);
}

JetQ EquivariantForm::eval_raw(const JVec& x, const JVec& pt, const std::vector<JVec>& vectors) const {
  return (*kernel_)(x, pt, vectors);
}

Rational EquivariantForm::eval(const QVec& x, const QVec& pt, const std::vector<QVec>& vectors) const {
  if (vectors.size() != static_cast<std::size_t>(form_degree_)) {
    throw ArityMismatch(label_ + " is a " + std::to_string(form_degree_) + "-form, got " +
                        std::to_string(vectors.size()) + " vectors");
  }
  if (x.size() != space_->group()->dim()) throw DimensionMismatch("Lie element has wrong length");
  if (!space_->contains(pt)) throw NotOnSpace("point is not on " + space_->name());
  std::vector<JVec> lifted;
  for (const auto& v : vectors) {
    if (!space_->is_tangent(pt, v)) throw TangencyError("vector is not tangent to " + space_->name());
    lifted.push_back(lift(v));
  }
  return eval_raw(lift(x), lift(pt), lifted).value();
}

EquivariantForm EquivariantForm::with_u_power(int u) const {
  EquivariantForm f = *this;
  f.u_power_ = u;
  if (u < 0) throw DegreeError("negative u-power");
  return f;
}

EquivariantForm EquivariantForm::relabel(std::string label) const {
  EquivariantForm f = *this;
  f.label_ = std::move(label);
  return f;
}

FormKernel alternate(FormKernel k, int p) {
  return [k = std::move(k), p](const JVec& x, const JVec& pt, const std::vector<JVec>& vs) {
    std::vector<std::size_t> perm(static_cast<std::size_t>(p));
    std::iota(perm.begin(), perm.end(), 0);
    JetQ acc;
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
          if (perm[i] > perm[j]) ++inversions;
      std::vector<JVec> permuted;
      permuted.reserve(perm.size());
      for (auto i : perm) permuted.push_back(vs[i]);
      JetQ term = k(x, pt, permuted);
      if (inversions % 2) acc -= term; else acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc * JetQ(Rational(1, factorial(p)));
  };
}

EquivariantForm zero_form(SpacePtr space, int form_degree, int lie_degree, int u_power) {
  return EquivariantForm(std::move(space), form_degree, lie_degree, u_power,
                         [](const JVec&, const JVec&, const std::vector<JVec>&) { return JetQ(); }, "0");
}

EquivariantForm de_rham(const EquivariantForm& f) {
  FormKernel k = [f](const JVec& x, const JVec& pt, const std::vector<JVec>& vs) {
    int e = fresh_index({support_all(x, pt, vs)});
    JetQ acc;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      std::vector<JVec> rest;
      rest.reserve(vs.size() - 1);
      for (std::size_t j = 0; j < vs.size(); ++j)
        if (j != i) rest.push_back(vs[j]);
      JetQ d = f.eval_raw(x, perturb(pt, vs[i], e), rest).derivative(e);
      if (i % 2) acc -= d; else acc += d;
    }
    return acc;
  };
  return EquivariantForm(f.space(), f.form_degree() + 1, f.lie_degree(), f.u_power(), std::move(k),
                         "d(" + f.label() + ")");
}

EquivariantForm contract_action(const EquivariantForm& f) {
  if (f.form_degree() == 0) throw DegreeError("contraction of a 0-form " + f.label());
  FormKernel k = [f](const JVec& x, const JVec& pt, const std::vector<JVec>& vs) {
    std::vector<JVec> args;
    args.reserve(vs.size() + 1);
    args.push_back(f.space()->action_field(x, pt));
    args.insert(args.end(), vs.begin(), vs.end());
    return f.eval_raw(x, pt, args);
  };
  return EquivariantForm(f.space(), f.form_degree() - 1, f.lie_degree() + 1, f.u_power(), std::move(k),
                         "i_v(" + f.label() + ")");
}

EquivariantForm d_lr(const EquivariantForm& f) {
  return scale(contract_action(f), Rational(-1)).relabel("dLR(" + f.label() + ")");
}

EquivariantForm scale(const EquivariantForm& f, const Rational& c) {
  FormKernel k = [f, c](const JVec& x, const JVec& pt, const std::vector<JVec>& vs) {
    return f.eval_raw(x, pt, vs) * JetQ(c);
  };
  return EquivariantForm(f.space(), f.form_degree(), f.lie_degree(), f.u_power(), std::move(k),
                         c.to_string() + "*" + f.label());
}

namespace {

void require_compatible(const EquivariantForm& a, const EquivariantForm& b) {
  const GSpace& sa = *a.space();
  const GSpace& sb = *b.space();
  if (&sa != &sb && (sa.group() != sb.group() || sa.name() != sb.name() || sa.ambient_dim() != sb.ambient_dim())) {
    throw DegreeError("forms live on different spaces");
  }
  if (a.form_degree() != b.form_degree() || a.u_power() != b.u_power()) {
    throw DegreeError("adding forms of different degrees: " + a.label() + ", " + b.label());
  }
}

}  // namespace

EquivariantForm operator+(const EquivariantForm& a, const EquivariantForm& b) {
  require_compatible(a, b);
  FormKernel k = [a, b](const JVec& x, const JVec& pt, const std::vector<JVec>& vs) {
    return a.eval_raw(x, pt, vs) + b.eval_raw(x, pt, vs);
  };
  return EquivariantForm(a.space(), a.form_degree(), std::max(a.lie_degree(), b.lie_degree()), a.u_power(),
                         std::move(k), a.label() + " + " + b.label());
}

EquivariantForm operator-(const EquivariantForm& a, const EquivariantForm& b) {
  require_compatible(a, b);
  FormKernel k = [a, b](const JVec& x, const JVec& pt, const std::vector<JVec>& vs) {
    return a.eval_raw(x, pt, vs) - b.eval_raw(x, pt, vs);
  };
  return EquivariantForm(a.space(), a.form_degree(), std::max(a.lie_degree(), b.lie_degree()), a.u_power(),
                         std::move(k), a.label() + " - " + b.label());
}

JVec push_vector(const SpaceMap& phi, const JVec& pt, const JVec& v) {
  int e = fresh_index({support(pt), support(v)});
  return derivative(phi(perturb(pt, v, e)), e);
}

EquivariantForm pullback(const EquivariantForm& f, SpacePtr source, SpaceMap phi, std::string label) {
  FormKernel k = [f, phi](const JVec& x, const JVec& pt, const std::vector<JVec>& vs) {
    std::vector<JVec> pushed;
    pushed.reserve(vs.size());
    for (const auto& v : vs) pushed.push_back(push_vector(phi, pt, v));
    return f.eval_raw(x, phi(pt), pushed);
  };
  return EquivariantForm(std::move(source), f.form_degree(), f.lie_degree(), f.u_power(), std::move(k),
                         std::move(label));
}

CartanElement::CartanElement(std::vector<EquivariantForm> summands) : summands_(std::move(summands)) {
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    for (std::size_t j = i + 1; j < summands_.size(); ++j) {
      if (summands_[i].u_power() == summands_[j].u_power()) throw DegreeError("repeated u-power in Cartan element");
    }
    if (summands_[i].total_degree() != summands_[0].total_degree() ||
        summands_[i].weight() != summands_[0].weight()) {
      throw DegreeError("Cartan element is not homogeneous: " + summands_[i].label());
    }
  }
  std::sort(summands_.begin(), summands_.end(),
            [](const auto& a, const auto& b) { return a.u_power() < b.u_power(); });
}

const EquivariantForm* CartanElement::component(int u_power) const {
  for (const auto& s : summands_) {
    if (s.u_power() == u_power) return &s;
  }
  return nullptr;
}

CartanElement cartan_diff(const CartanElement& c) {
  std::map<int, std::vector<EquivariantForm>> parts;
  for (const auto& s : c.summands()) {
    if (s.form_degree() > 0) parts[s.u_power()].push_back(d_lr(s));
    parts[s.u_power() + 1].push_back(de_rham(s).with_u_power(s.u_power() + 1));
  }
  std::vector<EquivariantForm> out;
  for (auto& [u, forms] : parts) {
    EquivariantForm acc = forms.front();
    for (std::size_t i = 1; i < forms.size(); ++i) acc = acc + forms[i];
    out.push_back(acc);
  }
  return CartanElement(std::move(out));
}

}  // namespace shc
