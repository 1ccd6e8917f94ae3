#include "shc/exactalg/polynomial.hpp"

#include <sstream>

#include "shc/exactalg/errors.hpp"

namespace shc {

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& c) {
  Polynomial p(std::move(variables));
  p.add_term(Exponents(p.nvars(), 0u), c);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index) {
  Polynomial p(std::move(variables));
  if (index >= p.nvars()) throw DimensionMismatch("variable index out of range");
  Exponents e(p.nvars(), 0u);
  e[index] = 1;
  p.add_term(std::move(e), Rational(1));
  return p;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

void Polynomial::add_term(Exponents e, const Rational& c) {
  if (e.size() != vars_.size()) throw DimensionMismatch("exponent vector length != variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::partial(std::size_t index) const {
  if (index >= nvars()) throw DimensionMismatch("partial derivative index out of range");
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents f = e;
    f[index] -= 1;
    out.add_term(std::move(f), c * Rational(static_cast<long>(e[index])));
  }
  return out;
}

Polynomial Polynomial::reindex(std::vector<std::string> new_vars,
                               const std::vector<std::size_t>& index_map) const {
  if (index_map.size() != nvars()) throw DimensionMismatch("reindex map length != variable count");
  Polynomial out(std::move(new_vars));
  for (const auto& [e, c] : terms_) {
    Exponents f(out.nvars(), 0u);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (index_map[i] >= f.size()) throw DimensionMismatch("reindex target out of range");
      f[index_map[i]] += e[i];
    }
    out.add_term(std::move(f), c);
  }
  return out;
}

void Polynomial::check_arity(std::size_t n) const {
  if (n != vars_.size()) {
    throw DimensionMismatch("polynomial in " + std::to_string(vars_.size()) + " variables evaluated at " +
                            std::to_string(n) + " coordinates");
  }
}

void Polynomial::check_same_vars(const Polynomial& o) const {
  if (vars_ != o.vars_) throw DimensionMismatch("polynomials over different variable lists");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  check_same_vars(o);
  Polynomial out(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    os << (first ? "" : " + ") << c;
    first = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

std::pair<Rational, Rational> poly_eval_jet(const Polynomial& p, const std::vector<Rational>& point,
                                            const std::vector<Rational>& direction) {
  if (point.size() != p.nvars() || direction.size() != p.nvars()) {
    throw DimensionMismatch("poly_eval_jet: point/direction length != variable count");
  }
  std::vector<Dual<Rational>> x(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) x[i] = Dual<Rational>(point[i], direction[i]);
  Dual<Rational> r = p.eval(x);
  return {r.value, r.tangent};
}

}  // namespace shc
