#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shc/exactalg/jet.hpp"
#include "shc/exactalg/rational.hpp"
#include "shc/exactalg/scalar.hpp"

namespace shc {

// Multivariate polynomial with rational coefficients over named variables.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

  static Polynomial constant(std::vector<std::string> variables, const Rational& c);
  static Polynomial variable(std::vector<std::string> variables, std::size_t index);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  void add_term(Exponents e, const Rational& c);

  Polynomial partial(std::size_t index) const;
  // Same polynomial in a larger variable list; variable i becomes new_vars[index_map[i]].
  Polynomial reindex(std::vector<std::string> new_vars, const std::vector<std::size_t>& index_map) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Evaluation in any commutative scalar kind that accepts rational constants.
  template <typename T>
  T eval(const std::vector<T>& point) const {
    check_arity(point.size());
    T acc{};
    T like = scalar_context(point);
    for (const auto& [e, c] : terms_) {
      T term = scalar_from(c, like);
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
      }
      acc += term;
    }
    return acc;
  }

  std::string to_string() const;

 private:
  void check_arity(std::size_t n) const;
  void check_same_vars(const Polynomial& o) const;

  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

// (p(point), D_direction p(point)) by first-order jet arithmetic.
std::pair<Rational, Rational> poly_eval_jet(const Polynomial& p, const std::vector<Rational>& point,
                                            const std::vector<Rational>& direction);

}  // namespace shc
