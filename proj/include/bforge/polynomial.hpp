#pragma once

#include <map>
#include <string>
#include <vector>

#include "bforge/exponent.hpp"
#include "bforge/rational.hpp"
#include "bforge/term_order.hpp"

namespace bforge {

struct Term {
  Exponent exp;
  Rational coeff;

  bool operator==(const Term& other) const = default;
};

// Multivariate polynomial with exact rational coefficients. Terms are kept
// strictly descending in the attached order with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(TermOrder order) : order_(order) {}
  Polynomial(TermOrder order, std::vector<Term> terms);

  static Polynomial monomial(const TermOrder& order, Exponent exp,
                             Rational coeff = 1);
  static Polynomial constant(const TermOrder& order, Rational value);

  const TermOrder& order() const { return order_; }
  int width() const { return order_.width(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading() const;

  // Maximal term degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Polynomial with_order(const TermOrder& order) const;

  // Mathematical equality: same width and the same terms, regardless of the
  // attached orders.
  bool operator==(const Polynomial& other) const;

  std::string debug_string() const;

 private:
  TermOrder order_;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const Polynomial& a);
Polynomial poly_scale(const Polynomial& a, const Rational& c);
Polynomial poly_mul_term(const Polynomial& a, const Exponent& exp,
                         const Rational& coeff);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_pow(const Polynomial& a, int power);
Polynomial poly_monic(const Polynomial& a);

// Substitution X_i -> images[i]; results live in the images' ring. Caches
// variable powers so batches of related monomials stay cheap.
class Substituter {
 public:
  explicit Substituter(std::vector<Polynomial> images);

  Polynomial apply(const Polynomial& f) const;

 private:
  const Polynomial& power(int var, int exponent) const;

  std::vector<Polynomial> images_;
  mutable std::map<std::pair<int, int>, Polynomial> power_cache_;
};

}  // namespace bforge
