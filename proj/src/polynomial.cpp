#include "bforge/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "bforge/errors.hpp"

namespace bforge {

namespace {

// Sort descending in the given order, then combine equal exponents and drop
// zero coefficients.
std::vector<Term> normalize(const TermOrder& order, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.exp.width() != order.width()) {
      throw Error(ErrorCode::WidthMismatch,
                  "term width does not match the polynomial ring");
    }
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.exp, b.exp);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(TermOrder order, std::vector<Term> terms)
    : order_(order), terms_(normalize(order_, std::move(terms))) {}

Polynomial Polynomial::monomial(const TermOrder& order, Exponent exp,
                                Rational coeff) {
  return Polynomial(order, {Term{std::move(exp), std::move(coeff)}});
}

Polynomial Polynomial::constant(const TermOrder& order, Rational value) {
  return monomial(order, Exponent::zero(order.width()), std::move(value));
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) {
    throw Error(ErrorCode::Validation, "zero polynomial has no leading term");
  }
  return terms_.front();
}

int Polynomial::degree() const {
  int deg = -1;
  for (const Term& t : terms_) deg = std::max(deg, t.exp.degree());
  return deg;
}

bool Polynomial::is_homogeneous() const {
  for (const Term& t : terms_) {
    if (t.exp.degree() != terms_.front().exp.degree()) return false;
  }
  return true;
}

Polynomial Polynomial::with_order(const TermOrder& order) const {
  if (order == order_) return *this;
  return Polynomial(order, terms_);
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (width() != other.width()) return false;
  if (order_ == other.order_) return terms_ == other.terms_;
  return terms_ == other.with_order(order_).terms_;
}

std::string Polynomial::debug_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out << " + ";
    out << rational_to_string(terms_[i].coeff) << "*" << terms_[i].exp.to_string();
  }
  return out.str();
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> terms = a.terms();
  const auto bt = b.with_order(a.order()).terms();
  terms.insert(terms.end(), bt.begin(), bt.end());
  return Polynomial(a.order(), std::move(terms));
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  return poly_add(a, poly_neg(b.with_order(a.order())));
}

Polynomial poly_neg(const Polynomial& a) { return poly_scale(a, -1); }

Polynomial poly_scale(const Polynomial& a, const Rational& c) {
  if (c == 0) return Polynomial(a.order());
  std::vector<Term> terms = a.terms();
  for (Term& t : terms) t.coeff *= c;
  return Polynomial(a.order(), std::move(terms));
}

Polynomial poly_mul_term(const Polynomial& a, const Exponent& exp,
                         const Rational& coeff) {
  if (coeff == 0) return Polynomial(a.order());
  std::vector<Term> terms = a.terms();
  for (Term& t : terms) {
    t.exp = exp_add(t.exp, exp);
    t.coeff *= coeff;
  }
  return Polynomial(a.order(), std::move(terms));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  for (const Term& s : a.terms()) {
    for (const Term& t : b.terms()) {
      terms.push_back(Term{exp_add(s.exp, t.exp), s.coeff * t.coeff});
    }
  }
  return Polynomial(a.order(), std::move(terms));
}

Polynomial poly_pow(const Polynomial& a, int power) {
  assert(power >= 0);
  Polynomial result = Polynomial::constant(a.order(), 1);
  Polynomial base = a;
  while (power > 0) {
    if (power & 1) result = poly_mul(result, base);
    base = poly_mul(base, base);
    power >>= 1;
  }
  return result;
}

Polynomial poly_monic(const Polynomial& a) {
  if (a.is_zero()) return a;
  return poly_scale(a, 1 / a.leading().coeff);
}

Substituter::Substituter(std::vector<Polynomial> images)
    : images_(std::move(images)) {
  if (images_.empty()) {
    throw Error(ErrorCode::Validation, "substitution needs at least one image");
  }
  for (const Polynomial& im : images_) {
    if (im.width() != images_.front().width()) {
      throw Error(ErrorCode::WidthMismatch,
                  "substitution images live in different rings");
    }
  }
}

const Polynomial& Substituter::power(int var, int exponent) const {
  auto key = std::make_pair(var, exponent);
  auto it = power_cache_.find(key);
  if (it != power_cache_.end()) return it->second;
  Polynomial value = poly_pow(images_[var], exponent);
  return power_cache_.emplace(key, std::move(value)).first->second;
}

Polynomial Substituter::apply(const Polynomial& f) const {
  if (f.width() != static_cast<int>(images_.size())) {
    throw Error(ErrorCode::WidthMismatch,
                "substitution arity does not match the source ring");
  }
  const TermOrder& target = images_.front().order();
  Polynomial result(target);
  for (const Term& t : f.terms()) {
    Polynomial image = Polynomial::constant(target, t.coeff);
    for (int j = 0; j < f.width(); ++j) {
      if (t.exp[j] > 0) image = poly_mul(image, power(j, t.exp[j]));
    }
    result = poly_add(result, image);
  }
  return result;
}

}  // namespace bforge
