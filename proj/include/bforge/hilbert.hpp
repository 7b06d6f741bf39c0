#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bforge/errors.hpp"
#include "bforge/monomial_ideal.hpp"
#include "bforge/rational.hpp"

namespace bforge {

// Univariate polynomial over Q in the variable t; coeffs[k] multiplies t^k.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly constant(Rational value);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational eval(const Rational& t) const;

  bool operator==(const RationalPoly& other) const = default;

  // "1/6 t^3 + t^2 - 1/6 t - 2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

RationalPoly poly_add(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_scale(const RationalPoly& a, const Rational& c);
RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b);

// Unique interpolant of degree < #points through (t, value) pairs with
// pairwise distinct t.
RationalPoly interpolate(const std::vector<std::pair<long, Rational>>& points);

// Hilbert function of an ideal: values[d] counts the monomials of degree d
// lying in the ideal, for 0 <= d <= bound.
struct HilbertData {
  int width = 0;
  std::vector<long> values;
  std::optional<RationalPoly> stabilized_polynomial;
  std::optional<int> onset;

  int bound() const { return static_cast<int>(values.size()) - 1; }
  long at(int degree) const { return values.at(static_cast<size_t>(degree)); }

  bool operator==(const HilbertData& other) const {
    return width == other.width && values == other.values;
  }
};

HilbertData hilbert_function(const MonomialIdeal& ideal, int up_to);

// Interpolates width-many consecutive values starting past the generator
// degrees and requires the fit to extend three degrees further; retries with
// a later start before giving up.
RationalPoly hilbert_polynomial(const MonomialIdeal& ideal,
                                const Limits& limits = {});

int default_degree_bound(int max_generator_degree, int width);

// Unique lex ideal whose Hilbert function matches h degreewise up to the
// bound; degrees up to up_to must be present in h.
MonomialIdeal lex_ideal_from_hilbert(const HilbertData& h, int up_to);

// True iff the set is hlex-upward closed within its degree slice, i.e. a
// prefix of the descending hlex enumeration.
bool is_lex_segment(const std::vector<Exponent>& monomials);

}  // namespace bforge
