#pragma once

#include <set>
#include <string>
#include <vector>

#include "bforge/exponent.hpp"

namespace bforge {

// Monomial ideal given by its minimal generators. Construction minimalizes
// and sorts descending by rlex, so equal ideals compare equal.
class MonomialIdeal {
 public:
  MonomialIdeal(int width, std::vector<Exponent> generators);

  static MonomialIdeal zero(int width) { return MonomialIdeal(width, {}); }
  static MonomialIdeal unit(int width) {
    return MonomialIdeal(width, {Exponent::zero(width)});
  }

  int width() const { return width_; }
  const std::vector<Exponent>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return !gens_.empty() && gens_.front().is_zero(); }

  bool contains(const Exponent& e) const;
  bool contains(const MonomialIdeal& other) const;

  int max_generator_degree() const;

  bool operator==(const MonomialIdeal& other) const = default;

 private:
  int width_;
  std::vector<Exponent> gens_;
};

MonomialIdeal mi_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mi_colon_var(const MonomialIdeal& ideal, int var);
MonomialIdeal mi_colon_var_power(const MonomialIdeal& ideal, int var);

// Saturation with respect to the irrelevant ideal: intersect the colons by
// each variable's infinite power.
MonomialIdeal saturate_monomial(const MonomialIdeal& ideal);

// Borel ideal test via the finite move check on minimal generators. A bound
// up_to >= 0 must dominate the generator degrees; it only gates the
// equivalent graded-piece reading and does not change the answer.
bool is_borel_ideal(const MonomialIdeal& ideal, int up_to = -1);

// Generators supported on the first `vars` variables, as an ideal of the
// subring. Valid because a divisor of a subring monomial stays in the subring.
MonomialIdeal restrict_to_subring(const MonomialIdeal& ideal, int vars);

MonomialIdeal extend_to_width(const MonomialIdeal& ideal, int width);

MonomialIdeal ideal_from_exponents(int width, const std::set<Exponent>& gens);

}  // namespace bforge
