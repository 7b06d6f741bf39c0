#pragma once

#include <cstdint>
#include <vector>

#include "bforge/errors.hpp"
#include "bforge/ideal.hpp"
#include "bforge/monomial_ideal.hpp"
#include "bforge/polynomial.hpp"
#include "bforge/rational.hpp"

namespace bforge {

// Upper unitriangular change of coordinates with exact rational entries.
// Column j holds the image of the j-th variable.
class UnipotentChange {
 public:
  static UnipotentChange identity(int n);
  static UnipotentChange all_ones(int n);
  // Strict upper entries drawn uniformly from [1, entropy_bound].
  static UnipotentChange random(int n, uint64_t seed, long entropy_bound);

  int size() const { return n_; }
  const Rational& at(int i, int j) const;
  // Seed the entries were drawn from; zero for constructed matrices.
  uint64_t seed() const { return seed_; }
  bool is_identity() const;
  UnipotentChange inverse() const;

 private:
  UnipotentChange(int n, std::vector<Rational> entries, uint64_t seed);

  int n_;
  std::vector<Rational> entries_;
  uint64_t seed_;
};

Polynomial apply_change(const UnipotentChange& g, const Polynomial& f);
Ideal apply_change(const UnipotentChange& g, const Ideal& ideal);

// Seeded generic initial ideal. The result is certified by two independent
// draws that agree on a Borel-fixed candidate; disagreement retries and then
// fails loudly.
MonomialIdeal gin(const Ideal& ideal, const TermOrder& order, uint64_t seed,
                  const Limits& lim = {});

}  // namespace bforge
