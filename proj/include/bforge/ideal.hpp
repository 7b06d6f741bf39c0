#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "bforge/errors.hpp"
#include "bforge/monomial_ideal.hpp"
#include "bforge/polynomial.hpp"

namespace bforge {

// Polynomial ideal given by generators, with cached reduced bases per order.
// The cache makes repeated order-sensitive queries against one ideal cheap;
// it never changes the ideal itself.
class Ideal {
 public:
  explicit Ideal(int width) : width_(width) {}
  Ideal(int width, std::vector<Polynomial> generators);

  Ideal(const Ideal& other);
  Ideal& operator=(const Ideal& other);

  static Ideal zero(int width) { return Ideal(width); }
  static Ideal unit(int width);
  static Ideal from_monomial(const MonomialIdeal& m);

  int width() const { return width_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool all_monomial() const;
  int max_generator_degree() const;
  bool is_homogeneous() const;

  // Only valid when every generator is a monomial.
  MonomialIdeal to_monomial() const;

  // Unique reduced Groebner basis for the order, monic and sorted by
  // descending leading term. hilbert_hint, when given, must hold the exact
  // Hilbert function values of this ideal starting at degree 0.
  const std::vector<Polynomial>& reduced_basis(
      const TermOrder& order, const Limits& lim = {},
      const std::vector<long>* hilbert_hint = nullptr) const;

  MonomialIdeal initial_ideal(const TermOrder& order,
                              const Limits& lim = {}) const;

  bool contains(const Polynomial& f, const Limits& lim = {}) const;
  bool equals(const Ideal& other, const Limits& lim = {}) const;

 private:
  int width_;
  std::vector<Polynomial> generators_;
  mutable std::map<TermOrder, std::vector<Polynomial>> basis_cache_;
  mutable std::mutex cache_mutex_;
};

}  // namespace bforge
