#pragma once

#include <vector>

#include "bforge/errors.hpp"
#include "bforge/hilbert.hpp"
#include "bforge/ideal.hpp"
#include "bforge/polynomial.hpp"

namespace bforge {

// Deterministic reduction: always rewrites the highest reducible term, using
// the first listed divisor.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const TermOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const TermOrder& order);

// Buchberger completion returning the reduced basis. Pairs are processed by
// ascending lcm degree; hilbert_hint enables degreewise early discards and
// requires homogeneous generators plus exact Hilbert values of the generated
// ideal from degree 0 through the hint's end.
std::vector<Polynomial> buchberger(
    const std::vector<Polynomial>& generators, const TermOrder& order,
    const Limits& lim = {}, const std::vector<long>* hilbert_hint = nullptr);

// Criteria-free oracle: reduces every S-pair.
bool is_groebner_basis(const std::vector<Polynomial>& basis,
                       const TermOrder& order, const Limits& lim = {});

Ideal colon_var(const Ideal& ideal, int var, const Limits& lim = {});
Ideal colon_var_power(const Ideal& ideal, int var, const Limits& lim = {});

Ideal ideal_intersection(const Ideal& a, const Ideal& b,
                         const Limits& lim = {});

// Saturation by the irrelevant ideal. Monomial and Borel-position inputs run
// combinatorially or by a single variable colon; otherwise a seeded generic
// change of coordinates is certified by two independent agreeing draws.
Ideal saturate(const Ideal& ideal, uint64_t seed = 1, const Limits& lim = {});

// Intersection with the subring on the first `keep` variables, returned in
// that smaller ring.
Ideal eliminate_to_subring(const Ideal& ideal, int keep,
                           const Limits& lim = {});

Ideal extend_ring(const Ideal& ideal, int width);

HilbertData hilbert_function_ideal(const Ideal& ideal, int up_to,
                                   const Limits& lim = {});

// Flat one-parameter family z |-> I_z with I_1 the base ideal and I_0 its
// initial ideal. The parameter is the last variable of the family ring.
struct DegenerationFamily {
  Ideal base;
  std::vector<long> weights;
  std::vector<Polynomial> family;

  Ideal fiber(const Rational& value) const;
};

DegenerationFamily weight_degeneration(const Ideal& ideal,
                                       const TermOrder& order,
                                       const std::vector<Rational>& samples,
                                       const Limits& lim = {});

}  // namespace bforge
