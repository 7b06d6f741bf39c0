#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bforge/errors.hpp"
#include "bforge/exponent.hpp"
#include "bforge/ideal.hpp"
#include "bforge/monomial_ideal.hpp"

namespace bforge {

// One named condition of a validation or lemma report.
struct Check {
  std::string id;
  bool ok = false;
  std::string detail;
};

struct SystemReport {
  std::vector<Check> items;
  // Present when the pivot entry of the move is negative: the equivalent
  // system with C replaced by C+rho and the move negated.
  std::optional<std::string> normalization_hint;

  bool all_ok() const;
};

// Conditions for (A, C, rho) to form a binomial system of degree d:
// C+rho stays inside the degree-d slice, A, C and C+rho are pairwise
// disjoint, and both A u C and A u (C+rho) are Borel sets. Shape problems
// (wrong widths or degrees) fail a leading "shape" item and suppress the
// rest.
SystemReport validate_system(int n, int d, const std::set<Exponent>& a_set,
                             const std::set<Exponent>& c_set,
                             const SignedExponent& rho);

// Combinatorial datum (A, C, rho) generating the ideal (X^A, X^c - X^{c+rho}).
// Construction enforces the validation conditions.
class BinomialSystem {
 public:
  BinomialSystem(int n, int d, std::set<Exponent> a_set,
                 std::set<Exponent> c_set, SignedExponent rho);

  int width() const { return n_; }
  int degree() const { return d_; }
  const std::set<Exponent>& monomial_set() const { return a_; }
  const std::set<Exponent>& binomial_set() const { return c_; }
  const SignedExponent& move() const { return rho_; }

  // 1-based index of the last nonzero move entry; 1 for the zero move.
  int pivot() const;
  int pivot_value() const { return rho_[pivot() - 1]; }

  // All pairs of C agree below the pivot. Guarantees unipotent fixedness of
  // the generated ideal.
  bool is_good() const;

  // The same system with C shifted along the move and the move negated.
  BinomialSystem flipped() const;
  // Self when the pivot entry is positive or C is empty, else flipped().
  BinomialSystem oriented() const;

  // Generators X^a (descending rlex) followed by X^c - X^{c+rho}.
  Ideal ideal_of() const;

  bool operator==(const BinomialSystem& other) const;

 private:
  int n_;
  int d_;
  std::set<Exponent> a_;
  std::set<Exponent> c_;
  SignedExponent rho_;
};

// Closed-form Groebner data of the system's ideal: the generators themselves
// are an rlex basis, the initial ideal is spanned by A u C, and the
// saturation has the star-truncated basis. Each formula is cross-checked
// against the division engine before being returned.
struct GbFormulas {
  std::vector<Polynomial> basis;
  MonomialIdeal initial;
  std::vector<Polynomial> saturated_basis;
  Ideal saturated;
};

GbFormulas gb_formulas(const BinomialSystem& sys, const Limits& lim = {},
                       bool cross_check = true);

// Saturated intersection with the subring on the first i variables, as a
// width-i ideal. Widths at or above the pivot keep the binomials; below the
// pivot only the monomial data of the initial ideal survives.
Ideal section_ideal(const BinomialSystem& sys, int i, const Limits& lim = {});

// Ascending chain F_0 = F c F_1 = F^sat c ... c F_n = S whose quotients are
// zero or Cohen-Macaulay of strictly increasing dimension. steps[i] has
// width n; binomial_branch[i] records which section formula produced it.
struct Filtration {
  BinomialSystem system;
  int bound;
  std::vector<Ideal> steps;
  std::vector<bool> binomial_branch;
};

Filtration build_filtration(const BinomialSystem& sys, int bound,
                            const Limits& lim = {});

// Structural evidence for the filtration lemma: generator supports (a), the
// seam inclusion at the pivot (c), all inclusions (d), the explicit radical
// power (e), the pivot-free initial generators (f), and the degreewise
// dimension ladder of the quotients.
struct FiltrationReport {
  std::vector<Check> items;

  bool all_ok() const;
};

FiltrationReport check_filtration(const BinomialSystem& sys, int bound = 0,
                                  const Limits& lim = {});

}  // namespace bforge
