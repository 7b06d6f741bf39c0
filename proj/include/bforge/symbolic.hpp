#pragma once

#include <vector>

#include "bforge/borel.hpp"
#include "bforge/errors.hpp"
#include "bforge/polynomial.hpp"
#include "bforge/rational.hpp"

namespace bforge {

// Combined ring for the generic substitution on n variables: one Y variable
// per upper triangular slot (i, j), packed column by column, then the X
// block. Every symbolic result is an ordinary polynomial in this ring.
int symbolic_width(int n);
int y_index(int n, int i, int j);
int x_index(int n, int k);
TermOrder symbolic_order(int n);

Exponent y_matrix_exponent(int n, const UpperTriangular& m);
Exponent y_diagonal_exponent(int n, const Exponent& diag);

// Expansion of X^b under X_j -> sum_{i <= j} Y_ij X_i.
Polynomial phi_expand(int n, const Exponent& b, const Limits& lim = {});

// Y-coefficient of X^a in the expansion of X^b: a sum over the witness
// matrices with row sums a and column sums b, weighted by their column
// multinomials. Zero exactly when a fails to dominate b.
Polynomial alpha_coefficient(const Exponent& a, const Exponent& b,
                             const Limits& lim = {});

Integer matrix_multiplicity(const UpperTriangular& m);

// Common factor of the coefficient pair attached to a diagonal move: the
// alpha sum for (b, c) with the move's negative diagonal divided out. The
// inputs must agree below the move's pivot; force skips that check and fails
// only when a witness matrix cannot absorb the division.
Polynomial shift_factor(const Exponent& b, const Exponent& c,
                        const SignedExponent& move, const Limits& lim = {},
                        bool force = false);

struct AlphaShiftReport {
  Polynomial low_alpha;
  Polynomial low_product;
  Polynomial high_alpha;
  Polynomial high_product;
  bool low_matches;
  bool high_matches;
  bool hypothesis_held;
};

// Evaluates both factorization identities for a diagonal move: the plain
// coefficient against factor * Y^(negative diagonal), and the shifted
// coefficient against factor * Y^(positive diagonal).
AlphaShiftReport verify_alpha_shift(const Exponent& b, const Exponent& c,
                                    const SignedExponent& move,
                                    const Limits& lim = {},
                                    bool force = false);

}  // namespace bforge
