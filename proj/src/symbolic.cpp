#include "bforge/symbolic.hpp"

#include <sstream>

namespace bforge {

int symbolic_width(int n) { return n * (n + 1) / 2 + n; }

int y_index(int n, int i, int j) {
  if (i < 0 || j < i || j >= n) {
    throw Error(ErrorCode::Validation, "triangular slot out of range");
  }
  return j * (j + 1) / 2 + i;
}

int x_index(int n, int k) {
  if (k < 0 || k >= n) {
    throw Error(ErrorCode::Validation, "variable index out of range");
  }
  return n * (n + 1) / 2 + k;
}

TermOrder symbolic_order(int n) { return TermOrder::rlex(symbolic_width(n)); }

Exponent y_matrix_exponent(int n, const UpperTriangular& m) {
  if (m.size() != n) {
    throw Error(ErrorCode::WidthMismatch, "matrix size does not match ring");
  }
  std::vector<int> e(symbolic_width(n), 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) e[y_index(n, i, j)] = m.at(i, j);
  }
  return Exponent(e);
}

Exponent y_diagonal_exponent(int n, const Exponent& diag) {
  if (diag.width() != n) {
    throw Error(ErrorCode::WidthMismatch, "diagonal width does not match ring");
  }
  std::vector<int> e(symbolic_width(n), 0);
  for (int i = 0; i < n; ++i) e[y_index(n, i, i)] = diag[i];
  return Exponent(e);
}

Polynomial phi_expand(int n, const Exponent& b, const Limits& lim) {
  if (b.width() != n) {
    throw Error(ErrorCode::WidthMismatch, "exponent width does not match ring");
  }
  long estimate = 1;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < b[j]; ++k) {
      estimate *= j + 1;
      if (estimate > lim.enum_budget) {
        throw Error(ErrorCode::Budget, "expansion budget exhausted");
      }
    }
  }

  const TermOrder order = symbolic_order(n);
  const int width = symbolic_width(n);
  std::vector<Polynomial> images;
  images.reserve(n);
  for (int j = 0; j < n; ++j) {
    std::vector<Term> terms;
    for (int i = 0; i <= j; ++i) {
      std::vector<int> e(width, 0);
      e[y_index(n, i, j)] = 1;
      e[x_index(n, i)] = 1;
      terms.push_back(Term{Exponent(e), Rational(1)});
    }
    images.push_back(Polynomial(order, std::move(terms)));
  }

  Substituter sub(std::move(images));
  Polynomial source = Polynomial::monomial(TermOrder::rlex(n), b);
  return sub.apply(source);
}

Polynomial alpha_coefficient(const Exponent& a, const Exponent& b,
                             const Limits& lim) {
  if (a.width() != b.width()) {
    throw Error(ErrorCode::WidthMismatch, "exponent widths differ");
  }
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "exponents have different degrees");
  }
  const int n = a.width();
  std::vector<Term> terms;
  for (const UpperTriangular& m : enumerate_U(a, b, lim)) {
    terms.push_back(Term{y_matrix_exponent(n, m),
                         Rational(matrix_multiplicity(m))});
  }
  return Polynomial(symbolic_order(n), std::move(terms));
}

Integer matrix_multiplicity(const UpperTriangular& m) {
  Integer result = 1;
  for (int j = 0; j < m.size(); ++j) {
    std::vector<int> parts;
    parts.reserve(j + 1);
    for (int i = 0; i <= j; ++i) parts.push_back(m.at(i, j));
    result *= multinomial_coeff(parts);
  }
  return result;
}

namespace {

void check_move_inputs(const Exponent& b, const Exponent& c,
                       const SignedExponent& move) {
  if (b.width() != c.width() || move.width() != b.width()) {
    throw Error(ErrorCode::WidthMismatch, "widths differ");
  }
  if (b.degree() != c.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "exponents have different degrees");
  }
  if (move.sum() != 0) {
    throw Error(ErrorCode::HypothesisViolated,
                "move must preserve total degree");
  }
}

}  // namespace

Polynomial shift_factor(const Exponent& b, const Exponent& c,
                        const SignedExponent& move, const Limits& lim,
                        bool force) {
  check_move_inputs(b, c, move);
  const int n = b.width();
  if (!force) {
    const int pivot = move.is_zero() ? 0 : move.max_var();
    for (int i = 0; i < pivot; ++i) {
      if (b[i] != c[i]) {
        throw Error(ErrorCode::HypothesisViolated,
                    "inputs disagree below the move's pivot");
      }
    }
  }
  SignedExponent negative_diag(std::vector<int>(move.width(), 0));
  {
    std::vector<int> e(move.width());
    const Exponent minus = move.minus_part();
    for (int i = 0; i < move.width(); ++i) e[i] = -minus[i];
    negative_diag = SignedExponent(e);
  }

  std::vector<Term> terms;
  for (const UpperTriangular& m : enumerate_U(b, c, lim)) {
    auto shifted_matrix = m.diag_shifted(negative_diag);
    if (!shifted_matrix) {
      std::ostringstream msg;
      msg << "witness matrix " << m.to_string()
          << " cannot absorb the move's negative diagonal";
      throw Error(ErrorCode::HypothesisViolated, msg.str());
    }
    terms.push_back(Term{y_matrix_exponent(n, *shifted_matrix),
                         Rational(matrix_multiplicity(m))});
  }
  return Polynomial(symbolic_order(n), std::move(terms));
}

AlphaShiftReport verify_alpha_shift(const Exponent& b, const Exponent& c,
                                    const SignedExponent& move,
                                    const Limits& lim, bool force) {
  check_move_inputs(b, c, move);
  const int n = b.width();
  auto b_shifted = shifted(b, move);
  auto c_shifted = shifted(c, move);
  if (!b_shifted || !c_shifted) {
    throw Error(ErrorCode::HypothesisViolated,
                "shifted exponents leave the nonnegative orthant");
  }
  bool prefix_ok = true;
  const int pivot = move.is_zero() ? 0 : move.max_var();
  for (int i = 0; i < pivot && prefix_ok; ++i) prefix_ok = b[i] == c[i];
  if (!prefix_ok && !force) {
    throw Error(ErrorCode::HypothesisViolated,
                "inputs disagree below the move's pivot");
  }

  Polynomial factor = shift_factor(b, c, move, lim, force);
  AlphaShiftReport report{
      alpha_coefficient(b, c, lim),
      poly_mul_term(factor, y_diagonal_exponent(n, move.minus_part()), 1),
      alpha_coefficient(*b_shifted, *c_shifted, lim),
      poly_mul_term(factor, y_diagonal_exponent(n, move.plus_part()), 1),
      false,
      false,
      prefix_ok};
  report.low_matches = report.low_alpha == report.low_product;
  report.high_matches = report.high_alpha == report.high_product;
  return report;
}

}  // namespace bforge
