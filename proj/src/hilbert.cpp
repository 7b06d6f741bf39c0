#include "bforge/hilbert.hpp"

#include <algorithm>
#include <set>

namespace bforge {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::constant(Rational value) {
  return RationalPoly(std::vector<Rational>{std::move(value)});
}

Rational RationalPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

std::string RationalPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(c);
    std::string power =
        k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (power.empty()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += power;
    } else {
      out += rational_to_string(mag) + " " + power;
    }
  }
  return out;
}

RationalPoly poly_add(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> coeffs(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < a.coeffs().size(); ++i) coeffs[i] += a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) coeffs[i] += b.coeffs()[i];
  return RationalPoly(std::move(coeffs));
}

RationalPoly poly_scale(const RationalPoly& a, const Rational& c) {
  std::vector<Rational> coeffs = a.coeffs();
  for (Rational& x : coeffs) x *= c;
  return RationalPoly(std::move(coeffs));
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return RationalPoly();
  std::vector<Rational> coeffs(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    for (size_t j = 0; j < b.coeffs().size(); ++j) {
      coeffs[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return RationalPoly(std::move(coeffs));
}

RationalPoly interpolate(const std::vector<std::pair<long, Rational>>& points) {
  RationalPoly result;
  for (size_t i = 0; i < points.size(); ++i) {
    RationalPoly basis = RationalPoly::constant(1);
    Rational denom = 1;
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = poly_mul(basis,
                       RationalPoly({Rational(-points[j].first), Rational(1)}));
      denom *= Rational(points[i].first - points[j].first);
    }
    result = poly_add(result, poly_scale(basis, points[i].second / denom));
  }
  return result;
}

HilbertData hilbert_function(const MonomialIdeal& ideal, int up_to) {
  HilbertData data;
  data.width = ideal.width();
  data.values.reserve(static_cast<size_t>(up_to) + 1);
  for (int d = 0; d <= up_to; ++d) {
    long count = 0;
    for (const Exponent& e : monomials_of_degree(ideal.width(), d)) {
      if (ideal.contains(e)) ++count;
    }
    data.values.push_back(count);
  }
  return data;
}

RationalPoly hilbert_polynomial(const MonomialIdeal& ideal, const Limits& limits) {
  const int n = ideal.width();
  const long start = ideal.max_generator_degree() + n + 3;
  const int attempts = limits.retries + 1;
  const int top = static_cast<int>(start) + 3 * (attempts - 1) + n + 2;
  HilbertData h = hilbert_function(ideal, top);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    long base = start + 3 * attempt;
    std::vector<std::pair<long, Rational>> points;
    for (int k = 0; k < n; ++k) {
      points.emplace_back(base + k, Rational(h.at(static_cast<int>(base) + k)));
    }
    RationalPoly fit = interpolate(points);
    bool extends = true;
    for (int k = 0; k < 3; ++k) {
      long d = base + n + k;
      if (fit.eval(Rational(d)) != Rational(h.at(static_cast<int>(d)))) {
        extends = false;
        break;
      }
    }
    if (extends) return fit;
  }
  throw Error(ErrorCode::Unstabilized,
              "Hilbert function did not stabilize within the retry budget");
}

int default_degree_bound(int max_generator_degree, int width) {
  return std::max(10, max_generator_degree + width + 6);
}

MonomialIdeal lex_ideal_from_hilbert(const HilbertData& h, int up_to) {
  const int n = h.width;
  if (up_to > h.bound()) {
    throw Error(ErrorCode::Validation,
                "requested bound exceeds the given Hilbert data");
  }
  std::vector<std::vector<Exponent>> segments;
  std::vector<std::set<Exponent>> members;
  for (int d = 0; d <= up_to; ++d) {
    std::vector<Exponent> slice = monomials_of_degree(n, d);
    long want = h.at(d);
    if (want < 0 || want > static_cast<long>(slice.size())) {
      throw Error(ErrorCode::InadmissibleHilbertFunction,
                  "value at degree " + std::to_string(d) + " out of range");
    }
    slice.resize(static_cast<size_t>(want));
    members.emplace_back(slice.begin(), slice.end());
    segments.push_back(std::move(slice));
  }
  for (int d = 0; d < up_to; ++d) {
    for (const Exponent& a : segments[static_cast<size_t>(d)]) {
      for (int j = 0; j < n; ++j) {
        Exponent up = exp_add(a, Exponent::unit(n, j));
        if (!members[static_cast<size_t>(d) + 1].count(up)) {
          throw Error(ErrorCode::InadmissibleHilbertFunction,
                      "segment union not closed under multiplication at degree " +
                          std::to_string(d + 1));
        }
      }
    }
  }
  std::vector<Exponent> gens;
  for (int d = 0; d <= up_to; ++d) {
    for (const Exponent& a : segments[static_cast<size_t>(d)]) {
      bool fresh = true;
      if (d > 0) {
        for (int j = 0; j < n && fresh; ++j) {
          if (a[j] > 0 &&
              members[static_cast<size_t>(d) - 1].count(
                  exp_sub(a, Exponent::unit(n, j)))) {
            fresh = false;
          }
        }
      }
      if (fresh) gens.push_back(a);
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

bool is_lex_segment(const std::vector<Exponent>& monomials) {
  if (monomials.empty()) return true;
  const int n = monomials.front().width();
  const int d = monomials.front().degree();
  for (const Exponent& e : monomials) {
    if (e.width() != n) throw Error(ErrorCode::WidthMismatch, "mixed widths");
    if (e.degree() != d) {
      throw Error(ErrorCode::DegreeMismatch, "lex segment test needs one degree");
    }
  }
  std::set<Exponent> given(monomials.begin(), monomials.end());
  std::vector<Exponent> slice = monomials_of_degree(n, d);
  std::set<Exponent> prefix(slice.begin(), slice.begin() + static_cast<long>(given.size()));
  return prefix == given;
}

}  // namespace bforge
