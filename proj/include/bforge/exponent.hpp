#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bforge {

// Exponent vector in N^n. Coordinates are 0-based internally; printed forms
// are 1-based. Degree is cached at construction.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::vector<int> entries);

  static Exponent zero(int width);
  static Exponent unit(int width, int var);

  int width() const { return static_cast<int>(entries_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  // Index of the last nonzero coordinate; 0 for the zero vector.
  int max_var() const;

  bool is_zero() const { return degree_ == 0; }

  // Subtract a_{n-1} e_{n-1}; width is unchanged.
  Exponent star() const;

  // First `new_width` coordinates. Requires the support to fit.
  Exponent truncated(int new_width) const;

  // Pad with zero coordinates on the right.
  Exponent extended(int new_width) const;

  bool operator==(const Exponent& other) const { return entries_ == other.entries_; }
  // Entrywise lexicographic; only for use as a container key.
  bool operator<(const Exponent& other) const { return entries_ < other.entries_; }

  std::string to_string() const;

 private:
  std::vector<int> entries_;
  int degree_ = 0;
};

bool divides(const Exponent& a, const Exponent& b);
bool support_within(const Exponent& a, int vars);
bool coprime(const Exponent& a, const Exponent& b);
Exponent exp_add(const Exponent& a, const Exponent& b);
Exponent exp_sub(const Exponent& a, const Exponent& b);
Exponent exp_lcm(const Exponent& a, const Exponent& b);
long weight_of(const Exponent& a, const std::vector<long>& weights);

// Difference vector in Z^n, e.g. a binomial shift.
class SignedExponent {
 public:
  SignedExponent() = default;
  explicit SignedExponent(std::vector<int> entries);

  int width() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  int sum() const;
  bool is_zero() const;
  // Index of the last nonzero coordinate; 0 for the zero vector.
  int max_var() const;

  Exponent plus_part() const;
  Exponent minus_part() const;
  SignedExponent negated() const;
  SignedExponent truncated(int new_width) const;

  bool operator==(const SignedExponent& other) const { return entries_ == other.entries_; }

  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

// a + rho when that stays in N^n.
std::optional<Exponent> shifted(const Exponent& a, const SignedExponent& rho);

// All of N^width of the given total degree, in descending hlex order.
std::vector<Exponent> monomials_of_degree(int width, int degree);

}  // namespace bforge
