#pragma once

#include <set>
#include <vector>

#include "bforge/errors.hpp"
#include "bforge/exponent.hpp"

namespace bforge {

// Upper triangular matrix over N. Entries below the diagonal stay zero.
class UpperTriangular {
 public:
  explicit UpperTriangular(int size)
      : size_(size), entries_(static_cast<size_t>(size) * size, 0) {}

  int size() const { return size_; }
  int at(int row, int col) const { return entries_[index(row, col)]; }
  void set(int row, int col, int value);

  Exponent row_sums() const;
  Exponent col_sums() const;

  bool is_nonnegative() const;

  // Adds rho to the diagonal; nullopt when an entry would go negative.
  std::optional<UpperTriangular> diag_shifted(const SignedExponent& rho) const;

  bool operator==(const UpperTriangular& other) const = default;
  bool operator<(const UpperTriangular& other) const {
    return entries_ < other.entries_;
  }

  std::string to_string() const;

 private:
  size_t index(int row, int col) const {
    return static_cast<size_t>(row) * size_ + col;
  }

  int size_;
  std::vector<int> entries_;
};

// a dominates b in the Borel order: a - b is an N-combination of the moves
// e_j - e_{j+1}, equivalently every prefix sum of a - b is nonnegative.
bool borel_ge(const Exponent& a, const Exponent& b);

struct BorelWitness {
  bool comparable = false;
  // alphas[k] is the k-th prefix sum of a - b; size width + 1.
  std::vector<int> alphas;
  UpperTriangular matrix{0};
  // Number of repair steps taken from the seed matrix; equals the seed's
  // diagonal deficiency.
  int repair_steps = 0;
};

// Constructive certificate for borel_ge: an upper triangular N-matrix with
// row sums a and column sums b, built by repairing the two-diagonal seed.
BorelWitness borel_witness(const Exponent& a, const Exponent& b);

// All upper triangular N-matrices with row sums a and column sums b, in
// ascending entrywise order. Search nodes are charged against enum_budget.
std::vector<UpperTriangular> enumerate_U(const Exponent& a, const Exponent& b,
                                         const Limits& limits = {});

// Smallest Borel set containing the input.
std::set<Exponent> borel_closure(const std::set<Exponent>& input);

// Closed under every single move e_j -> e_i with i < j.
bool is_borel_set(const std::set<Exponent>& input);

}  // namespace bforge
