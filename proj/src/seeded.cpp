#include "bforge/seeded.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "bforge/borel.hpp"
#include "bforge/rng.hpp"

namespace bforge {

namespace {

Rational small_nonzero(Rng& rng) {
  long v = rng.uniform(1, 6);
  return v <= 3 ? Rational(v - 4) : Rational(v - 3);
}

// C rows sharing c's entries below the pivot, with the spare degree spread
// over the tail; the shared prefix already covers the move's negative part,
// so the shifted row stays in N^n.
Exponent tail_variant(Rng& rng, const Exponent& base, int pivot, int n) {
  std::vector<int> row(static_cast<size_t>(n), 0);
  int spare = 0;
  for (int i = 0; i < n; ++i) {
    if (i < pivot - 1) {
      row[static_cast<size_t>(i)] = base[i];
    } else {
      spare += base[i];
    }
  }
  for (int k = 0; k < spare; ++k) {
    row[static_cast<size_t>(rng.uniform(pivot - 1, n - 1))] += 1;
  }
  return Exponent(std::move(row));
}

std::optional<BinomialSystem> attempt_draw(int n, int d, std::uint64_t seed,
                                           bool require_good) {
  Rng rng(seed);

  // Elementary move: +amount at the pivot, the balance below it, with an
  // optional extra transfer for variety. Positive pivot value keeps the
  // drawn C on the slow side of the move.
  int pivot = static_cast<int>(rng.uniform(2, n));
  int amount = static_cast<int>(rng.uniform(1, std::min(2, d)));
  std::vector<int> move(static_cast<size_t>(n), 0);
  move[static_cast<size_t>(pivot - 1)] = amount;
  move[static_cast<size_t>(rng.uniform(0, pivot - 2))] -= amount;
  if (pivot >= 3 && amount + 1 <= d && rng.uniform(0, 1) == 1) {
    int hi = static_cast<int>(rng.uniform(1, pivot - 2));
    int lo = static_cast<int>(rng.uniform(0, hi - 1));
    move[static_cast<size_t>(hi)] += 1;
    move[static_cast<size_t>(lo)] -= 1;
  }
  SignedExponent rho{std::vector<int>(move)};
  if (rho.max_var() != pivot - 1) return std::nullopt;

  // First C row: cover the move's negative part, then spread the rest.
  std::vector<int> base(static_cast<size_t>(n), 0);
  int used = 0;
  for (int i = 0; i < n; ++i) {
    if (move[static_cast<size_t>(i)] < 0) {
      base[static_cast<size_t>(i)] = -move[static_cast<size_t>(i)];
      used += base[static_cast<size_t>(i)];
    }
  }
  if (used > d) return std::nullopt;
  for (int k = used; k < d; ++k) {
    base[static_cast<size_t>(rng.uniform(0, n - 1))] += 1;
  }
  Exponent first(std::move(base));

  std::set<Exponent> c_rows{first};
  if (rng.uniform(0, 1) == 1) {
    if (require_good) {
      c_rows.insert(tail_variant(rng, first, pivot, n));
    } else {
      std::vector<int> row(static_cast<size_t>(n), 0);
      int budget = d - used;
      for (int i = 0; i < n; ++i) {
        if (move[static_cast<size_t>(i)] < 0)
          row[static_cast<size_t>(i)] = -move[static_cast<size_t>(i)];
      }
      for (int k = 0; k < budget; ++k) {
        row[static_cast<size_t>(rng.uniform(0, n - 1))] += 1;
      }
      c_rows.insert(Exponent(std::move(row)));
    }
  }

  std::set<Exponent> shifted_rows;
  for (const Exponent& c : c_rows) {
    auto moved = shifted(c, rho);
    if (!moved) return std::nullopt;
    shifted_rows.insert(*moved);
  }
  for (const Exponent& c : c_rows) {
    if (shifted_rows.count(c)) return std::nullopt;
  }

  std::set<Exponent> removed = c_rows;
  removed.insert(shifted_rows.begin(), shifted_rows.end());
  std::set<Exponent> closure = borel_closure(removed);
  std::set<Exponent> a_rows;
  for (const Exponent& e : closure) {
    if (!removed.count(e)) a_rows.insert(e);
  }

  if (!validate_system(n, d, a_rows, c_rows, rho).all_ok()) return std::nullopt;
  BinomialSystem sys(n, d, std::move(a_rows), std::move(c_rows), rho);
  if (require_good && !sys.is_good()) return std::nullopt;
  return sys.oriented();
}

}  // namespace

Ideal random_homogeneous_ideal(int width, int max_gens, int max_degree,
                               std::uint64_t seed) {
  if (width < 1 || max_gens < 1 || max_degree < 1)
    throw Error(ErrorCode::Validation, "ideal shape parameters must be positive");
  Rng rng(seed);
  TermOrder order = TermOrder::rlex(width);
  long count = rng.uniform(1, max_gens);
  std::vector<Polynomial> gens;
  for (long g = 0; g < count; ++g) {
    int degree = static_cast<int>(rng.uniform(1, max_degree));
    std::vector<Exponent> pool = monomials_of_degree(width, degree);
    long want = rng.uniform(1, std::min<long>(3, static_cast<long>(pool.size())));
    std::set<long> picked;
    while (static_cast<long>(picked.size()) < want) {
      picked.insert(rng.uniform(0, static_cast<long>(pool.size()) - 1));
    }
    std::vector<Term> terms;
    for (long idx : picked) {
      terms.push_back(Term{pool[static_cast<size_t>(idx)], small_nonzero(rng)});
    }
    gens.emplace_back(order, std::move(terms));
  }
  return Ideal(width, std::move(gens));
}

BinomialSystem random_binomial_system(int n, int d, std::uint64_t seed,
                                      bool require_good) {
  if (n < 3 || d < 2)
    throw Error(ErrorCode::Validation,
                "system generation needs at least 3 variables and degree 2");
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    auto sys = attempt_draw(n, d, derive_seed(seed, attempt), require_good);
    if (sys) return *std::move(sys);
  }

  // Deterministic fallback: a single row with everything at the second
  // variable and the move that splits one unit to each neighbour. The row
  // and its shift are incomparable, so the closure complement always
  // validates.
  std::vector<int> move(static_cast<size_t>(n), 0);
  move[0] = 1;
  move[1] = -2;
  move[2] = 1;
  std::vector<int> row(static_cast<size_t>(n), 0);
  row[1] = d;
  SignedExponent rho{std::move(move)};
  Exponent c(std::move(row));
  std::set<Exponent> removed{c, *shifted(c, rho)};
  std::set<Exponent> closure = borel_closure(removed);
  std::set<Exponent> a_rows;
  for (const Exponent& e : closure) {
    if (!removed.count(e)) a_rows.insert(e);
  }
  return BinomialSystem(n, d, std::move(a_rows), {c}, rho).oriented();
}

}  // namespace bforge
