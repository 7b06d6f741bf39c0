#include "bforge/unipotent.hpp"

#include <sstream>

#include "bforge/borel.hpp"
#include "bforge/groebner.hpp"
#include "bforge/rng.hpp"

namespace bforge {

UnipotentChange::UnipotentChange(int n, std::vector<Rational> entries,
                                 uint64_t seed)
    : n_(n), entries_(std::move(entries)), seed_(seed) {}

UnipotentChange UnipotentChange::identity(int n) {
  std::vector<Rational> entries(n * n, Rational(0));
  for (int i = 0; i < n; ++i) entries[i * n + i] = 1;
  return UnipotentChange(n, std::move(entries), 0);
}

UnipotentChange UnipotentChange::all_ones(int n) {
  std::vector<Rational> entries(n * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) entries[i * n + j] = 1;
  }
  return UnipotentChange(n, std::move(entries), 0);
}

UnipotentChange UnipotentChange::random(int n, uint64_t seed,
                                        long entropy_bound) {
  if (entropy_bound < 1) {
    throw Error(ErrorCode::Validation, "entropy bound must be positive");
  }
  Rng rng(seed);
  std::vector<Rational> entries(n * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    entries[i * n + i] = 1;
    for (int j = i + 1; j < n; ++j) {
      entries[i * n + j] =
          Rational(static_cast<long>(rng.uniform(1, entropy_bound)));
    }
  }
  return UnipotentChange(n, std::move(entries), seed);
}

const Rational& UnipotentChange::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw Error(ErrorCode::Validation, "matrix index out of range");
  }
  return entries_[i * n_ + j];
}

bool UnipotentChange::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (entries_[i * n_ + j] != 0) return false;
    }
  }
  return true;
}

UnipotentChange UnipotentChange::inverse() const {
  // Back substitution column by column; the diagonal stays one.
  std::vector<Rational> inv(n_ * n_, Rational(0));
  for (int j = 0; j < n_; ++j) {
    inv[j * n_ + j] = 1;
    for (int i = j - 1; i >= 0; --i) {
      Rational sum = 0;
      for (int k = i + 1; k <= j; ++k) {
        sum += entries_[i * n_ + k] * inv[k * n_ + j];
      }
      inv[i * n_ + j] = -sum;
    }
  }
  return UnipotentChange(n_, std::move(inv), 0);
}

namespace {

Substituter change_substituter(const UnipotentChange& g,
                               const TermOrder& order) {
  const int n = g.size();
  std::vector<Polynomial> images;
  images.reserve(n);
  for (int j = 0; j < n; ++j) {
    std::vector<Term> terms;
    for (int i = 0; i <= j; ++i) {
      if (g.at(i, j) != 0) terms.push_back(Term{Exponent::unit(n, i), g.at(i, j)});
    }
    images.push_back(Polynomial(order, std::move(terms)));
  }
  return Substituter(std::move(images));
}

}  // namespace

Polynomial apply_change(const UnipotentChange& g, const Polynomial& f) {
  if (g.size() != f.width()) {
    throw Error(ErrorCode::WidthMismatch,
                "change of coordinates does not match the ring");
  }
  return change_substituter(g, f.order()).apply(f);
}

Ideal apply_change(const UnipotentChange& g, const Ideal& ideal) {
  if (g.size() != ideal.width()) {
    throw Error(ErrorCode::WidthMismatch,
                "change of coordinates does not match the ring");
  }
  Substituter sub = change_substituter(g, TermOrder::rlex(ideal.width()));
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Polynomial& f : ideal.generators()) {
    gens.push_back(sub.apply(f.with_order(TermOrder::rlex(ideal.width()))));
  }
  return Ideal(ideal.width(), std::move(gens));
}

namespace {

std::string describe_candidate(const MonomialIdeal& m) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < m.generators().size(); ++i) {
    if (i > 0) out << ", ";
    out << m.generators()[i].to_string();
  }
  out << "}";
  return out.str();
}

}  // namespace

MonomialIdeal gin(const Ideal& ideal, const TermOrder& order, uint64_t seed,
                  const Limits& lim) {
  const int n = ideal.width();
  if (order.width() != n) {
    throw Error(ErrorCode::WidthMismatch, "order width does not match ideal");
  }
  if (order.kind() == OrderKind::ElimFirst) {
    throw Error(ErrorCode::Validation,
                "generic initial ideals use a graded global order");
  }
  if (ideal.is_zero()) return MonomialIdeal::zero(n);
  if (!ideal.is_homogeneous()) {
    throw Error(ErrorCode::Validation,
                "generic initial ideal requires homogeneous generators");
  }

  // Degreewise dimensions of the ideal let each draw's completion stop early;
  // they are invariant under the coordinate changes below.
  const int hint_bound = 2 * ideal.max_generator_degree() + 4;
  const std::vector<long>& hint =
      hilbert_function_ideal(ideal, hint_bound, lim).values;

  std::vector<MonomialIdeal> candidates;
  int rejected = 0;
  const int total_draws = 2 + lim.retries;
  for (int draw = 0; draw < total_draws; ++draw) {
    UnipotentChange g =
        UnipotentChange::random(n, derive_seed(seed, draw), lim.entropy_bound);
    Ideal moved = apply_change(g, ideal);
    std::vector<Polynomial> basis =
        buchberger(moved.generators(), order, lim, &hint);
    std::vector<Exponent> lts;
    lts.reserve(basis.size());
    for (const Polynomial& f : basis) lts.push_back(f.leading().exp);
    MonomialIdeal candidate(n, std::move(lts));
    if (!is_borel_ideal(candidate)) {
      ++rejected;
      continue;
    }
    for (const MonomialIdeal& prev : candidates) {
      if (prev == candidate) return candidate;
    }
    candidates.push_back(std::move(candidate));
  }

  std::ostringstream msg;
  msg << "no two draws agreed on a Borel-fixed initial ideal after "
      << total_draws << " attempts (" << rejected << " non-Borel)";
  for (size_t i = 0; i < candidates.size(); ++i) {
    msg << "; candidate " << i << " = " << describe_candidate(candidates[i]);
  }
  throw Error(ErrorCode::CertificateMismatch, msg.str());
}

}  // namespace bforge
