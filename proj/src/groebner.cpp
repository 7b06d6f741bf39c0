#include "bforge/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "bforge/borel.hpp"
#include "bforge/rng.hpp"
#include "bforge/unipotent.hpp"

namespace bforge {

namespace {

// Merge-subtracts c * X^q * g from work, where work[idx] cancels against the
// scaled leading term of g. Terms above idx are untouched; everything new is
// strictly below them in the order.
void reduce_at(std::vector<Term>& work, size_t idx, const Polynomial& g,
               const TermOrder& order) {
  const Exponent q = exp_sub(work[idx].exp, g.leading().exp);
  const Rational c = work[idx].coeff / g.leading().coeff;

  std::vector<Term> merged(work.begin(), work.begin() + idx);
  size_t a = idx + 1;
  size_t b = 1;
  const std::vector<Term>& gt = g.terms();
  while (a < work.size() || b < gt.size()) {
    if (b == gt.size()) {
      merged.push_back(std::move(work[a++]));
      continue;
    }
    const Exponent ge = exp_add(gt[b].exp, q);
    if (a == work.size()) {
      merged.push_back(Term{ge, -c * gt[b].coeff});
      ++b;
    } else {
      int cmp = order.compare(work[a].exp, ge);
      if (cmp > 0) {
        merged.push_back(std::move(work[a++]));
      } else if (cmp < 0) {
        merged.push_back(Term{ge, -c * gt[b].coeff});
        ++b;
      } else {
        Rational sum = work[a].coeff - c * gt[b].coeff;
        if (sum != 0) merged.push_back(Term{work[a].exp, std::move(sum)});
        ++a;
        ++b;
      }
    }
  }
  work = std::move(merged);
}

Polynomial nf_sorted(const Polynomial& f,
                     const std::vector<const Polynomial*>& basis) {
  const TermOrder& order = f.order();
  std::vector<Term> work = f.terms();
  size_t idx = 0;
  while (idx < work.size()) {
    const Polynomial* reducer = nullptr;
    for (const Polynomial* g : basis) {
      if (divides(g->leading().exp, work[idx].exp)) {
        reducer = g;
        break;
      }
    }
    if (reducer == nullptr) {
      ++idx;
      continue;
    }
    reduce_at(work, idx, *reducer, order);
  }
  return Polynomial(order, std::move(work));
}

struct PairEntry {
  int deg;
  Exponent lcm;
  int i;
  int j;
};

struct PairCompare {
  TermOrder tie;

  bool operator()(const PairEntry& a, const PairEntry& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int cmp = tie.compare(a.lcm, b.lcm);
    if (cmp != 0) return cmp < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Count of degree-d monomials lying in the monomial ideal spanned by lts.
long monomial_dimension(const std::vector<Exponent>& lts, int width, int d) {
  long count = 0;
  for (const Exponent& m : monomials_of_degree(width, d)) {
    for (const Exponent& g : lts) {
      if (divides(g, m)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::vector<Polynomial> minimalize_and_autoreduce(std::vector<Polynomial> basis,
                                                  const TermOrder& order) {
  // Leading terms are pairwise distinct here, so divisibility keeps the
  // smaller-degree element.
  std::vector<size_t> idx(basis.size());
  for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return order.less(basis[a].leading().exp, basis[b].leading().exp);
  });
  std::vector<Polynomial> kept;
  for (size_t k : idx) {
    bool redundant = false;
    for (const Polynomial& h : kept) {
      if (divides(h.leading().exp, basis[k].leading().exp)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(basis[k]));
  }

  std::vector<Polynomial> reduced;
  reduced.reserve(kept.size());
  for (size_t k = 0; k < kept.size(); ++k) {
    std::vector<const Polynomial*> others;
    for (size_t l = 0; l < kept.size(); ++l) {
      if (l != k) others.push_back(&kept[l]);
    }
    reduced.push_back(poly_monic(nf_sorted(kept[k], others)));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.greater(a.leading().exp, b.leading().exp);
            });
  return reduced;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const TermOrder& order) {
  Polynomial fo = f.with_order(order);
  std::vector<Polynomial> local;
  local.reserve(basis.size());
  for (const Polynomial& g : basis) {
    if (g.width() != f.width()) {
      throw Error(ErrorCode::WidthMismatch, "reducer width does not match");
    }
    if (!g.is_zero()) local.push_back(g.with_order(order));
  }
  std::vector<const Polynomial*> view;
  view.reserve(local.size());
  for (const Polynomial& g : local) view.push_back(&g);
  return nf_sorted(fo, view);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const TermOrder& order) {
  Polynomial fo = f.with_order(order);
  Polynomial go = g.with_order(order);
  const Exponent lcm = exp_lcm(fo.leading().exp, go.leading().exp);
  Polynomial left = poly_mul_term(fo, exp_sub(lcm, fo.leading().exp),
                                  1 / fo.leading().coeff);
  Polynomial right = poly_mul_term(go, exp_sub(lcm, go.leading().exp),
                                   1 / go.leading().coeff);
  return poly_sub(left, right);
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators,
                                   const TermOrder& order, const Limits& lim,
                                   const std::vector<long>* hilbert_hint) {
  const int width = order.width();
  std::vector<Polynomial> basis;
  for (const Polynomial& g : generators) {
    if (g.width() != width) {
      throw Error(ErrorCode::WidthMismatch,
                  "generator width does not match order");
    }
    if (!g.is_zero()) basis.push_back(poly_monic(g.with_order(order)));
  }
  if (basis.empty()) return {};

  bool homogeneous = std::all_of(basis.begin(), basis.end(),
                                 [](const Polynomial& g) {
                                   return g.is_homogeneous();
                                 });
  if (hilbert_hint != nullptr && !homogeneous) {
    throw Error(ErrorCode::Validation,
                "degreewise dimension hints need homogeneous generators");
  }

  std::vector<Exponent> lts;
  for (const Polynomial& g : basis) lts.push_back(g.leading().exp);

  std::set<PairEntry, PairCompare> queue{PairCompare{TermOrder::rlex(width)}};
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Exponent lcm = exp_lcm(lts[i], lts[j]);
      queue.insert(PairEntry{lcm.degree(), std::move(lcm), i, j});
    }
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs(static_cast<int>(j));

  auto strictly_divides = [](const Exponent& a, const Exponent& b) {
    return divides(a, b) && !(a == b);
  };

  long processed = 0;
  int checked_degree = -1;
  bool checked_complete = false;
  while (!queue.empty()) {
    PairEntry pair = *queue.begin();

    if (hilbert_hint != nullptr &&
        pair.deg < static_cast<int>(hilbert_hint->size())) {
      if (checked_degree != pair.deg) {
        checked_degree = pair.deg;
        checked_complete = monomial_dimension(lts, width, pair.deg) ==
                           (*hilbert_hint)[pair.deg];
      }
      if (checked_complete) {
        // The leading terms already span the full degree slice, so every
        // S-polynomial at this degree reduces to zero.
        auto it = queue.begin();
        while (it != queue.end() && it->deg == pair.deg) it = queue.erase(it);
        continue;
      }
    }
    queue.erase(queue.begin());

    if (++processed > lim.spair_budget) {
      throw Error(ErrorCode::Budget, "s-pair budget exhausted");
    }

    if (coprime(lts[pair.i], lts[pair.j])) continue;

    if (homogeneous) {
      // Both sub-lcms being proper divisors puts those pairs at strictly
      // smaller degree, hence already handled under degreewise processing.
      bool chained = false;
      for (size_t k = 0; k < basis.size() && !chained; ++k) {
        if (static_cast<int>(k) == pair.i || static_cast<int>(k) == pair.j) {
          continue;
        }
        chained = strictly_divides(exp_lcm(lts[pair.i], lts[k]), pair.lcm) &&
                  strictly_divides(exp_lcm(lts[pair.j], lts[k]), pair.lcm);
      }
      if (chained) continue;
    }

    std::vector<const Polynomial*> view;
    view.reserve(basis.size());
    for (const Polynomial& g : basis) view.push_back(&g);
    Polynomial remainder =
        nf_sorted(s_polynomial(basis[pair.i], basis[pair.j], order), view);
    if (remainder.is_zero()) continue;

    basis.push_back(poly_monic(std::move(remainder)));
    lts.push_back(basis.back().leading().exp);
    push_pairs(static_cast<int>(basis.size()) - 1);
    checked_degree = -1;
  }

  return minimalize_and_autoreduce(std::move(basis), order);
}

bool is_groebner_basis(const std::vector<Polynomial>& basis,
                       const TermOrder& order, const Limits& lim) {
  std::vector<Polynomial> local;
  for (const Polynomial& g : basis) {
    if (!g.is_zero()) local.push_back(g.with_order(order));
  }
  std::vector<const Polynomial*> view;
  for (const Polynomial& g : local) view.push_back(&g);
  long processed = 0;
  for (size_t j = 1; j < local.size(); ++j) {
    for (size_t i = 0; i < j; ++i) {
      if (++processed > lim.spair_budget) {
        throw Error(ErrorCode::Budget, "s-pair budget exhausted");
      }
      Polynomial s = s_polynomial(local[i], local[j], order);
      if (!nf_sorted(s, view).is_zero()) return false;
    }
  }
  return true;
}

Ideal colon_var(const Ideal& ideal, int var, const Limits& lim) {
  const int n = ideal.width();
  if (var < 0 || var >= n) {
    throw Error(ErrorCode::Validation, "variable index out of range");
  }
  if (ideal.is_zero()) return ideal;
  if (ideal.all_monomial()) {
    return Ideal::from_monomial(mi_colon_var(ideal.to_monomial(), var));
  }
  Ideal axis(n, {Polynomial::monomial(TermOrder::rlex(n), Exponent::unit(n, var))});
  Ideal meet = ideal_intersection(ideal, axis, lim);
  std::vector<Polynomial> gens;
  for (const Polynomial& f : meet.generators()) {
    std::vector<Term> terms = f.terms();
    for (Term& t : terms) {
      t.exp = exp_sub(t.exp, Exponent::unit(n, var));
    }
    gens.push_back(Polynomial(f.order(), std::move(terms)));
  }
  return Ideal(n, std::move(gens));
}

Ideal colon_var_power(const Ideal& ideal, int var, const Limits& lim) {
  Ideal current = ideal;
  for (int round = 0; round < 256; ++round) {
    Ideal next = colon_var(current, var, lim);
    if (next.equals(current, lim)) return current;
    current = std::move(next);
  }
  throw Error(ErrorCode::Budget, "variable colon failed to stabilize");
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b, const Limits& lim) {
  const int n = a.width();
  if (b.width() != n) {
    throw Error(ErrorCode::WidthMismatch, "intersection widths differ");
  }
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  if (a.all_monomial() && b.all_monomial()) {
    return Ideal::from_monomial(mi_intersect(a.to_monomial(), b.to_monomial()));
  }

  // Intersect by eliminating one scaling variable adjoined in front.
  const TermOrder inner = TermOrder::elim_first(1, n + 1);
  std::vector<Polynomial> gens;
  auto lift = [&](const Polynomial& f, bool scaled) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
      std::vector<int> e(n + 1, 0);
      for (int v = 0; v < n; ++v) e[v + 1] = t.exp[v];
      if (scaled) {
        e[0] = 1;
        terms.push_back(Term{Exponent(e), t.coeff});
      } else {
        terms.push_back(Term{Exponent(e), t.coeff});
        e[0] = 1;
        terms.push_back(Term{Exponent(e), -t.coeff});
      }
    }
    return Polynomial(inner, std::move(terms));
  };
  for (const Polynomial& f : a.generators()) gens.push_back(lift(f, true));
  for (const Polynomial& g : b.generators()) gens.push_back(lift(g, false));

  std::vector<Polynomial> kept;
  for (const Polynomial& h : buchberger(gens, inner, lim)) {
    bool free_of_scaler = std::all_of(
        h.terms().begin(), h.terms().end(),
        [](const Term& t) { return t.exp[0] == 0; });
    if (!free_of_scaler) continue;
    std::vector<Term> terms;
    for (const Term& t : h.terms()) {
      std::vector<int> e(n);
      for (int v = 0; v < n; ++v) e[v] = t.exp[v + 1];
      terms.push_back(Term{Exponent(e), t.coeff});
    }
    kept.push_back(Polynomial(TermOrder::rlex(n), std::move(terms)));
  }
  return Ideal(n, std::move(kept));
}

Ideal saturate(const Ideal& ideal, uint64_t seed, const Limits& lim) {
  const int n = ideal.width();
  if (ideal.is_zero()) return ideal;
  if (ideal.all_monomial()) {
    return Ideal::from_monomial(saturate_monomial(ideal.to_monomial()));
  }
  if (is_borel_ideal(ideal.initial_ideal(TermOrder::rlex(n), lim))) {
    // In Borel position saturating by the irrelevant ideal is a single
    // colon by the last variable.
    return colon_var_power(ideal, n - 1, lim);
  }

  std::vector<Ideal> candidates;
  const int total_draws = 2 + lim.retries;
  for (int draw = 0; draw < total_draws; ++draw) {
    UnipotentChange g =
        UnipotentChange::random(n, derive_seed(seed, draw), lim.entropy_bound);
    Ideal moved = apply_change(g, ideal);
    Ideal colon = colon_var_power(moved, n - 1, lim);
    Ideal back = apply_change(g.inverse(), colon);
    for (const Ideal& prev : candidates) {
      if (prev.equals(back, lim)) return back;
    }
    candidates.push_back(std::move(back));
  }
  throw Error(ErrorCode::CertificateMismatch,
              "no two saturation draws agreed");
}

Ideal eliminate_to_subring(const Ideal& ideal, int keep, const Limits& lim) {
  const int n = ideal.width();
  if (keep <= 0 || keep > n) {
    throw Error(ErrorCode::Validation, "subring width out of range");
  }
  if (keep == n) return ideal;
  if (ideal.all_monomial()) {
    return Ideal::from_monomial(
        restrict_to_subring(ideal.to_monomial(), keep));
  }

  // Rotate the discarded block to the front and eliminate it there.
  const int drop = n - keep;
  const TermOrder inner = TermOrder::elim_first(drop, n);
  auto permute = [&](const Exponent& e, bool forward) {
    std::vector<int> out(n);
    for (int v = 0; v < n; ++v) {
      int target = v < keep ? drop + v : v - keep;
      if (forward) {
        out[target] = e[v];
      } else {
        out[v] = e[target];
      }
    }
    return Exponent(out);
  };
  std::vector<Polynomial> gens;
  for (const Polynomial& f : ideal.generators()) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
      terms.push_back(Term{permute(t.exp, true), t.coeff});
    }
    gens.push_back(Polynomial(inner, std::move(terms)));
  }

  std::vector<Polynomial> kept;
  for (const Polynomial& h : buchberger(gens, inner, lim)) {
    bool in_block = true;
    for (const Term& t : h.terms()) {
      for (int v = 0; v < drop && in_block; ++v) in_block = t.exp[v] == 0;
    }
    if (!in_block) continue;
    std::vector<Term> terms;
    for (const Term& t : h.terms()) {
      terms.push_back(Term{permute(t.exp, false).truncated(keep), t.coeff});
    }
    kept.push_back(Polynomial(TermOrder::rlex(keep), std::move(terms)));
  }
  return Ideal(keep, std::move(kept));
}

Ideal extend_ring(const Ideal& ideal, int width) {
  if (width < ideal.width()) {
    throw Error(ErrorCode::Validation, "ring extension must not shrink");
  }
  std::vector<Polynomial> gens;
  for (const Polynomial& f : ideal.generators()) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
      terms.push_back(Term{t.exp.extended(width), t.coeff});
    }
    gens.push_back(Polynomial(TermOrder::rlex(width), std::move(terms)));
  }
  return Ideal(width, std::move(gens));
}

HilbertData hilbert_function_ideal(const Ideal& ideal, int up_to,
                                   const Limits& lim) {
  if (!ideal.is_homogeneous()) {
    throw Error(ErrorCode::Validation,
                "Hilbert data needs homogeneous generators");
  }
  return hilbert_function(ideal.initial_ideal(TermOrder::rlex(ideal.width()), lim),
                          up_to);
}

Ideal DegenerationFamily::fiber(const Rational& value) const {
  const int n = base.width();
  std::vector<Polynomial> gens;
  for (const Polynomial& f : family) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
      int zdeg = t.exp[n];
      Rational scale = 1;
      for (int k = 0; k < zdeg; ++k) scale *= value;
      if (scale == 0) continue;
      std::vector<int> e(n);
      for (int v = 0; v < n; ++v) e[v] = t.exp[v];
      terms.push_back(Term{Exponent(e), t.coeff * scale});
    }
    gens.push_back(Polynomial(TermOrder::rlex(n), std::move(terms)));
  }
  return Ideal(n, std::move(gens));
}

DegenerationFamily weight_degeneration(const Ideal& ideal,
                                       const TermOrder& order,
                                       const std::vector<Rational>& samples,
                                       const Limits& lim) {
  const int n = ideal.width();
  if (order.width() != n) {
    throw Error(ErrorCode::WidthMismatch, "order width does not match ideal");
  }
  if (order.kind() == OrderKind::ElimFirst) {
    throw Error(ErrorCode::Validation,
                "weight degenerations use a graded global order");
  }
  if (!ideal.is_homogeneous()) {
    throw Error(ErrorCode::Validation,
                "weight degenerations need homogeneous generators");
  }

  const std::vector<Polynomial>& basis = ideal.reduced_basis(order, lim);

  // A weight works when every leading term strictly outweighs its tail. The
  // geometric ladders below realize the order on any fixed degree range once
  // the base is large enough, so try bases until the checks pass.
  std::vector<long> weights;
  bool found = basis.empty();
  if (found) weights.assign(n, 1);
  for (long base : {2L, 3L, 4L, 8L, 16L, 32L, 64L, 128L}) {
    if (found) break;
    std::vector<long> candidate(n);
    if (order.kind() == OrderKind::Rlex) {
      long top = 1;
      for (int k = 0; k < n; ++k) top *= base;
      long power = base;
      for (int i = 0; i < n; ++i) {
        candidate[i] = top - power + 1;
        power *= base;
      }
    } else {
      long power = 1;
      for (int i = n - 1; i >= 0; --i) {
        candidate[i] = power;
        power *= base;
      }
    }
    bool ok = true;
    for (const Polynomial& g : basis) {
      long lead = weight_of(g.leading().exp, candidate);
      for (size_t t = 1; t < g.terms().size() && ok; ++t) {
        ok = weight_of(g.terms()[t].exp, candidate) < lead;
      }
      if (!ok) break;
    }
    if (ok) {
      weights = std::move(candidate);
      found = true;
    }
  }
  if (!found) {
    throw Error(ErrorCode::WeightNotFound,
                "no weight vector realizes the order on this basis");
  }

  const TermOrder family_order = TermOrder::rlex(n + 1);
  std::vector<Polynomial> family;
  for (const Polynomial& g : basis) {
    const long lead = weight_of(g.leading().exp, weights);
    std::vector<Term> terms;
    for (const Term& t : g.terms()) {
      std::vector<int> e(n + 1);
      for (int v = 0; v < n; ++v) e[v] = t.exp[v];
      e[n] = static_cast<int>(lead - weight_of(t.exp, weights));
      terms.push_back(Term{Exponent(e), t.coeff});
    }
    family.push_back(Polynomial(family_order, std::move(terms)));
  }

  DegenerationFamily result{ideal, std::move(weights), std::move(family)};

  if (!result.fiber(1).equals(ideal, lim)) {
    throw Error(ErrorCode::Validation, "family does not restrict to the base");
  }
  Ideal initial = Ideal::from_monomial(ideal.initial_ideal(order, lim));
  if (!result.fiber(0).equals(initial, lim)) {
    throw Error(ErrorCode::Validation,
                "family does not degenerate to the initial ideal");
  }
  const int bound = default_degree_bound(ideal.max_generator_degree(), n);
  HilbertData base_h = hilbert_function_ideal(ideal, bound, lim);
  for (const Rational& u : samples) {
    if (u == 0) continue;
    HilbertData fiber_h = hilbert_function_ideal(result.fiber(u), bound, lim);
    if (!(fiber_h == base_h)) {
      throw Error(ErrorCode::Validation,
                  "sampled fiber is not a deformation of the base");
    }
  }
  return result;
}

}  // namespace bforge
