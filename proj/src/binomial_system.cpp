#include "bforge/binomial_system.hpp"

#include <algorithm>
#include <sstream>

#include "bforge/borel.hpp"
#include "bforge/groebner.hpp"
#include "bforge/hilbert.hpp"

namespace bforge {

namespace {

std::vector<Exponent> rlex_descending(const std::set<Exponent>& input,
                                      int width) {
  const TermOrder order = TermOrder::rlex(width);
  std::vector<Exponent> out(input.begin(), input.end());
  std::sort(out.begin(), out.end(),
            [&](const Exponent& a, const Exponent& b) {
              return order.greater(a, b);
            });
  return out;
}

std::set<Exponent> shift_set(const std::set<Exponent>& input,
                             const SignedExponent& rho) {
  std::set<Exponent> out;
  for (const Exponent& c : input) {
    std::optional<Exponent> moved = shifted(c, rho);
    if (!moved) {
      throw Error(ErrorCode::Validation,
                  "move leaves the nonnegative orthant at " + c.to_string());
    }
    out.insert(*moved);
  }
  return out;
}

bool disjoint(const std::set<Exponent>& a, const std::set<Exponent>& b) {
  for (const Exponent& e : a) {
    if (b.count(e)) return false;
  }
  return true;
}

std::set<Exponent> set_union(const std::set<Exponent>& a,
                             const std::set<Exponent>& b) {
  std::set<Exponent> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

// Width-i truncations of the members supported on the first i variables.
std::set<Exponent> truncate_set(const std::set<Exponent>& input, int width) {
  std::set<Exponent> out;
  for (const Exponent& e : input) {
    if (support_within(e, width)) out.insert(e.truncated(width));
  }
  return out;
}

std::set<Exponent> star_set(const std::set<Exponent>& input) {
  std::set<Exponent> out;
  for (const Exponent& e : input) out.insert(e.star());
  return out;
}

Polynomial binomial_generator(const TermOrder& order, const Exponent& c,
                              const SignedExponent& rho) {
  std::optional<Exponent> high = shifted(c, rho);
  if (!high) {
    throw Error(ErrorCode::Validation,
                "binomial shift leaves the nonnegative orthant");
  }
  return Polynomial(order, {Term{c, 1}, Term{*high, -1}});
}

}  // namespace

bool SystemReport::all_ok() const {
  return std::all_of(items.begin(), items.end(),
                     [](const Check& c) { return c.ok; });
}

SystemReport validate_system(int n, int d, const std::set<Exponent>& a_set,
                             const std::set<Exponent>& c_set,
                             const SignedExponent& rho) {
  SystemReport report;

  std::string shape_problem;
  if (n < 1) shape_problem = "ring needs at least one variable";
  if (d < 0) shape_problem = "degree must be nonnegative";
  if (shape_problem.empty() && rho.width() != n) {
    shape_problem = "move width differs from the ring width";
  }
  if (shape_problem.empty()) {
    for (const Exponent& e : a_set) {
      if (e.width() != n || e.degree() != d) {
        shape_problem = "A entry " + e.to_string() + " is off-shape";
        break;
      }
    }
  }
  if (shape_problem.empty()) {
    for (const Exponent& e : c_set) {
      if (e.width() != n || e.degree() != d) {
        shape_problem = "C entry " + e.to_string() + " is off-shape";
        break;
      }
    }
  }
  report.items.push_back(
      Check{"shape", shape_problem.empty(),
            shape_problem.empty() ? "widths and degrees consistent"
                                  : shape_problem});
  if (!shape_problem.empty()) return report;

  bool shift_ok = true;
  std::string shift_detail = "C+rho stays inside the degree slice";
  for (const Exponent& c : c_set) {
    std::optional<Exponent> moved = shifted(c, rho);
    if (!moved || moved->degree() != d) {
      shift_ok = false;
      shift_detail = "shift of " + c.to_string() + " leaves the slice";
      break;
    }
  }
  report.items.push_back(Check{"shift-range", shift_ok, shift_detail});

  std::set<Exponent> c_moved;
  if (shift_ok) c_moved = shift_set(c_set, rho);

  bool disjoint_ok = shift_ok && disjoint(a_set, c_set) &&
                     disjoint(a_set, c_moved) && disjoint(c_set, c_moved);
  report.items.push_back(
      Check{"disjointness", disjoint_ok,
            disjoint_ok ? "A, C and C+rho are pairwise disjoint"
                        : "A, C and C+rho overlap"});

  bool borel_ok = false;
  std::string borel_detail = "skipped: shift left the slice";
  if (shift_ok) {
    const bool low = is_borel_set(set_union(a_set, c_set));
    const bool high = is_borel_set(set_union(a_set, c_moved));
    borel_ok = low && high;
    if (!low) {
      borel_detail = "A u C is not a Borel set";
    } else if (!high) {
      borel_detail = "A u (C+rho) is not a Borel set";
    } else {
      borel_detail = "A u C and A u (C+rho) are Borel sets";
    }
  }
  report.items.push_back(Check{"borel-closedness", borel_ok, borel_detail});

  if (!c_set.empty() && !rho.is_zero() && rho[rho.max_var()] < 0) {
    report.normalization_hint =
        "pivot entry is negative; the flipped system (A, C+rho, -rho) is "
        "equivalent and has a positive pivot";
  }
  return report;
}

BinomialSystem::BinomialSystem(int n, int d, std::set<Exponent> a_set,
                               std::set<Exponent> c_set, SignedExponent rho)
    : n_(n), d_(d), a_(std::move(a_set)), c_(std::move(c_set)),
      rho_(std::move(rho)) {
  SystemReport report = validate_system(n_, d_, a_, c_, rho_);
  if (!report.all_ok()) {
    std::ostringstream msg;
    msg << "not a binomial system:";
    for (const Check& item : report.items) {
      if (!item.ok) msg << " [" << item.id << "] " << item.detail;
    }
    throw Error(ErrorCode::Validation, msg.str());
  }
}

int BinomialSystem::pivot() const { return rho_.max_var() + 1; }

bool BinomialSystem::is_good() const {
  if (c_.size() < 2) return true;
  const Exponent& first = *c_.begin();
  const int below = pivot() - 1;
  for (const Exponent& c : c_) {
    for (int i = 0; i < below; ++i) {
      if (c[i] != first[i]) return false;
    }
  }
  return true;
}

BinomialSystem BinomialSystem::flipped() const {
  return BinomialSystem(n_, d_, a_, shift_set(c_, rho_), rho_.negated());
}

BinomialSystem BinomialSystem::oriented() const {
  if (c_.empty() || rho_.is_zero() || pivot_value() > 0) return *this;
  return flipped();
}

Ideal BinomialSystem::ideal_of() const {
  const TermOrder order = TermOrder::rlex(n_);
  std::vector<Polynomial> gens;
  for (const Exponent& a : rlex_descending(a_, n_)) {
    gens.push_back(Polynomial::monomial(order, a));
  }
  for (const Exponent& c : rlex_descending(c_, n_)) {
    gens.push_back(binomial_generator(order, c, rho_));
  }
  return Ideal(n_, std::move(gens));
}

bool BinomialSystem::operator==(const BinomialSystem& other) const {
  return n_ == other.n_ && d_ == other.d_ && a_ == other.a_ &&
         c_ == other.c_ && rho_ == other.rho_;
}

GbFormulas gb_formulas(const BinomialSystem& sys, const Limits& lim,
                       bool cross_check) {
  if (!sys.binomial_set().empty() && sys.pivot_value() < 0) {
    throw Error(ErrorCode::OrientationRequired,
                "initial and saturation formulas need a positive pivot");
  }
  const int n = sys.width();

  GbFormulas out{
      sys.ideal_of().generators(),
      ideal_from_exponents(
          n, set_union(sys.monomial_set(), sys.binomial_set())),
      section_ideal(sys, n, lim).generators(),
      Ideal::zero(n),
  };
  out.saturated = Ideal(n, out.saturated_basis);

  if (cross_check) {
    const TermOrder order = TermOrder::rlex(n);
    if (!is_groebner_basis(out.basis, order, lim)) {
      throw Error(ErrorCode::Validation,
                  "system generators failed the S-pair check");
    }
    if (sys.ideal_of().initial_ideal(order, lim) != out.initial) {
      throw Error(ErrorCode::Validation,
                  "initial ideal formula disagrees with the engine");
    }
    if (!is_groebner_basis(out.saturated_basis, order, lim)) {
      throw Error(ErrorCode::Validation,
                  "saturated basis failed the S-pair check");
    }
    if (!out.saturated.equals(saturate(sys.ideal_of(), 1, lim), lim)) {
      throw Error(ErrorCode::Validation,
                  "saturation formula disagrees with the engine");
    }
  }
  return out;
}

Ideal section_ideal(const BinomialSystem& sys, int i, const Limits&) {
  const int n = sys.width();
  if (i < 1 || i > n) {
    throw Error(ErrorCode::Validation, "section width out of range");
  }
  if (!sys.binomial_set().empty() && sys.pivot_value() < 0) {
    throw Error(ErrorCode::OrientationRequired,
                "section formulas need a positive pivot");
  }
  const TermOrder order = TermOrder::rlex(i);
  std::vector<Polynomial> gens;

  if (i >= sys.pivot()) {
    const std::set<Exponent> a_stars =
        star_set(truncate_set(sys.monomial_set(), i));
    const std::set<Exponent> c_stars =
        star_set(truncate_set(sys.binomial_set(), i));
    const SignedExponent rho_cut = sys.move().truncated(i);
    for (const Exponent& a : rlex_descending(a_stars, i)) {
      gens.push_back(Polynomial::monomial(order, a));
    }
    for (const Exponent& c : rlex_descending(c_stars, i)) {
      gens.push_back(binomial_generator(order, c, rho_cut));
    }
  } else {
    const std::set<Exponent> stars = star_set(truncate_set(
        set_union(sys.monomial_set(), sys.binomial_set()), i));
    for (const Exponent& a : rlex_descending(stars, i)) {
      gens.push_back(Polynomial::monomial(order, a));
    }
  }
  return Ideal(i, std::move(gens));
}

Filtration build_filtration(const BinomialSystem& sys, int bound,
                            const Limits& lim) {
  const BinomialSystem oriented = sys.oriented();
  const int n = oriented.width();
  if (oriented.monomial_set().empty() && oriented.binomial_set().empty()) {
    throw Error(ErrorCode::Validation,
                "the empty system has no ascending filtration");
  }
  if (bound <= 0) {
    bound = std::max(12, 2 * oriented.degree() + n);
  }

  Filtration filt{oriented, bound, {}, {}};
  filt.steps.push_back(oriented.ideal_of());
  filt.binomial_branch.push_back(true);
  for (int j = 1; j <= n; ++j) {
    const int w = n - j + 1;
    filt.steps.push_back(extend_ring(section_ideal(oriented, w, lim), n));
    filt.binomial_branch.push_back(w >= oriented.pivot());
  }
  return filt;
}

bool FiltrationReport::all_ok() const {
  return std::all_of(items.begin(), items.end(),
                     [](const Check& c) { return c.ok; });
}

namespace {

// Degree window [bound - points + 1, bound] of the quotient Hilbert deltas:
// the first `fit` values pin the interpolant, the rest must confirm it.
Check dimension_ladder_check(int i, const HilbertData& low,
                             const HilbertData& high, int bound) {
  const std::string id = "dim-ladder-" + std::to_string(i);
  const int fit = i;
  const int points = fit + 3;
  if (bound + 1 < points) {
    return Check{id, false, "degree bound too small for the window"};
  }

  std::vector<long> delta(static_cast<size_t>(points));
  for (int k = 0; k < points; ++k) {
    const int t = bound - points + 1 + k;
    delta[static_cast<size_t>(k)] = high.at(t) - low.at(t);
    if (delta[static_cast<size_t>(k)] < 0) {
      return Check{id, false,
                   "quotient dimension negative at degree " +
                       std::to_string(t)};
    }
  }

  RationalPoly model = RationalPoly::constant(0);
  if (fit > 0) {
    std::vector<std::pair<long, Rational>> samples;
    for (int k = 0; k < fit; ++k) {
      samples.push_back({bound - points + 1 + k,
                         Rational(delta[static_cast<size_t>(k)])});
    }
    model = interpolate(samples);
  }
  if (model.degree() > i - 1) {
    return Check{id, false, "interpolant degree exceeds " +
                                std::to_string(i - 1)};
  }
  for (int k = fit; k < points; ++k) {
    const int t = bound - points + 1 + k;
    if (model.eval(Rational(t)) != Rational(delta[static_cast<size_t>(k)])) {
      return Check{id, false,
                   "delta leaves the degree<=" + std::to_string(i - 1) +
                       " model at degree " + std::to_string(t)};
    }
  }
  return Check{id, true,
               "deltas fit \"" + model.to_string() + "\" over the window"};
}

bool poly_supported_within(const Polynomial& f, int vars) {
  for (const Term& t : f.terms()) {
    if (!support_within(t.exp, vars)) return false;
  }
  return true;
}

bool monomial_ideal_holds(const MonomialIdeal& ideal, const Polynomial& f) {
  for (const Term& t : f.terms()) {
    if (!ideal.contains(t.exp)) return false;
  }
  return true;
}

}  // namespace

FiltrationReport check_filtration(const BinomialSystem& sys, int bound,
                                  const Limits& lim) {
  FiltrationReport report;
  const BinomialSystem oriented = sys.oriented();
  const bool flipped_note = !(oriented == sys);
  report.items.push_back(Check{
      "orientation", true,
      flipped_note ? "flipped to a positive pivot" : "pivot already positive"});

  Filtration filt = build_filtration(oriented, bound, lim);
  bound = filt.bound;
  const int n = oriented.width();
  const int m = oriented.pivot();
  const int seam = n - m + 1;
  const std::set<Exponent> low_union =
      set_union(oriented.monomial_set(), oriented.binomial_set());

  // a) Away from the seam, step i is generated inside the first n-i
  // variables.
  {
    bool ok = true;
    std::string detail = "generators avoid the stripped variables";
    for (int i = 0; i <= n && ok; ++i) {
      if (i == seam) continue;
      for (const Polynomial& g : filt.steps[static_cast<size_t>(i)]
                                     .generators()) {
        if (!poly_supported_within(g, n - i)) {
          ok = false;
          detail = "step " + std::to_string(i) + " generator " +
                   g.debug_string() + " uses a stripped variable";
          break;
        }
      }
    }
    report.items.push_back(Check{"a-subring-generation", ok, detail});
  }

  // c) Seam inclusion: the binomial section at the pivot width lands in the
  // monomial section one variable lower.
  if (m >= 2) {
    const Ideal low_section = section_ideal(oriented, m, lim);
    const MonomialIdeal upper = extend_to_width(
        ideal_from_exponents(m - 1, star_set(truncate_set(low_union, m - 1))),
        m);
    bool ok = true;
    std::string detail = "pivot section lies inside the stripped section";
    for (const Polynomial& g : low_section.generators()) {
      if (!monomial_ideal_holds(upper, g)) {
        ok = false;
        detail = "generator " + g.debug_string() + " escapes the seam bound";
        break;
      }
    }
    report.items.push_back(Check{"c-seam-inclusion", ok, detail});
  } else {
    report.items.push_back(
        Check{"c-seam-inclusion", true, "vacuous: pivot at the first variable"});
  }

  // d) The steps form an ascending chain.
  {
    bool ok = true;
    std::string detail = "all inclusions hold";
    for (int i = 0; i < n && ok; ++i) {
      const Ideal& next = filt.steps[static_cast<size_t>(i) + 1];
      for (const Polynomial& g : filt.steps[static_cast<size_t>(i)]
                                     .generators()) {
        if (!next.contains(g, lim)) {
          ok = false;
          detail = "step " + std::to_string(i) + " generator " +
                   g.debug_string() + " is missing from step " +
                   std::to_string(i + 1);
          break;
        }
      }
    }
    report.items.push_back(Check{"d-inclusions", ok, detail});
  }

  // e) An explicit common power r with X_i^r * upper c pivot section for all
  // i below the pivot.
  if (m >= 2) {
    const std::set<Exponent> stripped = truncate_set(low_union, m - 1);
    if (stripped.empty()) {
      report.items.push_back(
          Check{"e-radical-power", true, "vacuous: empty stripped section"});
    } else {
      int top = 0;
      for (const Exponent& a : stripped) top = std::max(top, a[m - 2]);
      const int r = top + oriented.move()[m - 1];
      const Ideal pivot_section = section_ideal(oriented, m, lim);
      const TermOrder order = TermOrder::rlex(m);
      bool ok = true;
      std::string detail =
          "power r=" + std::to_string(r) + " absorbs every variable below "
          "the pivot";
      for (const Exponent& u : star_set(stripped)) {
        const Exponent base = u.extended(m);
        for (int var = 0; var < m - 1 && ok; ++var) {
          std::vector<int> e = base.entries();
          e[static_cast<size_t>(var)] += r;
          if (!pivot_section.contains(
                  Polynomial::monomial(order, Exponent(e)), lim)) {
            ok = false;
            detail = "X_" + std::to_string(var + 1) + "^" +
                     std::to_string(r) + " * " + base.to_string() +
                     " misses the pivot section";
          }
        }
        if (!ok) break;
      }
      report.items.push_back(Check{"e-radical-power", ok, detail});
    }
  } else {
    report.items.push_back(
        Check{"e-radical-power", true, "vacuous: pivot at the first variable"});
  }

  // f) No minimal initial generator of the pivot section is divisible by the
  // pivot variable, and the initial ideal matches its closed form.
  {
    const Ideal pivot_section = section_ideal(oriented, m, lim);
    const MonomialIdeal initial =
        pivot_section.initial_ideal(TermOrder::rlex(m), lim);
    const MonomialIdeal expected =
        ideal_from_exponents(m, star_set(truncate_set(low_union, m)));
    bool ok = initial == expected;
    std::string detail = "pivot variable divides no initial generator";
    if (!ok) {
      detail = "initial ideal of the pivot section differs from its closed "
               "form";
    } else {
      for (const Exponent& g : initial.generators()) {
        if (g[m - 1] > 0) {
          ok = false;
          detail = "initial generator " + g.to_string() +
                   " is divisible by the pivot variable";
          break;
        }
      }
    }
    report.items.push_back(Check{"f-pivot-free-initial", ok, detail});
  }

  // Dimension ladder: the quotient of consecutive steps is zero or
  // i-dimensional, read off degreewise.
  {
    std::vector<HilbertData> h;
    h.reserve(filt.steps.size());
    for (const Ideal& step : filt.steps) {
      h.push_back(hilbert_function_ideal(step, bound, lim));
    }
    for (int i = 0; i < n; ++i) {
      report.items.push_back(dimension_ladder_check(
          i, h[static_cast<size_t>(i)], h[static_cast<size_t>(i) + 1], bound));
    }
  }

  return report;
}

}  // namespace bforge
