#include "bforge/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "bforge/borel.hpp"
#include "bforge/chain.hpp"
#include "bforge/groebner.hpp"
#include "bforge/hilbert.hpp"
#include "bforge/rng.hpp"
#include "bforge/seeded.hpp"
#include "bforge/symbolic.hpp"
#include "bforge/unipotent.hpp"

namespace bforge {

bool SuiteReport::ok() const {
  return std::all_of(items.begin(), items.end(),
                     [](const Check& c) { return c.ok; });
}

std::string SuiteReport::to_string() const {
  std::string out;
  int passed = 0;
  for (const Check& c : items) {
    out += c.ok ? "ok   " : "FAIL ";
    out += c.id;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
    if (c.ok) ++passed;
  }
  out += "suite " + suite + ": " + (ok() ? "PASS" : "FAIL") + " (" +
         std::to_string(passed) + "/" + std::to_string(items.size()) +
         " checks)\n";
  return out;
}

namespace fixtures {

const NamedRing& ring4() {
  static const NamedRing r = default_ring(4);
  return r;
}

const NamedRing& ring5() {
  static const NamedRing r = default_ring(5);
  return r;
}

Ideal anchor_ideal() {
  static const Ideal ideal = parse_ideal_text(
                                 "ring 4 x y z t\n"
                                 "gen y^2 - x*z\n"
                                 "gen x^2\n"
                                 "gen x*y\n"
                                 "gen x*z^2\n",
                                 "anchor")
                                 .ideal;
  return ideal;
}

MonomialIdeal anchor_initial() {
  static const MonomialIdeal m = parse_ideal_text(
                                     "ring 4 x y z t\n"
                                     "gen x^2\n"
                                     "gen x*y\n"
                                     "gen y^2\n"
                                     "gen x*z^2\n",
                                     "anchor-initial")
                                     .ideal.to_monomial();
  return m;
}

Ideal bridge_ideal() {
  static const Ideal ideal = parse_ideal_text(
                                 "ring 4 x y z t\n"
                                 "gen y^2*z - x*t^2\n"
                                 "gen x^2\n"
                                 "gen x*y\n"
                                 "gen x*z\n"
                                 "gen y^3\n",
                                 "bridge")
                                 .ideal;
  return ideal;
}

MonomialIdeal lex_floor() {
  static const MonomialIdeal m = parse_ideal_text(
                                     "ring 4 x y z t\n"
                                     "gen x^2\n"
                                     "gen x*y\n"
                                     "gen x*z\n"
                                     "gen y^3\n"
                                     "gen y^2*z\n",
                                     "lex-floor")
                                     .ideal.to_monomial();
  return m;
}

MonomialIdeal lex_ceiling() {
  static const MonomialIdeal m = parse_ideal_text(
                                     "ring 4 x y z t\n"
                                     "gen x\n"
                                     "gen y^3\n"
                                     "gen y^2*z^2\n",
                                     "lex-ceiling")
                                     .ideal.to_monomial();
  return m;
}

namespace {

Exponent e4(int a, int b, int c, int d) {
  return Exponent(std::vector<int>{a, b, c, d});
}

Exponent row5(const char* text) {
  return parse_polynomial(text, ring5(), TermOrder::rlex(5)).leading().exp;
}

// Printed generator rows of the width-5 showcase, in source order. The two
// lists agree except for one underlined generator on each side.
const char* const shared_rows[] = {
    "x^5",         "x^4*y",       "x^3*y^2",     "x^2*y^3",   "x*y^4",
    "y^5",         "x^4*z",       "x^3*y*z",     "x^2*y^2*z", "x*y^3*z",
    "y^4*z",       "x^3*z^2",     "x^2*y*z^2",   "x*y^2*z^2", "y^3*z^2",
    "x^2*z^3",     "x*y*z^3",     "y^2*z^3",     "x*z^4",     "x^4*t",
    "x^3*y*t",     "x^2*y^2*t",   "x*y^3*t",     "y^4*t",     "x^3*z*t",
    "x^2*y*z*t",   "x*y^2*z*t",   "y^3*z*t",     "x^2*z^2*t", "x*y*z^2*t",
    "y^2*z^2*t",   "x*z^3*t",     "x^3*t^2",     "x^2*y*t^2", "x*y^2*t^2",
    "y^3*t^2",     "x^2*z*t^2",   "x*y*z*t^2",   "y^2*z*t^2", "x*z^2*t^2",
    "x^2*t^3",     "x*y*t^3",     "y^2*t^3",     "x^4*u",     "x^3*y*u",
    "x^2*y^2*u",   "x*y^3*u",     "y^4*u",       "x^3*z*u",   "x^2*y*z*u",
    "x*y^2*z*u",   "y^3*z*u",     "x^2*z^2*u",   "x*y*z^2*u", "y^2*z^2*u",
    "x*z^3*u",     "x^3*t*u",     "x^2*y*t*u",   "x*y^2*t*u", "y^3*t*u",
    "x^2*z*t*u",   "x*y*z*t*u",   "y^2*z*t*u"};

const char* const gin_tail[] = {"x*z^2*t*u", "x^2*t^2*u", "x*y*t^2*u",
                                "x^3*u^2",   "x^2*y*u^2", "x*y^2*u^2",
                                "x^2*z*u^2", "x*y*z*u^2"};

const char* const init_tail[] = {"x^2*t^2*u", "x*y*t^2*u", "y^2*t^2*u",
                                 "x^3*u^2",   "x^2*y*u^2", "x*y^2*u^2",
                                 "x^2*z*u^2", "x*y*z*u^2"};

std::vector<Exponent> rows_with_tail(const char* const (&tail)[8]) {
  std::vector<Exponent> rows;
  for (const char* text : shared_rows) rows.push_back(row5(text));
  for (const char* text : tail) rows.push_back(row5(text));
  return rows;
}

}  // namespace

BinomialSystem cubic_system() {
  std::set<Exponent> a_rows{e4(3, 0, 0, 0), e4(2, 1, 0, 0), e4(2, 0, 1, 0),
                            e4(2, 0, 0, 1), e4(1, 2, 0, 0), e4(1, 1, 1, 0),
                            e4(1, 1, 0, 1), e4(1, 0, 2, 0), e4(0, 3, 0, 0),
                            e4(0, 2, 1, 0)};
  std::set<Exponent> c_rows{e4(0, 2, 0, 1)};
  return BinomialSystem(4, 3, std::move(a_rows), std::move(c_rows),
                        SignedExponent(std::vector<int>{1, -2, 1, 0}));
}

std::string cubic_system_generators() {
  return "ring 4 x y z t\n"
         "gen x^3\n"
         "gen x^2*y\n"
         "gen x^2*z\n"
         "gen x^2*t\n"
         "gen x*y^2\n"
         "gen x*y*z\n"
         "gen x*y*t\n"
         "gen x*z^2\n"
         "gen y^3\n"
         "gen y^2*z\n"
         "gen y^2*t - x*z*t\n";
}

BinomialSystem divergent_system() {
  const SignedExponent rho(std::vector<int>{1, -2, 2, -2, 1});
  const Exponent slow(std::vector<int>{0, 2, 0, 3, 0});
  const Exponent fast(std::vector<int>{0, 2, 0, 2, 1});
  std::set<Exponent> c_rows{slow, fast};
  std::set<Exponent> removed = c_rows;
  for (const Exponent& c : c_rows) removed.insert(*shifted(c, rho));
  std::set<Exponent> closure = borel_closure(removed);
  std::set<Exponent> a_rows;
  for (const Exponent& e : closure) {
    if (!removed.count(e)) a_rows.insert(e);
  }
  return BinomialSystem(5, 5, std::move(a_rows), std::move(c_rows), rho);
}

const std::vector<Exponent>& divergent_gin_rows() {
  static const std::vector<Exponent> rows = rows_with_tail(gin_tail);
  return rows;
}

const std::vector<Exponent>& divergent_init_rows() {
  static const std::vector<Exponent> rows = rows_with_tail(init_tail);
  return rows;
}

}  // namespace fixtures

namespace {

using Checks = std::vector<Check>;

const NamedRing& ring_for(int width) {
  if (width == 4) return fixtures::ring4();
  if (width == 5) return fixtures::ring5();
  static std::map<int, NamedRing> cache;
  auto it = cache.find(width);
  if (it == cache.end()) it = cache.emplace(width, default_ring(width)).first;
  return it->second;
}

std::string mi_text(const MonomialIdeal& m) {
  const NamedRing& ring = ring_for(m.width());
  std::string out = "(";
  for (size_t i = 0; i < m.generators().size(); ++i) {
    if (i) out += ", ";
    out += monomial_to_string(m.generators()[i], ring);
  }
  return out + ")";
}

void check_equal_mi(Checks& out, const std::string& id,
                    const MonomialIdeal& actual,
                    const MonomialIdeal& expected) {
  if (actual == expected) {
    out.push_back(Check{id, true, "matches " + mi_text(expected)});
  } else {
    out.push_back(Check{id, false, "expected " + mi_text(expected) +
                                       ", actual " + mi_text(actual)});
  }
}

// Runs a block that may raise verification errors; failures become a failed
// check instead of aborting the suite. Budget exhaustion still propagates so
// the caller can exit with the budget status.
void guarded(Checks& out, const std::string& id,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Budget) throw;
    out.push_back(Check{
        id, false, std::string(error_code_name(e.code())) + ": " + e.what()});
  }
}

std::set<Exponent> set_of(const std::vector<Exponent>& rows) {
  return std::set<Exponent>(rows.begin(), rows.end());
}

// Y-coefficient of X^a inside a full symbolic expansion: keep the terms
// whose X block equals a and erase that block.
Polynomial y_part_of(int n, const Polynomial& expansion, const Exponent& a) {
  std::vector<Term> keep;
  for (const Term& t : expansion.terms()) {
    bool match = true;
    for (int k = 0; k < n && match; ++k) match = t.exp[x_index(n, k)] == a[k];
    if (!match) continue;
    std::vector<int> e = t.exp.entries();
    for (int k = 0; k < n; ++k) e[static_cast<size_t>(x_index(n, k))] = 0;
    keep.push_back(Term{Exponent(std::move(e)), t.coeff});
  }
  return Polynomial(symbolic_order(n), std::move(keep));
}

Checks criterion_showcase(const WorkspaceConfig& config) {
  Checks out;
  const Limits lim = config.limits();
  const TermOrder rl = TermOrder::rlex(4);
  const TermOrder hl = TermOrder::hlex(4);
  const Ideal anchor = fixtures::anchor_ideal();
  const Ideal bridge = fixtures::bridge_ideal();

  check_equal_mi(out, "anchor-init-rlex", anchor.initial_ideal(rl, lim),
                 fixtures::anchor_initial());
  check_equal_mi(out, "anchor-init-hlex", anchor.initial_ideal(hl, lim),
                 fixtures::lex_floor());
  guarded(out, "anchor-gin-rlex", [&] {
    check_equal_mi(out, "anchor-gin-rlex", gin(anchor, rl, config.seed, lim),
                   anchor.initial_ideal(rl, lim));
  });
  check_equal_mi(out, "bridge-init-rlex", bridge.initial_ideal(rl, lim),
                 fixtures::lex_floor());
  guarded(out, "bridge-sat-init-hlex", [&] {
    const Ideal saturated = saturate(
        Ideal::from_monomial(bridge.initial_ideal(hl, lim)), config.seed, lim);
    check_equal_mi(out, "bridge-sat-init-hlex", saturated.to_monomial(),
                   fixtures::lex_ceiling());
  });

  guarded(out, "deformation-chain", [&] {
    const Ideal floor_ideal = Ideal::from_monomial(fixtures::lex_floor());
    const Ideal ceiling_ideal = Ideal::from_monomial(fixtures::lex_ceiling());
    const Ideal initial_ideal_b = Ideal::from_monomial(fixtures::anchor_initial());
    std::vector<ChainEdge> edges;
    edges.push_back(ChainEdge{ChainRelation::InitRlex, anchor, initial_ideal_b,
                              "=", "anchor -> anchor-initial"});
    edges.push_back(ChainEdge{ChainRelation::InitHlex, anchor, floor_ideal,
                              "=", "anchor -> lex-floor"});
    edges.push_back(ChainEdge{ChainRelation::GinRlex, anchor, initial_ideal_b,
                              "<=", "anchor -> anchor-initial (generic)"});
    edges.push_back(ChainEdge{ChainRelation::InitRlex, bridge, floor_ideal,
                              "=", "bridge -> lex-floor"});
    edges.push_back(ChainEdge{ChainRelation::SatInitHlex, bridge,
                              ceiling_ideal, "<", "bridge -> lex-ceiling"});
    const ChainReport report = verify_chain(edges, 10, config.seed, lim);
    std::string detail;
    for (const ChainEdgeResult& e : report.edges) {
      if (!detail.empty()) detail += ", ";
      detail += std::string(relation_name(e.relation)) + " " + e.annotation;
    }
    out.push_back(Check{"deformation-chain", report.all_ok(), detail});
  });
  return out;
}

Checks criterion_hilbert(const WorkspaceConfig& config) {
  Checks out;
  const Limits lim = config.limits();
  const RationalPoly target(std::vector<Rational>{
      Rational(-2), Rational(-1, 6), Rational(1), Rational(1, 6)});

  guarded(out, "ceiling-polynomial", [&] {
    const RationalPoly p = hilbert_polynomial(fixtures::lex_ceiling(), lim);
    out.push_back(Check{"ceiling-polynomial", p == target,
                        "computed " + p.to_string()});
  });
  guarded(out, "floor-polynomial", [&] {
    const RationalPoly p = hilbert_polynomial(fixtures::lex_floor(), lim);
    out.push_back(
        Check{"floor-polynomial", p == target, "computed " + p.to_string()});
  });

  const HilbertData low = hilbert_function(fixtures::lex_floor(), 10);
  const HilbertData high = hilbert_function(fixtures::lex_ceiling(), 10);
  bool never_above = true;
  int strict = 0;
  for (int m = 0; m <= 10; ++m) {
    if (low.at(m) > high.at(m)) never_above = false;
    if (low.at(m) < high.at(m)) ++strict;
  }
  out.push_back(Check{
      "floor-below-ceiling", never_above && strict > 0,
      "ideal values never above, strictly below at " + std::to_string(strict) +
          " of 11 degrees (quotient reading: never below, strictly above)"});
  return out;
}

Checks criterion_system(const WorkspaceConfig& config) {
  Checks out;
  const Limits lim = config.limits();
  const BinomialSystem sys = fixtures::cubic_system();
  const ParsedIdeal printed =
      parse_ideal_text(fixtures::cubic_system_generators(), "cubic-system");

  const std::string actual_text = ideal_to_text(sys.ideal_of(), printed.ring);
  const std::string expected_text = ideal_to_text(printed.ideal, printed.ring);
  out.push_back(Check{"generators", actual_text == expected_text,
                      actual_text == expected_text
                          ? "11 generators match"
                          : "canonical forms differ"});

  guarded(out, "saturation", [&] {
    const GbFormulas formulas = gb_formulas(sys, lim, true);
    const bool ok = formulas.saturated.equals(fixtures::anchor_ideal(), lim);
    out.push_back(Check{"saturation", ok,
                        ok ? "equals the anchor ideal"
                           : "saturation differs from the anchor ideal"});
  });

  std::vector<Polynomial> printed_gens = printed.ideal.generators();
  const bool gb = is_groebner_basis(printed_gens, TermOrder::rlex(4), lim);
  out.push_back(Check{"printed-set-is-basis", gb,
                      gb ? "every S-pair reduces to zero"
                         : "an S-pair fails to reduce"});
  return out;
}

Checks criterion_divergence(const WorkspaceConfig& config) {
  Checks out;
  const Limits lim = config.limits();
  const BinomialSystem sys = fixtures::divergent_system();
  const SignedExponent& rho = sys.move();
  const Exponent slow(std::vector<int>{0, 2, 0, 3, 0});
  const Exponent fast(std::vector<int>{0, 2, 0, 2, 1});
  const Exponent slow_moved = *shifted(slow, rho);
  const Exponent fast_moved = *shifted(fast, rho);

  std::set<Exponent> removed{slow, fast, slow_moved, fast_moved};
  const std::set<Exponent> closure = borel_closure(removed);
  out.push_back(Check{
      "closure-reconstruction",
      closure.size() == 73 && sys.monomial_set().size() == 69 &&
          is_borel_set(closure),
      "|closure| = " + std::to_string(closure.size()) +
          ", |complement| = " + std::to_string(sys.monomial_set().size())});

  const std::set<Exponent> gin_set = set_of(fixtures::divergent_gin_rows());
  const std::set<Exponent> init_set = set_of(fixtures::divergent_init_rows());
  {
    std::set<Exponent> expected_gin = closure;
    expected_gin.erase(fast);
    expected_gin.erase(fast_moved);
    std::set<Exponent> expected_init = closure;
    expected_init.erase(slow_moved);
    expected_init.erase(fast_moved);
    const bool ok = gin_set == expected_gin && init_set == expected_init &&
                    init_set.count(fast) == 1 && !init_set.count(slow_moved) &&
                    gin_set.count(slow_moved) == 1 && !gin_set.count(fast);
    out.push_back(Check{"printed-rows", ok,
                        "both printed lists have 71 rows and differ exactly "
                        "in the two underlined generators"});
  }

  const Ideal ideal = sys.ideal_of();
  guarded(out, "init-rlex", [&] {
    check_equal_mi(out, "init-rlex",
                   ideal.initial_ideal(TermOrder::rlex(5), lim),
                   ideal_from_exponents(5, init_set));
  });
  guarded(out, "gin-rlex", [&] {
    check_equal_mi(out, "gin-rlex",
                   gin(ideal, TermOrder::rlex(5), config.seed, lim),
                   ideal_from_exponents(5, gin_set));
  });

  guarded(out, "witness-multiplicities", [&] {
    const std::vector<UpperTriangular> matrices =
        enumerate_U(slow, fast, lim);
    bool ok = matrices.size() == 1;
    std::string detail =
        "|U| = " + std::to_string(matrices.size());
    if (ok) {
      const Integer mu = matrix_multiplicity(matrices.front());
      auto moved = matrices.front().diag_shifted(rho);
      ok = mu == 1 && moved.has_value() &&
           matrix_multiplicity(*moved) == 2;
      detail += ", mu = " + mu.get_str();
      if (moved) {
        detail += ", shifted mu = " + matrix_multiplicity(*moved).get_str();
      }
    }
    out.push_back(Check{"witness-multiplicities", ok, detail});
  });

  out.push_back(Check{"not-good", !sys.is_good(),
                      "the two C rows disagree below the pivot"});
  return out;
}

Checks criterion_borel(const WorkspaceConfig& config) {
  Checks out;
  const Limits lim = config.limits();
  const std::vector<Exponent> slice = monomials_of_degree(4, 4);
  long pairs = 0;
  long comparable = 0;
  bool decisions_agree = true;
  bool witness_sums_ok = true;
  bool enumeration_agrees = true;
  for (const Exponent& a : slice) {
    for (const Exponent& b : slice) {
      ++pairs;
      const bool prefix = borel_ge(a, b);
      const BorelWitness witness = borel_witness(a, b);
      const std::vector<UpperTriangular> all = enumerate_U(a, b, lim);
      if (prefix != witness.comparable) decisions_agree = false;
      if (prefix != !all.empty()) enumeration_agrees = false;
      if (prefix) {
        ++comparable;
        if (!(witness.matrix.row_sums() == a) ||
            !(witness.matrix.col_sums() == b) ||
            !witness.matrix.is_nonnegative()) {
          witness_sums_ok = false;
        }
      }
    }
  }
  const std::string census = std::to_string(comparable) + " comparable of " +
                             std::to_string(pairs) + " ordered pairs";
  out.push_back(
      Check{"prefix-iff-witness", decisions_agree && pairs == 1225, census});
  out.push_back(Check{"prefix-iff-enumeration", enumeration_agrees, census});
  out.push_back(Check{"witness-sums", witness_sums_ok,
                      "row and column sums validate on every witness"});
  return out;
}

void alpha_extraction_sweep(Checks& out, const std::string& id, int n,
                            int degree, const Limits& lim) {
  const std::vector<Exponent> slice = monomials_of_degree(n, degree);
  long matched = 0;
  std::string mismatch;
  for (const Exponent& b : slice) {
    const Polynomial expansion = phi_expand(n, b, lim);
    for (const Exponent& a : slice) {
      const Polynomial direct = alpha_coefficient(a, b, lim);
      const Polynomial extracted = y_part_of(n, expansion, a);
      if (direct == extracted) {
        ++matched;
      } else if (mismatch.empty()) {
        mismatch = "first mismatch at a = " + a.to_string() +
                   ", b = " + b.to_string();
      }
    }
  }
  const long total = static_cast<long>(slice.size() * slice.size());
  out.push_back(Check{id, matched == total,
                      mismatch.empty() ? std::to_string(total) + " pairs agree"
                                       : mismatch});
}

Checks criterion_alpha(const WorkspaceConfig& config) {
  Checks out;
  const Limits lim = config.limits();
  alpha_extraction_sweep(out, "expansion-extraction-3-vars", 3, 3, lim);
  alpha_extraction_sweep(out, "expansion-extraction-4-vars", 4, 2, lim);

  guarded(out, "shift-identities", [&] {
    const std::vector<Exponent> slice = monomials_of_degree(3, 3);
    long checked = 0;
    std::string failure;
    for (int r0 = -3; r0 <= 3; ++r0) {
      for (int r1 = -3; r1 <= 3; ++r1) {
        const int r2 = -r0 - r1;
        if (r2 < -3 || r2 > 3) continue;
        const SignedExponent rho(std::vector<int>{r0, r1, r2});
        if (rho.is_zero()) continue;
        const int pivot = rho.max_var();
        if (rho[pivot] <= 0) continue;
        for (const Exponent& b : slice) {
          if (!shifted(b, rho)) continue;
          for (const Exponent& c : slice) {
            if (!shifted(c, rho)) continue;
            bool agree = true;
            for (int i = 0; i < pivot && agree; ++i) agree = b[i] == c[i];
            if (!agree) continue;
            const AlphaShiftReport report = verify_alpha_shift(b, c, rho, lim);
            ++checked;
            if (!(report.low_matches && report.high_matches &&
                  report.hypothesis_held) &&
                failure.empty()) {
              failure = "identity fails at b = " + b.to_string() +
                        ", c = " + c.to_string() + ", move " + rho.to_string();
            }
          }
        }
      }
    }
    out.push_back(Check{"shift-identities", failure.empty() && checked > 0,
                        failure.empty() ? std::to_string(checked) +
                                              " oriented triples verified"
                                        : failure});
  });
  return out;
}

Checks criterion_gin(const WorkspaceConfig& config) {
  Checks out;
  const Limits lim = config.limits();
  const TermOrder rl = TermOrder::rlex(4);

  std::vector<Ideal> seeded;
  for (int k = 0; k < 10; ++k) {
    seeded.push_back(
        random_homogeneous_ideal(4, 4, 3, derive_seed(config.seed, 700 + k)));
  }

  guarded(out, "gin-sat-commute", [&] {
    bool ok = true;
    std::string detail = "10 seeded ideals";
    for (size_t k = 0; k < seeded.size() && ok; ++k) {
      const uint64_t draw = derive_seed(config.seed, 710 + k);
      const MonomialIdeal left =
          gin(saturate(seeded[k], draw, lim), rl, draw, lim);
      const MonomialIdeal right = saturate_monomial(gin(seeded[k], rl, draw, lim));
      if (!(left == right)) {
        ok = false;
        detail = "commutation fails on seeded ideal " + std::to_string(k);
      }
    }
    out.push_back(Check{"gin-sat-commute", ok, detail});
  });

  guarded(out, "gin-fixes-borel", [&] {
    std::vector<MonomialIdeal> borel_ideals{
        fixtures::lex_floor(), fixtures::lex_ceiling(),
        fixtures::anchor_initial()};
    for (int k = 0; k < 3; ++k) {
      borel_ideals.push_back(
          gin(seeded[static_cast<size_t>(k)], rl,
              derive_seed(config.seed, 720 + k), lim));
    }
    bool ok = true;
    std::string detail =
        std::to_string(borel_ideals.size()) + " Borel ideals fixed";
    for (size_t k = 0; k < borel_ideals.size() && ok; ++k) {
      if (!is_borel_ideal(borel_ideals[k])) {
        ok = false;
        detail = "instance " + std::to_string(k) + " is not Borel";
        break;
      }
      const MonomialIdeal again =
          gin(Ideal::from_monomial(borel_ideals[k]), rl,
              derive_seed(config.seed, 730 + k), lim);
      if (!(again == borel_ideals[k])) {
        ok = false;
        detail = "instance " + std::to_string(k) + " moves under gin";
      }
    }
    out.push_back(Check{"gin-fixes-borel", ok, detail});
  });

  guarded(out, "gin-preserves-hilbert", [&] {
    bool ok = true;
    std::string detail = "degreewise equal through degree 10";
    for (size_t k = 0; k < seeded.size() && ok; ++k) {
      const HilbertData before = hilbert_function_ideal(seeded[k], 10, lim);
      const HilbertData after = hilbert_function(
          gin(seeded[k], rl, derive_seed(config.seed, 740 + k), lim), 10);
      if (!(before.values == after.values)) {
        ok = false;
        detail = "Hilbert values differ on seeded ideal " + std::to_string(k);
      }
    }
    out.push_back(Check{"gin-preserves-hilbert", ok, detail});
  });
  return out;
}

Checks criterion_good(const WorkspaceConfig& config) {
  Checks out;
  const Limits lim = config.limits();
  for (int k = 0; k < 5; ++k) {
    const std::string tag = "system-" + std::to_string(k);
    guarded(out, tag, [&] {
      const BinomialSystem sys =
          random_binomial_system(4, 3, derive_seed(config.seed, 800 + k), true);
      const Ideal ideal = sys.ideal_of();
      bool fixed = true;
      const UnipotentChange changes[] = {
          UnipotentChange::identity(4), UnipotentChange::all_ones(4),
          UnipotentChange::random(4, derive_seed(config.seed, 810 + k),
                                  config.entropy_bound)};
      for (const UnipotentChange& g : changes) {
        if (!apply_change(g, ideal).equals(ideal, lim)) fixed = false;
      }
      bool generic_matches = true;
      for (const TermOrder& order :
           {TermOrder::hlex(4), TermOrder::rlex(4)}) {
        const MonomialIdeal expected = ideal.initial_ideal(order, lim);
        const MonomialIdeal generic =
            gin(ideal, order, derive_seed(config.seed, 820 + k), lim);
        if (!(generic == expected)) generic_matches = false;
      }
      out.push_back(Check{
          tag, sys.is_good() && fixed && generic_matches,
          std::string("unipotent-fixed: ") + (fixed ? "yes" : "no") +
              ", generic initial matches plain: " +
              (generic_matches ? "yes" : "no")});
    });
  }
  return out;
}

Checks criterion_filtration(const WorkspaceConfig& config) {
  Checks out;
  const Limits lim = config.limits();

  guarded(out, "worked-system", [&] {
    const FiltrationReport report =
        check_filtration(fixtures::cubic_system(), 0, lim);
    bool saw_radical_power = false;
    for (const Check& c : report.items) {
      if (c.id == "e-radical-power" && c.detail.find("r=4") != std::string::npos)
        saw_radical_power = true;
    }
    int passed = 0;
    for (const Check& c : report.items) passed += c.ok ? 1 : 0;
    out.push_back(Check{
        "worked-system", report.all_ok() && saw_radical_power,
        std::to_string(passed) + "/" + std::to_string(report.items.size()) +
            " lemma checks, radical power r=4"});
  });

  for (int k = 0; k < 5; ++k) {
    const std::string tag = "seeded-system-" + std::to_string(k);
    guarded(out, tag, [&] {
      const BinomialSystem sys =
          random_binomial_system(4, 3, derive_seed(config.seed, 900 + k), true);
      const FiltrationReport report = check_filtration(sys, 0, lim);
      int passed = 0;
      for (const Check& c : report.items) passed += c.ok ? 1 : 0;
      std::string detail = std::to_string(passed) + "/" +
                           std::to_string(report.items.size()) +
                           " lemma checks";
      if (!report.all_ok()) {
        for (const Check& c : report.items) {
          if (!c.ok) {
            detail += "; " + c.id + ": " + c.detail;
            break;
          }
        }
      }
      out.push_back(Check{tag, report.all_ok(), detail});
    });
  }
  return out;
}

Checks criterion_degeneration(const WorkspaceConfig& config) {
  Checks out;
  const Limits lim = config.limits();
  guarded(out, "weight-family", [&] {
    const Ideal anchor = fixtures::anchor_ideal();
    const DegenerationFamily family = weight_degeneration(
        anchor, TermOrder::rlex(4), {Rational(2)}, lim);
    const HilbertData special =
        hilbert_function_ideal(family.fiber(0), 10, lim);
    const HilbertData general =
        hilbert_function_ideal(family.fiber(1), 10, lim);
    const HilbertData initial_h =
        hilbert_function(fixtures::anchor_initial(), 10);
    const HilbertData base_h = hilbert_function_ideal(anchor, 10, lim);
    out.push_back(Check{"fiber-zero", special.values == initial_h.values,
                        "special fiber matches the initial ideal"});
    out.push_back(Check{"fiber-one", general.values == base_h.values,
                        "general fiber matches the base ideal"});
  });
  return out;
}

Checks criterion_properties(const WorkspaceConfig& config) {
  Checks out;
  const Limits lim = config.limits();
  const uint64_t seed = config.seed;

  {
    Rng rng(derive_seed(seed, 1));
    bool ok = true;
    long comparable = 0;
    for (int trial = 0; trial < 200 && ok; ++trial) {
      std::vector<int> a(5, 0), b(5, 0);
      for (int k = 0; k < 5; ++k) ++a[static_cast<size_t>(rng.uniform(0, 4))];
      for (int k = 0; k < 5; ++k) ++b[static_cast<size_t>(rng.uniform(0, 4))];
      const Exponent ea{std::vector<int>(a)}, eb{std::vector<int>(b)};
      const bool prefix = borel_ge(ea, eb);
      const BorelWitness witness = borel_witness(ea, eb);
      if (prefix != witness.comparable) ok = false;
      if (prefix && (!(witness.matrix.row_sums() == ea) ||
                     !(witness.matrix.col_sums() == eb))) {
        ok = false;
      }
      if (trial < 30 && prefix != !enumerate_U(ea, eb, lim).empty()) ok = false;
      comparable += prefix ? 1 : 0;
    }
    out.push_back(Check{"witness-random-pairs", ok,
                        std::to_string(comparable) +
                            " comparable of 200 degree-5 pairs"});
  }

  {
    Rng rng(derive_seed(seed, 2));
    bool ok = true;
    for (int trial = 0; trial < 10 && ok; ++trial) {
      std::set<Exponent> rows;
      const long count = rng.uniform(1, 4);
      for (long k = 0; k < count; ++k) {
        std::vector<int> e(4, 0);
        for (int unit = 0; unit < 3; ++unit)
          ++e[static_cast<size_t>(rng.uniform(0, 3))];
        rows.insert(Exponent(std::move(e)));
      }
      const std::set<Exponent> closure = borel_closure(rows);
      if (!is_borel_set(closure)) ok = false;
      for (const Exponent& e : rows)
        if (!closure.count(e)) ok = false;
    }
    out.push_back(
        Check{"closure-is-borel", ok, "10 random degree-3 closures"});
  }

  guarded(out, "random-basis-oracle", [&] {
    bool ok = true;
    for (int k = 0; k < 3 && ok; ++k) {
      const Ideal ideal =
          random_homogeneous_ideal(3, 3, 3, derive_seed(seed, 3 + k));
      const std::vector<Polynomial>& basis =
          ideal.reduced_basis(TermOrder::rlex(3), lim);
      if (!is_groebner_basis(basis, TermOrder::rlex(3), lim)) ok = false;
      for (const Polynomial& g : ideal.generators()) {
        if (!ideal.contains(g, lim)) ok = false;
      }
    }
    out.push_back(Check{"random-basis-oracle", ok,
                        "reduced bases pass the S-pair oracle"});
  });

  guarded(out, "random-system-formulas", [&] {
    bool ok = true;
    for (int k = 0; k < 2 && ok; ++k) {
      const BinomialSystem sys =
          random_binomial_system(4, 3, derive_seed(seed, 10 + k), true);
      gb_formulas(sys, lim, true);
      if (!sys.is_good() || sys.pivot_value() <= 0) ok = false;
    }
    out.push_back(Check{"random-system-formulas", ok,
                        "closed forms agree with the engine"});
  });

  guarded(out, "unipotent-fixes-borel", [&] {
    Rng rng(derive_seed(seed, 20));
    bool ok = true;
    for (int trial = 0; trial < 3 && ok; ++trial) {
      std::set<Exponent> rows;
      for (int k = 0; k < 2; ++k) {
        std::vector<int> e(4, 0);
        for (int unit = 0; unit < 3; ++unit)
          ++e[static_cast<size_t>(rng.uniform(0, 3))];
        rows.insert(Exponent(std::move(e)));
      }
      const Ideal borel = Ideal::from_monomial(
          ideal_from_exponents(4, borel_closure(rows)));
      const UnipotentChange g = UnipotentChange::random(
          4, derive_seed(seed, 30 + trial), config.entropy_bound);
      if (!apply_change(g, borel).equals(borel, lim)) ok = false;
    }
    out.push_back(Check{"unipotent-fixes-borel", ok,
                        "3 random Borel ideals stay fixed"});
  });

  guarded(out, "alpha-random-pairs", [&] {
    Rng rng(derive_seed(seed, 40));
    const std::vector<Exponent> slice = monomials_of_degree(4, 3);
    bool ok = true;
    for (int trial = 0; trial < 5 && ok; ++trial) {
      const Exponent& b =
          slice[static_cast<size_t>(rng.uniform(0, static_cast<long>(slice.size()) - 1))];
      const Exponent& a =
          slice[static_cast<size_t>(rng.uniform(0, static_cast<long>(slice.size()) - 1))];
      const Polynomial expansion = phi_expand(4, b, lim);
      if (!(alpha_coefficient(a, b, lim) == y_part_of(4, expansion, a)))
        ok = false;
    }
    out.push_back(
        Check{"alpha-random-pairs", ok, "5 random degree-3 extractions"});
  });

  guarded(out, "lex-ideal-matches-hilbert", [&] {
    Rng rng(derive_seed(seed, 50));
    bool ok = true;
    for (int trial = 0; trial < 3 && ok; ++trial) {
      std::set<Exponent> rows;
      for (int k = 0; k < 2; ++k) {
        std::vector<int> e(4, 0);
        for (int unit = 0; unit < 3; ++unit)
          ++e[static_cast<size_t>(rng.uniform(0, 3))];
        rows.insert(Exponent(std::move(e)));
      }
      const MonomialIdeal ideal = ideal_from_exponents(4, rows);
      const HilbertData h = hilbert_function(ideal, 8);
      const MonomialIdeal lex = lex_ideal_from_hilbert(h, 8);
      if (!(hilbert_function(lex, 8).values == h.values)) ok = false;
    }
    out.push_back(Check{"lex-ideal-matches-hilbert", ok,
                        "3 random Hilbert functions realized"});
  });
  return out;
}

struct SuiteEntry {
  const char* name;
  Checks (*runner)(const WorkspaceConfig&);
};

constexpr SuiteEntry suite_table[] = {
    {"example1", criterion_showcase},
    {"hilbert", criterion_hilbert},
    {"example2", criterion_system},
    {"counterexample", criterion_divergence},
    {"borel", criterion_borel},
    {"alpha", criterion_alpha},
    {"gin", criterion_gin},
    {"good", criterion_good},
    {"filtration", criterion_filtration},
    {"degeneration", criterion_degeneration},
    {"properties", criterion_properties},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteEntry& entry : suite_table) out.emplace_back(entry.name);
    out.emplace_back("all");
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, const WorkspaceConfig& config) {
  for (const SuiteEntry& entry : suite_table) {
    if (name == entry.name) {
      return SuiteReport{name, entry.runner(config)};
    }
  }
  if (name == "all") {
    SuiteReport report{"all", {}};
    for (const SuiteEntry& entry : suite_table) {
      Checks items = entry.runner(config);
      for (Check& c : items) {
        c.id = std::string(entry.name) + "/" + c.id;
        report.items.push_back(std::move(c));
      }
    }
    return report;
  }
  std::string known;
  for (const std::string& s : suite_names()) {
    if (!known.empty()) known += ", ";
    known += s;
  }
  throw Error(ErrorCode::Parse, "unknown suite '" + name + "' (known: " + known + ")");
}

}  // namespace bforge
