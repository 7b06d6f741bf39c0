#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "bforge/groebner.hpp"
#include "bforge/hilbert.hpp"
#include "bforge/ideal.hpp"
#include "bforge/polynomial.hpp"
#include "bforge/rng.hpp"

using namespace bforge;

namespace {

Exponent E(std::vector<int> v) { return Exponent(std::move(v)); }

Polynomial P(const TermOrder& ord,
             std::vector<std::pair<std::vector<int>, Rational>> spec) {
  std::vector<Term> terms;
  for (auto& [e, c] : spec) terms.push_back(Term{Exponent(e), c});
  return Polynomial(ord, std::move(terms));
}

// Example fixtures in K[x,y,z,t]. The first is the curve ideal whose rlex
// initial ideal is the Borel ideal (x^2,xy,y^2,xz^2); the second trades the
// quadric for a cubic relation.
std::vector<Polynomial> curve_gens(const TermOrder& ord) {
  return {
      P(ord, {{{0, 2, 0, 0}, 1}, {{1, 0, 1, 0}, -1}}),  // y^2 - xz
      P(ord, {{{2, 0, 0, 0}, 1}}),
      P(ord, {{{1, 1, 0, 0}, 1}}),
      P(ord, {{{1, 0, 2, 0}, 1}}),
  };
}

std::vector<Polynomial> cubic_gens(const TermOrder& ord) {
  return {
      P(ord, {{{0, 2, 1, 0}, 1}, {{1, 0, 0, 2}, -1}}),  // y^2 z - x t^2
      P(ord, {{{2, 0, 0, 0}, 1}}),
      P(ord, {{{1, 1, 0, 0}, 1}}),
      P(ord, {{{1, 0, 1, 0}, 1}}),
      P(ord, {{{0, 3, 0, 0}, 1}}),
  };
}

// Width-4 binomial-system ideal whose saturation is the curve ideal:
// ten Borel monomials plus y^2 t - x z t.
std::vector<Polynomial> system_gens(const TermOrder& ord) {
  std::vector<std::vector<int>> monos = {
      {3, 0, 0, 0}, {2, 1, 0, 0}, {2, 0, 1, 0}, {2, 0, 0, 1}, {1, 2, 0, 0},
      {1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 2, 0}, {0, 3, 0, 0}, {0, 2, 1, 0}};
  std::vector<Polynomial> gens;
  for (const auto& m : monos) gens.push_back(P(ord, {{m, 1}}));
  gens.push_back(P(ord, {{{0, 2, 0, 1}, 1}, {{1, 0, 1, 1}, -1}}));
  return gens;
}

MonomialIdeal curve_initial_rlex() {
  return MonomialIdeal(
      4, {E({2, 0, 0, 0}), E({1, 1, 0, 0}), E({0, 2, 0, 0}), E({1, 0, 2, 0})});
}

MonomialIdeal growth_lex_ideal() {
  return MonomialIdeal(4, {E({2, 0, 0, 0}), E({1, 1, 0, 0}), E({1, 0, 1, 0}),
                           E({0, 3, 0, 0}), E({0, 2, 1, 0})});
}

Polynomial rng_homogeneous(Rng& rng, const TermOrder& ord, int width,
                           int degree, int terms) {
  const std::vector<Exponent> all = monomials_of_degree(width, degree);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    const Exponent& e = all[static_cast<size_t>(
        rng.uniform(0, static_cast<long>(all.size()) - 1))];
    Rational coeff(static_cast<long>(rng.uniform(1, 6)));
    if (rng.uniform(0, 1) == 1) coeff = -coeff;
    out.push_back(Term{e, coeff});
  }
  return Polynomial(ord, std::move(out));
}

}  // namespace

TEST_CASE("polynomial normalization and accessors") {
  const TermOrder r4 = TermOrder::rlex(4);
  Polynomial f = P(r4, {{{1, 0, 1, 0}, 1},
                        {{0, 2, 0, 0}, 2},
                        {{1, 0, 1, 0}, -1},
                        {{0, 0, 0, 0}, 0}});
  CHECK(f.terms().size() == 1);
  CHECK(f.leading().exp == E({0, 2, 0, 0}));
  CHECK(f.leading().coeff == 2);
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());

  Polynomial g = P(r4, {{{0, 2, 0, 0}, 1}, {{1, 0, 1, 0}, -1}});
  CHECK(g.leading().exp == E({0, 2, 0, 0}));  // y^2 beats xz under rlex
  Polynomial gh = g.with_order(TermOrder::hlex(4));
  CHECK(gh.leading().exp == E({1, 0, 1, 0}));  // and loses under hlex
  CHECK(g == gh);                              // same polynomial either way

  CHECK(Polynomial(r4).is_zero());
  CHECK_FALSE(P(r4, {{{0, 0, 0, 0}, 1}, {{1, 0, 0, 0}, 1}}).is_homogeneous());
}

TEST_CASE("polynomial arithmetic") {
  const TermOrder r2 = TermOrder::rlex(2);
  Polynomial x = P(r2, {{{1, 0}, 1}});
  Polynomial y = P(r2, {{{0, 1}, 1}});
  Polynomial sum = poly_add(x, y);
  Polynomial square = poly_mul(sum, sum);
  CHECK(square == P(r2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}));
  CHECK(poly_pow(sum, 2) == square);
  CHECK(poly_pow(sum, 0) == Polynomial::constant(r2, 1));
  CHECK(poly_sub(square, square).is_zero());
  CHECK(poly_scale(square, Rational(1) / 2).leading().coeff == Rational(1, 2));
  CHECK(poly_monic(poly_scale(square, -3)).leading().coeff == 1);
  CHECK(poly_mul_term(x, E({0, 1}), 4) == P(r2, {{{1, 1}, 4}}));
}

TEST_CASE("substituter expands with cached powers") {
  const TermOrder r2 = TermOrder::rlex(2);
  Polynomial x = P(r2, {{{1, 0}, 1}});
  Polynomial y = P(r2, {{{0, 1}, 1}});
  Substituter sub({poly_add(x, y), y});  // x -> x + y
  Polynomial image = sub.apply(P(r2, {{{2, 0}, 1}, {{0, 2}, -1}}));
  CHECK(image == P(r2, {{{2, 0}, 1}, {{1, 1}, 2}}));  // x^2 + 2xy + y^2 - y^2
  CHECK(sub.apply(Polynomial::constant(r2, 5)) ==
        Polynomial::constant(r2, 5));
}

TEST_CASE("normal form leaves irreducible input unchanged") {
  const TermOrder r4 = TermOrder::rlex(4);
  Polynomial f = P(r4, {{{0, 2, 0, 0}, 1}, {{1, 0, 1, 0}, -1}});
  std::vector<Polynomial> basis = {P(r4, {{{2, 0, 0, 0}, 1}}),
                                   P(r4, {{{1, 1, 0, 0}, 1}})};
  CHECK(normal_form(f, basis, r4) == f);
}

TEST_CASE("normal form membership and list-order determinism") {
  const TermOrder r3 = TermOrder::rlex(3);
  Polynomial xx = P(r3, {{{2, 0, 0}, 1}});
  CHECK(normal_form(P(r3, {{{2, 1, 0}, 3}}), {xx}, r3).is_zero());

  // x^2 reduces against whichever rewrite comes first in the list.
  Polynomial a = P(r3, {{{2, 0, 0}, 1}, {{0, 2, 0}, -1}});
  Polynomial b = P(r3, {{{2, 0, 0}, 1}, {{0, 0, 2}, -1}});
  Polynomial f = P(r3, {{{2, 0, 0}, 1}});
  CHECK(normal_form(f, {a, b}, r3) == P(r3, {{{0, 2, 0}, 1}}));
  CHECK(normal_form(f, {b, a}, r3) == P(r3, {{{0, 0, 2}, 1}}));

  Polynomial nf = normal_form(P(r3, {{{2, 2, 0}, 1}, {{1, 1, 1}, 1}}),
                              {a, b}, r3);
  CHECK(normal_form(nf, {a, b}, r3) == nf);
}

TEST_CASE("s-polynomial cancels leading terms") {
  const TermOrder r4 = TermOrder::rlex(4);
  Polynomial f = P(r4, {{{0, 2, 0, 0}, 1}, {{1, 0, 1, 0}, -1}});
  Polynomial g = P(r4, {{{1, 1, 0, 0}, 1}});
  CHECK(s_polynomial(f, g, r4) == P(r4, {{{2, 0, 1, 0}, -1}}));
}

TEST_CASE("buchberger on monomial input returns minimal generators") {
  const TermOrder r3 = TermOrder::rlex(3);
  std::vector<Polynomial> gens = {P(r3, {{{2, 0, 0}, 1}}),
                                  P(r3, {{{2, 1, 0}, 5}}),
                                  P(r3, {{{1, 1, 0}, 1}})};
  std::vector<Polynomial> basis = buchberger(gens, r3);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == P(r3, {{{2, 0, 0}, 1}}));
  CHECK(basis[1] == P(r3, {{{1, 1, 0}, 1}}));
}

TEST_CASE("reduced basis of the curve ideal under rlex") {
  const TermOrder r4 = TermOrder::rlex(4);
  std::vector<Polynomial> basis = buchberger(curve_gens(r4), r4);
  REQUIRE(basis.size() == 4);
  CHECK(basis[0] == P(r4, {{{1, 0, 2, 0}, 1}}));
  CHECK(basis[1] == P(r4, {{{2, 0, 0, 0}, 1}}));
  CHECK(basis[2] == P(r4, {{{1, 1, 0, 0}, 1}}));
  CHECK(basis[3] == P(r4, {{{0, 2, 0, 0}, 1}, {{1, 0, 1, 0}, -1}}));
  CHECK(is_groebner_basis(basis, r4));

  Ideal ideal(4, curve_gens(r4));
  CHECK(ideal.initial_ideal(r4) == curve_initial_rlex());
}

TEST_CASE("initial ideals of the cubic fixture under both orders") {
  const TermOrder r4 = TermOrder::rlex(4);
  const TermOrder h4 = TermOrder::hlex(4);
  Ideal ideal(4, cubic_gens(r4));

  CHECK(ideal.initial_ideal(r4) == growth_lex_ideal());

  // The hlex completion acquires y^2 z^2 from the pair of x t^2 - y^2 z
  // against x z.
  std::vector<Polynomial> basis = ideal.reduced_basis(h4);
  REQUIRE(basis.size() == 6);
  CHECK(basis[0] == P(h4, {{{0, 2, 2, 0}, 1}}));
  CHECK(basis[1] == P(h4, {{{1, 0, 0, 2}, 1}, {{0, 2, 1, 0}, -1}}));
  CHECK(basis[2] == P(h4, {{{0, 3, 0, 0}, 1}}));
  CHECK(basis[3] == P(h4, {{{2, 0, 0, 0}, 1}}));
  CHECK(basis[4] == P(h4, {{{1, 1, 0, 0}, 1}}));
  CHECK(basis[5] == P(h4, {{{1, 0, 1, 0}, 1}}));
  CHECK(is_groebner_basis(basis, h4));

  MonomialIdeal expected(4, {E({1, 0, 0, 2}), E({2, 0, 0, 0}), E({1, 1, 0, 0}),
                             E({1, 0, 1, 0}), E({0, 3, 0, 0}),
                             E({0, 2, 2, 0})});
  CHECK(ideal.initial_ideal(h4) == expected);
}

TEST_CASE("initial ideal of the curve under hlex is the growth-lex ideal") {
  const TermOrder h4 = TermOrder::hlex(4);
  Ideal ideal(4, curve_gens(h4));
  CHECK(ideal.initial_ideal(h4) == growth_lex_ideal());
}

TEST_CASE("groebner detects non-bases and respects the pair budget") {
  const TermOrder r4 = TermOrder::rlex(4);
  Polynomial f = P(r4, {{{0, 2, 0, 0}, 1}, {{1, 0, 1, 0}, -1}});
  Polynomial g = P(r4, {{{1, 1, 0, 0}, 1}});
  CHECK_FALSE(is_groebner_basis({f, g}, r4));

  Limits tight;
  tight.spair_budget = 1;
  try {
    buchberger(cubic_gens(r4), r4, tight);
    FAIL("budget should have been exhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Budget);
    CHECK(e.exit_code() == 3);
  }
}

TEST_CASE("reduced bases are presentation independent") {
  const TermOrder r4 = TermOrder::rlex(4);
  std::vector<Polynomial> gens = curve_gens(r4);
  Rng rng(0xF00D);
  for (int round = 0; round < 4; ++round) {
    std::vector<Polynomial> rewritten = gens;
    for (size_t i = 0; i < rewritten.size(); ++i) {
      size_t j = static_cast<size_t>(
          rng.uniform(0, static_cast<long>(gens.size()) - 1));
      if (j == i) continue;
      Rational scale(static_cast<long>(rng.uniform(1, 5)));
      rewritten[i] = poly_add(rewritten[i], poly_scale(gens[j], scale));
    }
    CHECK(buchberger(rewritten, r4) == buchberger(gens, r4));
  }
}

TEST_CASE("hilbert hint leaves the basis unchanged") {
  const TermOrder r4 = TermOrder::rlex(4);
  Ideal ideal(4, curve_gens(r4));
  std::vector<long> hint = hilbert_function_ideal(ideal, 12).values;
  CHECK(buchberger(curve_gens(r4), r4, {}, &hint) ==
        buchberger(curve_gens(r4), r4));
}

TEST_CASE("ideal membership and equality") {
  const TermOrder r4 = TermOrder::rlex(4);
  Ideal ideal(4, curve_gens(r4));
  CHECK(ideal.contains(P(r4, {{{0, 2, 0, 0}, 1}, {{1, 0, 1, 0}, -1}})));
  CHECK(ideal.contains(P(r4, {{{2, 3, 0, 0}, 7}})));
  CHECK_FALSE(ideal.contains(P(r4, {{{0, 0, 2, 0}, 1}})));

  std::vector<Polynomial> shuffled = {curve_gens(r4)[2], curve_gens(r4)[0],
                                      curve_gens(r4)[3], curve_gens(r4)[1]};
  CHECK(ideal.equals(Ideal(4, shuffled)));
  CHECK_FALSE(ideal.equals(Ideal(4, cubic_gens(r4))));
}

TEST_CASE("variable colon on monomial and general presentations") {
  const TermOrder r3 = TermOrder::rlex(3);
  Ideal mono(3, {P(r3, {{{2, 0, 0}, 1}}), P(r3, {{{1, 1, 0}, 1}})});
  Ideal expect(3, {P(r3, {{{1, 0, 0}, 1}}), P(r3, {{{0, 1, 0}, 1}})});
  CHECK(colon_var(mono, 0).equals(expect));

  // Same ideal hidden behind a non-monomial presentation takes the
  // elimination route and must agree.
  Ideal hidden(3, {P(r3, {{{2, 0, 0}, 1}, {{1, 1, 0}, 1}}),
                   P(r3, {{{1, 1, 0}, 1}})});
  CHECK(colon_var(hidden, 0).equals(expect));
}

TEST_CASE("iterated colon saturates the binomial-system ideal") {
  const TermOrder r4 = TermOrder::rlex(4);
  Ideal system(4, system_gens(r4));
  Ideal curve(4, curve_gens(r4));
  CHECK(colon_var_power(system, 3).equals(curve));
  // Saturated inputs are fixed points.
  CHECK(colon_var_power(curve, 3).equals(curve));
}

TEST_CASE("ideal intersection") {
  const TermOrder r3 = TermOrder::rlex(3);
  Ideal x(3, {P(r3, {{{1, 0, 0}, 1}})});
  Ideal y(3, {P(r3, {{{0, 1, 0}, 1}})});
  CHECK(ideal_intersection(x, y).equals(Ideal(3, {P(r3, {{{1, 1, 0}, 1}})})));

  Ideal curve(4, curve_gens(TermOrder::rlex(4)));
  CHECK(ideal_intersection(curve, curve).equals(curve));

  // Monomial intersections agree between the combinatorial rule and the
  // elimination route.
  Ideal a(3, {P(r3, {{{2, 0, 0}, 1}}), P(r3, {{{1, 1, 0}, 1}})});
  Ideal b(3, {P(r3, {{{0, 2, 0}, 1}})});
  Ideal combinatorial = ideal_intersection(a, b);
  Ideal hidden_a(3, {P(r3, {{{2, 0, 0}, 1}, {{1, 1, 0}, 1}}),
                     P(r3, {{{1, 1, 0}, 1}})});
  CHECK(combinatorial.equals(Ideal(3, {P(r3, {{{1, 2, 0}, 1}})})));
  CHECK(ideal_intersection(hidden_a, b).equals(combinatorial));
}

TEST_CASE("saturation routes and fixed points") {
  const TermOrder r4 = TermOrder::rlex(4);

  // Monomial route: the hlex initial ideal of the cubic fixture saturates to
  // (x, y^3, y^2 z^2).
  Ideal hlex_init = Ideal::from_monomial(
      MonomialIdeal(4, {E({1, 0, 0, 2}), E({2, 0, 0, 0}), E({1, 1, 0, 0}),
                        E({1, 0, 1, 0}), E({0, 3, 0, 0}), E({0, 2, 2, 0})}));
  Ideal expected = Ideal::from_monomial(
      MonomialIdeal(4, {E({1, 0, 0, 0}), E({0, 3, 0, 0}), E({0, 2, 2, 0})}));
  CHECK(saturate(hlex_init).equals(expected));

  // Borel-position route: the system ideal's rlex initial ideal is Borel, so
  // saturation is the single-variable colon.
  Ideal system(4, system_gens(r4));
  Ideal curve(4, curve_gens(r4));
  CHECK(saturate(system).equals(curve));
  CHECK(saturate(curve).equals(curve));

  // Generic route: principal ideal with a non-Borel initial ideal is already
  // saturated and must come back unchanged through the certified draws.
  const TermOrder r3 = TermOrder::rlex(3);
  Ideal principal(3, {P(r3, {{{0, 2, 0}, 1}, {{0, 0, 2}, -1}})});
  CHECK_FALSE(is_borel_ideal(principal.initial_ideal(r3)));
  CHECK(saturate(principal, 99).equals(principal));
}

TEST_CASE("saturation contains the input and is idempotent on seeds") {
  const TermOrder r4 = TermOrder::rlex(4);
  Rng rng(0xACED);
  for (int round = 0; round < 6; ++round) {
    std::vector<Polynomial> gens;
    const int count = 1 + static_cast<int>(rng.uniform(0, 1));
    for (int k = 0; k < count; ++k) {
      gens.push_back(rng_homogeneous(rng, r4, 4,
                                     1 + static_cast<int>(rng.uniform(0, 1)),
                                     2));
    }
    Ideal ideal(4, gens);
    Ideal sat = saturate(ideal, 7 + round);
    for (const Polynomial& g : ideal.generators()) CHECK(sat.contains(g));
    CHECK(saturate(sat, 31 + round).equals(sat));
  }
}

TEST_CASE("subring elimination and ring extension") {
  const TermOrder r3 = TermOrder::rlex(3);

  Ideal mono(3, {P(r3, {{{2, 0, 0}, 1}}), P(r3, {{{1, 1, 0}, 1}}),
                 P(r3, {{{0, 0, 1}, 1}})});
  Ideal small = eliminate_to_subring(mono, 2);
  const TermOrder r2 = TermOrder::rlex(2);
  CHECK(small.equals(Ideal(2, {P(r2, {{{2, 0}, 1}}), P(r2, {{{1, 1}, 1}})})));

  // Classical elimination: from xz - y^2 and yz - x^2 the subring on x, y
  // sees exactly the cubic relation.
  Ideal pair(3, {P(r3, {{{1, 0, 1}, 1}, {{0, 2, 0}, -1}}),
                 P(r3, {{{0, 1, 1}, 1}, {{2, 0, 0}, -1}})});
  Ideal eliminated = eliminate_to_subring(pair, 2);
  CHECK(eliminated.equals(Ideal(2, {P(r2, {{{3, 0}, 1}, {{0, 3}, -1}})})));

  Ideal back = extend_ring(eliminated, 3);
  CHECK(back.width() == 3);
  for (const Polynomial& g : back.generators()) CHECK(pair.contains(g));

  CHECK(eliminate_to_subring(mono, 3).equals(mono));
}

TEST_CASE("hilbert data of ideals matches the monomial route") {
  const TermOrder r4 = TermOrder::rlex(4);
  Ideal curve(4, curve_gens(r4));
  HilbertData via_ideal = hilbert_function_ideal(curve, 10);
  HilbertData via_monomial = hilbert_function(curve_initial_rlex(), 10);
  CHECK(via_ideal == via_monomial);

  HilbertData zero = hilbert_function_ideal(Ideal::zero(4), 6);
  for (long v : zero.values) CHECK(v == 0);

  // The saturated hlex ideal dominates the growth-lex ideal degreewise with
  // strictness somewhere below degree 10.
  HilbertData upper = hilbert_function(
      MonomialIdeal(4, {E({1, 0, 0, 0}), E({0, 3, 0, 0}), E({0, 2, 2, 0})}),
      10);
  HilbertData lower = hilbert_function(growth_lex_ideal(), 10);
  bool strict = false;
  for (int d = 0; d <= 10; ++d) {
    CHECK(upper.at(d) >= lower.at(d));
    strict = strict || upper.at(d) > lower.at(d);
  }
  CHECK(strict);
}

TEST_CASE("hilbert function is order independent on seeded ideals") {
  const TermOrder r4 = TermOrder::rlex(4);
  const TermOrder h4 = TermOrder::hlex(4);
  Rng rng(0xBEEF);
  for (int round = 0; round < 20; ++round) {
    std::vector<Polynomial> gens;
    const int count = 1 + static_cast<int>(rng.uniform(0, 3));
    for (int k = 0; k < count; ++k) {
      gens.push_back(rng_homogeneous(rng, r4, 4,
                                     1 + static_cast<int>(rng.uniform(0, 2)),
                                     1 + static_cast<int>(rng.uniform(0, 2))));
    }
    Ideal ideal(4, gens);
    HilbertData via_rlex = hilbert_function(ideal.initial_ideal(r4), 10);
    HilbertData via_hlex = hilbert_function(ideal.initial_ideal(h4), 10);
    CHECK(via_rlex == via_hlex);
  }
}

TEST_CASE("weight degeneration of a principal ideal") {
  const TermOrder r3 = TermOrder::rlex(3);
  Ideal principal(3, {P(r3, {{{0, 2, 0}, 1}, {{1, 0, 1}, -1}})});
  DegenerationFamily family =
      weight_degeneration(principal, r3, {Rational(1), Rational(2)});

  REQUIRE(family.weights.size() == 3);
  REQUIRE(family.family.size() == 1);
  const TermOrder r4 = TermOrder::rlex(4);
  CHECK(family.family[0] ==
        P(r4, {{{0, 2, 0, 0}, 1}, {{1, 0, 1, 2}, -1}}));

  CHECK(family.fiber(1).equals(principal));
  CHECK(family.fiber(0).equals(
      Ideal(3, {P(r3, {{{0, 2, 0}, 1}})})));
  CHECK(family.fiber(2).equals(
      Ideal(3, {P(r3, {{{0, 2, 0}, 1}, {{1, 0, 1}, -4}})})));
}

TEST_CASE("weight degeneration of the curve ideal reaches its initial ideal") {
  const TermOrder r4 = TermOrder::rlex(4);
  Ideal curve(4, curve_gens(r4));
  DegenerationFamily family =
      weight_degeneration(curve, r4, {Rational(1), Rational(2)});
  CHECK(family.fiber(0).equals(Ideal::from_monomial(curve_initial_rlex())));
  CHECK(family.fiber(1).equals(curve));

  // Monomial ideals give constant families.
  Ideal mono = Ideal::from_monomial(curve_initial_rlex());
  DegenerationFamily constant = weight_degeneration(mono, r4, {Rational(3)});
  CHECK(constant.fiber(0).equals(mono));
  CHECK(constant.fiber(7).equals(mono));
}
