#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "bforge/borel.hpp"
#include "bforge/exponent.hpp"
#include "bforge/hilbert.hpp"
#include "bforge/monomial_ideal.hpp"

using namespace bforge;

namespace {

Exponent E(std::vector<int> v) { return Exponent(std::move(v)); }

// K[x,y,z,t] fixtures.
MonomialIdeal lex_f() {
  return MonomialIdeal(4, {E({2, 0, 0, 0}), E({1, 1, 0, 0}), E({1, 0, 1, 0}),
                           E({0, 3, 0, 0}), E({0, 2, 1, 0})});
}

MonomialIdeal lex_q() {
  return MonomialIdeal(4, {E({1, 0, 0, 0}), E({0, 3, 0, 0}), E({0, 2, 2, 0})});
}

MonomialIdeal borel_b() {
  return MonomialIdeal(4, {E({2, 0, 0, 0}), E({1, 1, 0, 0}), E({0, 2, 0, 0}),
                           E({1, 0, 2, 0})});
}

Rational q_poly_at(long t) {
  return Rational(t) * t * t / 6 + Rational(t) * t - Rational(t) / 6 - 2;
}

// Slice-by-slice Borel check, independent of the generator-move shortcut.
bool is_borel_ideal_slices(const MonomialIdeal& ideal, int up_to) {
  for (int d = 0; d <= up_to; ++d) {
    std::set<Exponent> slice;
    for (const Exponent& e : monomials_of_degree(ideal.width(), d)) {
      if (ideal.contains(e)) slice.insert(e);
    }
    if (!is_borel_set(slice)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("construction minimalizes and deduplicates") {
  MonomialIdeal ideal(2, {E({2, 0}), E({4, 0}), E({1, 1}), E({1, 1})});
  REQUIRE(ideal.generators().size() == 2);
  CHECK(ideal.contains(E({4, 0})));
  CHECK(!ideal.contains(E({0, 3})));
  CHECK(ideal.max_generator_degree() == 2);

  CHECK(MonomialIdeal::zero(3).is_zero());
  CHECK(MonomialIdeal::unit(3).is_unit());
  CHECK(MonomialIdeal::unit(3).contains(E({0, 0, 0})));
}

TEST_CASE("borel ideal membership checks") {
  CHECK(is_borel_ideal(lex_f()));
  CHECK(is_borel_ideal(lex_q()));
  CHECK(is_borel_ideal(borel_b()));
  CHECK(!is_borel_ideal(MonomialIdeal(4, {E({0, 0, 0, 1})})));
  CHECK(!is_borel_ideal(MonomialIdeal(2, {E({0, 1})})));
  CHECK(is_borel_ideal(MonomialIdeal(1, {E({3})})));
  CHECK(!is_borel_ideal(MonomialIdeal(3, {E({0, 2, 0})})));
  CHECK_THROWS_AS((void)is_borel_ideal(lex_f(), 2), Error);
  CHECK(is_borel_ideal(lex_f(), 8));
}

TEST_CASE("borel ideal check agrees with slice-wise definition") {
  std::vector<MonomialIdeal> samples{
      lex_f(), lex_q(), borel_b(),
      MonomialIdeal(4, {E({0, 0, 0, 1})}),
      MonomialIdeal(3, {E({0, 2, 0})}),
      MonomialIdeal(3, {E({1, 0, 0}), E({0, 0, 2})}),
      MonomialIdeal::zero(3),
      MonomialIdeal::unit(3)};
  for (const MonomialIdeal& ideal : samples) {
    CHECK(is_borel_ideal(ideal) ==
          is_borel_ideal_slices(ideal, ideal.max_generator_degree() + 2));
  }
}

TEST_CASE("saturation of monomial ideals") {
  // In one variable a power of the variable saturates away; in more
  // variables (t^2) is already saturated because x is a nonzerodivisor on
  // the quotient.
  CHECK(saturate_monomial(MonomialIdeal(1, {E({2})})) == MonomialIdeal::unit(1));
  MonomialIdeal t_square(4, {E({0, 0, 0, 2})});
  CHECK(saturate_monomial(t_square) == t_square);
  CHECK(saturate_monomial(lex_q()) == lex_q());
  CHECK(saturate_monomial(lex_f()) == lex_f());
  CHECK(saturate_monomial(borel_b()) == borel_b());
  CHECK(saturate_monomial(MonomialIdeal::zero(3)) == MonomialIdeal::zero(3));

  // x * (x,y,z,t) saturates to (x); (y^2, t^3) is already saturated since
  // no associated prime is the irrelevant ideal.
  MonomialIdeal x_times_m(4, {E({2, 0, 0, 0}), E({1, 1, 0, 0}), E({1, 0, 1, 0}),
                              E({1, 0, 0, 1})});
  CHECK(saturate_monomial(x_times_m) == MonomialIdeal(4, {E({1, 0, 0, 0})}));
  MonomialIdeal mixed(4, {E({0, 2, 0, 0}), E({0, 0, 0, 3})});
  CHECK(saturate_monomial(mixed) == mixed);
}

TEST_CASE("saturation of a Borel ideal strips the trailing variable") {
  std::set<Exponent> closure = borel_closure({E({0, 2, 0, 1})});
  MonomialIdeal ideal = ideal_from_exponents(4, closure);
  REQUIRE(is_borel_ideal(ideal));

  std::vector<Exponent> starred;
  for (const Exponent& g : ideal.generators()) starred.push_back(g.star());
  MonomialIdeal by_star(4, std::move(starred));

  CHECK(saturate_monomial(ideal) == by_star);
  CHECK(saturate_monomial(by_star) == by_star);
}

TEST_CASE("saturation is idempotent and expands the ideal") {
  std::vector<MonomialIdeal> samples{
      MonomialIdeal(3, {E({0, 2, 0}), E({1, 0, 2})}),
      MonomialIdeal(4, {E({0, 2, 0, 1}), E({1, 0, 0, 2})}),
      MonomialIdeal(2, {E({0, 5})}),
      lex_f()};
  for (const MonomialIdeal& ideal : samples) {
    MonomialIdeal sat = saturate_monomial(ideal);
    CHECK(sat.contains(ideal));
    CHECK(saturate_monomial(sat) == sat);
  }
}

TEST_CASE("intersection and colon arithmetic") {
  MonomialIdeal a(3, {E({2, 0, 0}), E({0, 1, 0})});
  MonomialIdeal b(3, {E({1, 0, 0})});
  CHECK(mi_intersect(a, b) == MonomialIdeal(3, {E({2, 0, 0}), E({1, 1, 0})}));

  MonomialIdeal i(3, {E({2, 0, 0}), E({1, 1, 0}), E({0, 0, 1})});
  CHECK(mi_colon_var(i, 0) ==
        MonomialIdeal(3, {E({1, 0, 0}), E({0, 1, 0}), E({0, 0, 1})}));
  CHECK(mi_colon_var_power(i, 0) == MonomialIdeal::unit(3));

  // Colon by a variable not appearing anywhere is the identity.
  CHECK(mi_colon_var(a, 2) == a);
}

TEST_CASE("subring restriction and width extension") {
  MonomialIdeal ideal(3, {E({2, 0, 0}), E({1, 1, 0}), E({1, 0, 2}), E({0, 3, 0})});
  MonomialIdeal restricted = restrict_to_subring(ideal, 2);
  CHECK(restricted == MonomialIdeal(2, {E({2, 0}), E({1, 1}), E({0, 3})}));
  CHECK(extend_to_width(restricted, 3).contains(E({2, 0, 5})));
}

TEST_CASE("hilbert function pinned values") {
  HilbertData zero = hilbert_function(MonomialIdeal::zero(4), 6);
  for (long v : zero.values) CHECK(v == 0);

  HilbertData unit = hilbert_function(MonomialIdeal::unit(4), 6);
  for (int d = 0; d <= 6; ++d) {
    CHECK(Integer(unit.at(d)) == monomial_count(4, d));
  }

  HilbertData hq = hilbert_function(lex_q(), 10);
  CHECK(hq.at(0) == 0);
  CHECK(hq.at(1) == 1);
  CHECK(hq.at(8) == 146);
  HilbertData hf = hilbert_function(lex_f(), 10);
  CHECK(hf.at(1) == 0);
  CHECK(hf.at(2) == 3);
  CHECK(hf.at(3) == 11);
  for (int d = 3; d <= 10; ++d) {
    CHECK(Rational(hq.at(d)) == q_poly_at(d));
    CHECK(Rational(hf.at(d)) == q_poly_at(d));
  }
}

TEST_CASE("ideal plus quotient counts fill each degree") {
  MonomialIdeal ideal(3, {E({0, 2, 0}), E({1, 0, 2})});
  HilbertData h = hilbert_function(ideal, 8);
  for (int d = 0; d <= 8; ++d) {
    long complement = 0;
    for (const Exponent& e : monomials_of_degree(3, d)) {
      if (!ideal.contains(e)) ++complement;
    }
    CHECK(Integer(h.at(d) + complement) == monomial_count(3, d));
  }
}

TEST_CASE("interpolation recovers exact polynomials") {
  RationalPoly p = interpolate({{0, 1}, {1, 2}, {2, 5}});
  CHECK(p == RationalPoly({Rational(1), Rational(0), Rational(1)}));
  CHECK(p.eval(7) == 50);
  CHECK(RationalPoly().to_string() == "0");
}

TEST_CASE("hilbert polynomial of the pinned ideals") {
  RationalPoly q = hilbert_polynomial(lex_q());
  RationalPoly expected({Rational(-2), Rational(-1, 6), Rational(1), Rational(1, 6)});
  CHECK(q == expected);
  CHECK(q.to_string() == "1/6 t^3 + t^2 - 1/6 t - 2");

  CHECK(hilbert_polynomial(lex_f()) == expected);
  CHECK(hilbert_polynomial(borel_b()) == expected);

  RationalPoly unit = hilbert_polynomial(MonomialIdeal::unit(4));
  RationalPoly full({Rational(1), Rational(11, 6), Rational(1), Rational(1, 6)});
  CHECK(unit == full);

  CHECK(hilbert_polynomial(MonomialIdeal::zero(3)) == RationalPoly());
}

TEST_CASE("lex ideal reconstruction from Hilbert data") {
  MonomialIdeal x1(4, {E({1, 0, 0, 0})});
  HilbertData hx = hilbert_function(x1, 8);
  CHECK(lex_ideal_from_hilbert(hx, 8) == x1);

  HilbertData zero = hilbert_function(MonomialIdeal::zero(3), 5);
  CHECK(lex_ideal_from_hilbert(zero, 5) == MonomialIdeal::zero(3));

  HilbertData hb = hilbert_function(borel_b(), 10);
  MonomialIdeal lex = lex_ideal_from_hilbert(hb, 10);
  CHECK(hilbert_function(lex, 10) == hb);
  for (int d = 0; d <= 10; ++d) {
    std::vector<Exponent> slice;
    for (const Exponent& e : monomials_of_degree(4, d)) {
      if (lex.contains(e)) slice.push_back(e);
    }
    CHECK(is_lex_segment(slice));
  }
}

TEST_CASE("inadmissible Hilbert data is rejected") {
  HilbertData bad;
  bad.width = 3;
  bad.values = {0, 2, 0};
  CHECK_THROWS_AS((void)lex_ideal_from_hilbert(bad, 2), Error);

  HilbertData oversized;
  oversized.width = 3;
  oversized.values = {0, 9};
  CHECK_THROWS_AS((void)lex_ideal_from_hilbert(oversized, 1), Error);

  HilbertData short_data;
  short_data.width = 3;
  short_data.values = {0, 1};
  CHECK_THROWS_AS((void)lex_ideal_from_hilbert(short_data, 5), Error);
}

TEST_CASE("lex segment detection") {
  CHECK(is_lex_segment({E({2, 0, 0, 0}), E({1, 1, 0, 0}), E({1, 0, 1, 0})}));
  CHECK(is_lex_segment(monomials_of_degree(4, 3)));
  CHECK(is_lex_segment({}));

  // Degree-3 slice of l^f misses xt^2 while holding y^3.
  std::vector<Exponent> slice;
  for (const Exponent& e : monomials_of_degree(4, 3)) {
    if (lex_f().contains(e)) slice.push_back(e);
  }
  CHECK(slice.size() == 11);
  CHECK(!is_lex_segment(slice));

  CHECK_THROWS_AS((void)is_lex_segment({E({1, 0}), E({2, 0})}), Error);
}

TEST_CASE("default degree bound") {
  CHECK(default_degree_bound(2, 4) == 12);
  CHECK(default_degree_bound(0, 3) == 10);
}
