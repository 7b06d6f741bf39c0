#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "bforge/borel.hpp"
#include "bforge/exponent.hpp"
#include "bforge/rational.hpp"
#include "bforge/term_order.hpp"

using namespace bforge;

namespace {

Exponent E(std::vector<int> v) { return Exponent(std::move(v)); }

// Independent reachability oracle: a dominates b iff b is reachable from a
// by single moves e_j -> e_{j+1}.
bool borel_ge_oracle(const Exponent& a, const Exponent& b) {
  if (a.degree() != b.degree()) return false;
  std::set<Exponent> seen;
  std::vector<Exponent> frontier{a};
  while (!frontier.empty()) {
    Exponent e = frontier.back();
    frontier.pop_back();
    if (!seen.insert(e).second) continue;
    if (e == b) return true;
    for (int j = 0; j + 1 < e.width(); ++j) {
      if (e[j] == 0) continue;
      std::vector<int> moved = e.entries();
      moved[static_cast<size_t>(j)] -= 1;
      moved[static_cast<size_t>(j) + 1] += 1;
      frontier.emplace_back(std::move(moved));
    }
  }
  return false;
}

bool witness_validates(const BorelWitness& w, const Exponent& a, const Exponent& b) {
  return w.comparable && w.matrix.is_nonnegative() && w.matrix.row_sums() == a &&
         w.matrix.col_sums() == b;
}

}  // namespace

TEST_CASE("degree-first lex and rlex disagree on pinned pairs") {
  TermOrder r3 = TermOrder::rlex(3);
  TermOrder h3 = TermOrder::hlex(3);
  Exponent yy = E({0, 2, 0});
  Exponent xz = E({1, 0, 1});
  CHECK(r3.compare(yy, xz) == 1);
  CHECK(h3.compare(yy, xz) == -1);

  TermOrder r4 = TermOrder::rlex(4);
  TermOrder h4 = TermOrder::hlex(4);
  Exponent yyz = E({0, 2, 1, 0});
  Exponent xtt = E({1, 0, 0, 2});
  CHECK(r4.compare(yyz, xtt) == 1);
  CHECK(h4.compare(xtt, yyz) == 1);
}

TEST_CASE("degree dominates both orders") {
  TermOrder r3 = TermOrder::rlex(3);
  TermOrder h3 = TermOrder::hlex(3);
  Exponent x = E({1, 0, 0});
  Exponent yy = E({0, 2, 0});
  CHECK(r3.compare(yy, x) == 1);
  CHECK(h3.compare(yy, x) == 1);
  CHECK(r3.compare(x, x) == 0);
}

TEST_CASE("orders are total, antisymmetric and multiplicative on N^4_3") {
  std::vector<Exponent> slice = monomials_of_degree(4, 3);
  for (TermOrder ord : {TermOrder::rlex(4), TermOrder::hlex(4)}) {
    for (const Exponent& u : slice) {
      for (const Exponent& v : slice) {
        int cmp = ord.compare(u, v);
        CHECK(cmp == -ord.compare(v, u));
        CHECK((cmp == 0) == (u == v));
        for (const Exponent& w : monomials_of_degree(4, 2)) {
          CHECK(ord.compare(exp_add(u, w), exp_add(v, w)) == cmp);
        }
      }
    }
  }
}

TEST_CASE("monomials_of_degree enumerates descending hlex") {
  TermOrder h = TermOrder::hlex(4);
  std::vector<Exponent> slice = monomials_of_degree(4, 3);
  CHECK(slice.size() == 20);
  CHECK(Integer(20) == monomial_count(4, 3));
  for (size_t i = 0; i + 1 < slice.size(); ++i) {
    CHECK(h.compare(slice[i], slice[i + 1]) == 1);
  }
  CHECK(slice.front() == E({3, 0, 0, 0}));
  CHECK(slice.back() == E({0, 0, 0, 3}));
}

TEST_CASE("signed exponent transforms") {
  SignedExponent rho({1, -2, 1, 0});
  CHECK(rho.max_var() == 2);
  CHECK(rho.plus_part() == E({1, 0, 1, 0}));
  CHECK(rho.minus_part() == E({0, 2, 0, 0}));
  CHECK(rho.sum() == 0);
  CHECK(rho.negated().plus_part() == E({0, 2, 0, 0}));

  CHECK(E({0, 2, 0, 2, 1}).star() == E({0, 2, 0, 2, 0}));
  CHECK(E({0, 2, 0, 3, 0}).star() == E({0, 2, 0, 3, 0}));
  CHECK(E({0, 0, 0}).max_var() == 0);
  CHECK(E({1, 0, 0}).max_var() == 0);
  CHECK(E({0, 2, 0, 1}).max_var() == 3);

  CHECK(shifted(E({0, 2, 0, 2, 1}), SignedExponent({1, -2, 2, -2, 1})) ==
        E({1, 0, 2, 0, 2}));
  CHECK(!shifted(E({1, 0, 0, 0, 0}), SignedExponent({-2, 2, 0, 0, 0})).has_value());
}

TEST_CASE("borel_ge pinned prefix failure") {
  Exponent a = E({1, 0, 1, 1});
  Exponent b = E({0, 2, 0, 1});
  // Prefix sums of a - b begin 1, -1.
  CHECK(!borel_ge(a, b));
  CHECK(!borel_ge(b, a));
  CHECK(borel_ge(a, a));
  CHECK(borel_ge(E({3, 0, 0, 0}), E({0, 0, 1, 2})));
  CHECK(borel_ge(E({2, 0, 0}), E({1, 1, 0})));
  CHECK(borel_ge(E({1, 1, 0}), E({0, 2, 0})));
  CHECK(!borel_ge(E({1, 0, 1}), E({0, 2, 0})));
}

TEST_CASE("borel_ge ignores differing degrees and throws on width mismatch") {
  CHECK(!borel_ge(E({2, 0}), E({1, 0})));
  CHECK_THROWS_AS((void)borel_ge(E({1, 0}), E({1, 0, 0})), Error);
}

TEST_CASE("witness for the pinned pair is the unique U matrix") {
  Exponent a = E({0, 2, 0, 3, 0});
  Exponent b = E({0, 2, 0, 2, 1});
  BorelWitness w = borel_witness(a, b);
  REQUIRE(w.comparable);
  CHECK(w.repair_steps == 0);
  CHECK(witness_validates(w, a, b));

  std::vector<UpperTriangular> all = enumerate_U(a, b);
  REQUIRE(all.size() == 1);
  const UpperTriangular& m = all.front();
  CHECK(m.at(1, 1) == 2);
  CHECK(m.at(3, 3) == 2);
  CHECK(m.at(3, 4) == 1);
  int total = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = i; j < 5; ++j) total += m.at(i, j);
  }
  CHECK(total == 5);
  CHECK(w.matrix == m);
}

TEST_CASE("witness repair loop touches the seed exactly deficiency times") {
  Exponent a = E({1, 1, 0, 0});
  Exponent b = E({0, 0, 2, 0});
  BorelWitness w = borel_witness(a, b);
  REQUIRE(w.comparable);
  CHECK(w.repair_steps == 1);
  CHECK(witness_validates(w, a, b));
  CHECK(w.matrix.at(0, 2) == 1);
  CHECK(w.matrix.at(1, 2) == 1);
}

TEST_CASE("witness on incomparable input reports failure") {
  BorelWitness w = borel_witness(E({0, 2, 0}), E({1, 0, 1}));
  CHECK(!w.comparable);
  BorelWitness same_degree = borel_witness(E({1, 0, 1}), E({0, 2, 0}));
  CHECK(!same_degree.comparable);
}

TEST_CASE("enumerate_U pinned counts") {
  CHECK(enumerate_U(E({1, 1}), E({1, 1})).size() == 1);
  CHECK(enumerate_U(E({1, 1}), E({1, 1})).front().at(0, 0) == 1);
  CHECK(enumerate_U(E({1, 1, 0}), E({0, 1, 1})).size() == 2);
  CHECK(enumerate_U(E({0, 2, 0}), E({1, 0, 1})).empty());
}

TEST_CASE("enumerate_U budget trips") {
  Limits tight;
  tight.enum_budget = 2;
  CHECK_THROWS_AS((void)enumerate_U(E({3, 3, 3}), E({3, 3, 3}), tight), Error);
  try {
    (void)enumerate_U(E({3, 3, 3}), E({3, 3, 3}), tight);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Budget);
    CHECK(e.exit_code() == 3);
  }
}

TEST_CASE("order embedding: Borel dominance implies dominance in both orders") {
  std::vector<Exponent> slice = monomials_of_degree(4, 3);
  TermOrder r = TermOrder::rlex(4);
  TermOrder h = TermOrder::hlex(4);
  for (const Exponent& a : slice) {
    for (const Exponent& b : slice) {
      if (!borel_ge(a, b) || a == b) continue;
      CHECK(r.compare(a, b) == 1);
      CHECK(h.compare(a, b) == 1);
    }
  }
}

TEST_CASE("exhaustive equivalence on N^4_3: prefix test, U matrices, witness") {
  std::vector<Exponent> slice = monomials_of_degree(4, 3);
  for (const Exponent& a : slice) {
    for (const Exponent& b : slice) {
      bool expected = borel_ge_oracle(a, b);
      CHECK(borel_ge(a, b) == expected);
      CHECK(!enumerate_U(a, b).empty() == expected);
      BorelWitness w = borel_witness(a, b);
      CHECK(w.comparable == expected);
      if (expected) CHECK(witness_validates(w, a, b));
    }
  }
}

TEST_CASE("borel_ge is translation invariant") {
  std::vector<Exponent> slice = monomials_of_degree(3, 2);
  for (const Exponent& a : slice) {
    for (const Exponent& b : slice) {
      for (const Exponent& w : slice) {
        CHECK(borel_ge(a, b) == borel_ge(exp_add(a, w), exp_add(b, w)));
      }
    }
  }
}

TEST_CASE("borel_closure equals the dominance cone over the input") {
  std::set<Exponent> input{E({0, 2, 0, 1}), E({1, 0, 0, 2})};
  std::set<Exponent> closed = borel_closure(input);
  CHECK(is_borel_set(closed));
  for (const Exponent& c : monomials_of_degree(4, 3)) {
    bool above = std::any_of(input.begin(), input.end(), [&c](const Exponent& a) {
      return borel_ge(c, a);
    });
    CHECK(closed.count(c) == static_cast<size_t>(above));
  }
}

TEST_CASE("borel set membership pinned cases") {
  CHECK(!is_borel_set({E({0, 2, 0, 1})}));
  CHECK(is_borel_set({E({3, 0, 0})}));
  CHECK(is_borel_set(std::set<Exponent>{}));
  std::vector<Exponent> everything = monomials_of_degree(3, 4);
  CHECK(is_borel_set(std::set<Exponent>(everything.begin(), everything.end())));

  std::set<Exponent> bottom{E({0, 0, 0, 2})};
  std::set<Exponent> closed = borel_closure(bottom);
  CHECK(closed.size() == 10);
}

TEST_CASE("diagonal shift moves row and column sums by rho") {
  Exponent b = E({0, 2, 0, 3, 0});
  Exponent c = E({0, 2, 0, 2, 1});
  SignedExponent rho({1, -2, 2, -2, 1});
  UpperTriangular m = enumerate_U(b, c).front();
  auto shifted_m = m.diag_shifted(rho);
  REQUIRE(shifted_m.has_value());
  CHECK(shifted_m->row_sums() == E({1, 0, 2, 1, 1}));
  CHECK(shifted_m->col_sums() == E({1, 0, 2, 0, 2}));

  UpperTriangular small(2);
  small.set(0, 0, 1);
  small.set(1, 1, 1);
  CHECK(!small.diag_shifted(SignedExponent({-2, 2})).has_value());
}

TEST_CASE("multinomial helper") {
  CHECK(multinomial_coeff({1, 1}) == 2);
  CHECK(multinomial_coeff({2, 2}) == 6);
  CHECK(multinomial_coeff({0, 3}) == 1);
  CHECK(multinomial_coeff({1, 2, 3}) == 60);
  CHECK(binomial_coeff(6, 3) == 20);
  CHECK(monomial_count(4, 0) == 1);
}
