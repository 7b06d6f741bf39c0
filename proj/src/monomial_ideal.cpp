#include "bforge/monomial_ideal.hpp"

#include <algorithm>

#include "bforge/errors.hpp"
#include "bforge/term_order.hpp"

namespace bforge {

MonomialIdeal::MonomialIdeal(int width, std::vector<Exponent> generators)
    : width_(width) {
  for (const Exponent& g : generators) {
    if (g.width() != width_) {
      throw Error(ErrorCode::WidthMismatch, "generator width mismatch");
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  for (const Exponent& g : generators) {
    bool redundant = false;
    for (const Exponent& other : generators) {
      if (!(other == g) && divides(other, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(g);
  }
  TermOrder rlex = TermOrder::rlex(width_);
  std::sort(gens_.begin(), gens_.end(),
            [&rlex](const Exponent& a, const Exponent& b) {
              return rlex.greater(a, b);
            });
}

bool MonomialIdeal::contains(const Exponent& e) const {
  if (e.width() != width_) {
    throw Error(ErrorCode::WidthMismatch, "membership width mismatch");
  }
  return std::any_of(gens_.begin(), gens_.end(),
                     [&e](const Exponent& g) { return divides(g, e); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](const Exponent& g) { return contains(g); });
}

int MonomialIdeal::max_generator_degree() const {
  int max_degree = 0;
  for (const Exponent& g : gens_) max_degree = std::max(max_degree, g.degree());
  return max_degree;
}

MonomialIdeal mi_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.width() != b.width()) {
    throw Error(ErrorCode::WidthMismatch, "intersection width mismatch");
  }
  std::vector<Exponent> gens;
  for (const Exponent& p : a.generators()) {
    for (const Exponent& q : b.generators()) {
      gens.push_back(exp_lcm(p, q));
    }
  }
  return MonomialIdeal(a.width(), std::move(gens));
}

MonomialIdeal mi_colon_var(const MonomialIdeal& ideal, int var) {
  std::vector<Exponent> gens;
  for (const Exponent& g : ideal.generators()) {
    if (g[var] > 0) {
      gens.push_back(exp_sub(g, Exponent::unit(ideal.width(), var)));
    } else {
      gens.push_back(g);
    }
  }
  return MonomialIdeal(ideal.width(), std::move(gens));
}

MonomialIdeal mi_colon_var_power(const MonomialIdeal& ideal, int var) {
  std::vector<Exponent> gens;
  for (const Exponent& g : ideal.generators()) {
    std::vector<int> entries = g.entries();
    entries[static_cast<size_t>(var)] = 0;
    gens.emplace_back(std::move(entries));
  }
  return MonomialIdeal(ideal.width(), std::move(gens));
}

MonomialIdeal saturate_monomial(const MonomialIdeal& ideal) {
  MonomialIdeal result = mi_colon_var_power(ideal, 0);
  for (int var = 1; var < ideal.width(); ++var) {
    result = mi_intersect(result, mi_colon_var_power(ideal, var));
  }
  return result;
}

bool is_borel_ideal(const MonomialIdeal& ideal, int up_to) {
  if (up_to >= 0 && up_to < ideal.max_generator_degree()) {
    throw Error(ErrorCode::Validation,
                "Borel test bound below the generator degrees");
  }
  for (const Exponent& g : ideal.generators()) {
    for (int j = 1; j < ideal.width(); ++j) {
      if (g[j] == 0) continue;
      for (int i = 0; i < j; ++i) {
        std::vector<int> moved = g.entries();
        moved[static_cast<size_t>(j)] -= 1;
        moved[static_cast<size_t>(i)] += 1;
        if (!ideal.contains(Exponent(std::move(moved)))) return false;
      }
    }
  }
  return true;
}

MonomialIdeal restrict_to_subring(const MonomialIdeal& ideal, int vars) {
  std::vector<Exponent> gens;
  for (const Exponent& g : ideal.generators()) {
    if (support_within(g, vars)) gens.push_back(g.truncated(vars));
  }
  return MonomialIdeal(vars, std::move(gens));
}

MonomialIdeal extend_to_width(const MonomialIdeal& ideal, int width) {
  std::vector<Exponent> gens;
  for (const Exponent& g : ideal.generators()) gens.push_back(g.extended(width));
  return MonomialIdeal(width, std::move(gens));
}

MonomialIdeal ideal_from_exponents(int width, const std::set<Exponent>& gens) {
  return MonomialIdeal(width, std::vector<Exponent>(gens.begin(), gens.end()));
}

}  // namespace bforge
