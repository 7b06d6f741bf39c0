#include "bforge/ideal.hpp"

#include <algorithm>

#include "bforge/groebner.hpp"

namespace bforge {

Ideal::Ideal(int width, std::vector<Polynomial> generators) : width_(width) {
  for (Polynomial& g : generators) {
    if (g.width() != width_) {
      throw Error(ErrorCode::WidthMismatch,
                  "generator width does not match the ideal's ring");
    }
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal::Ideal(const Ideal& other) : width_(other.width_) {
  std::lock_guard<std::mutex> lock(other.cache_mutex_);
  generators_ = other.generators_;
  basis_cache_ = other.basis_cache_;
}

Ideal& Ideal::operator=(const Ideal& other) {
  if (this == &other) return *this;
  Ideal copy(other);
  width_ = copy.width_;
  generators_ = std::move(copy.generators_);
  basis_cache_ = std::move(copy.basis_cache_);
  return *this;
}

Ideal Ideal::unit(int width) {
  return Ideal(width,
               {Polynomial::constant(TermOrder::rlex(width), 1)});
}

Ideal Ideal::from_monomial(const MonomialIdeal& m) {
  const TermOrder order = TermOrder::rlex(m.width());
  std::vector<Polynomial> gens;
  gens.reserve(m.generators().size());
  for (const Exponent& e : m.generators()) {
    gens.push_back(Polynomial::monomial(order, e));
  }
  return Ideal(m.width(), std::move(gens));
}

bool Ideal::all_monomial() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_monomial(); });
}

int Ideal::max_generator_degree() const {
  int deg = 0;
  for (const Polynomial& g : generators_) deg = std::max(deg, g.degree());
  return deg;
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

MonomialIdeal Ideal::to_monomial() const {
  if (!all_monomial()) {
    throw Error(ErrorCode::Validation,
                "ideal has non-monomial generators");
  }
  std::vector<Exponent> exps;
  exps.reserve(generators_.size());
  for (const Polynomial& g : generators_) exps.push_back(g.leading().exp);
  return MonomialIdeal(width_, std::move(exps));
}

const std::vector<Polynomial>& Ideal::reduced_basis(
    const TermOrder& order, const Limits& lim,
    const std::vector<long>* hilbert_hint) const {
  if (order.width() != width_) {
    throw Error(ErrorCode::WidthMismatch, "order width does not match ideal");
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = basis_cache_.find(order);
    if (it != basis_cache_.end()) return it->second;
  }
  std::vector<Polynomial> basis = buchberger(generators_, order, lim, hilbert_hint);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return basis_cache_.emplace(order, std::move(basis)).first->second;
}

MonomialIdeal Ideal::initial_ideal(const TermOrder& order,
                                   const Limits& lim) const {
  const std::vector<Polynomial>& basis = reduced_basis(order, lim);
  std::vector<Exponent> lts;
  lts.reserve(basis.size());
  for (const Polynomial& g : basis) lts.push_back(g.leading().exp);
  return MonomialIdeal(width_, std::move(lts));
}

bool Ideal::contains(const Polynomial& f, const Limits& lim) const {
  if (f.width() != width_) {
    throw Error(ErrorCode::WidthMismatch, "element width does not match ideal");
  }
  const TermOrder order = TermOrder::rlex(width_);
  return normal_form(f, reduced_basis(order, lim), order).is_zero();
}

bool Ideal::equals(const Ideal& other, const Limits& lim) const {
  if (width_ != other.width_) return false;
  const TermOrder order = TermOrder::rlex(width_);
  return reduced_basis(order, lim) == other.reduced_basis(order, lim);
}

}  // namespace bforge
