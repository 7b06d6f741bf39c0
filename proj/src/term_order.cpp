#include "bforge/term_order.hpp"

#include <stdexcept>

#include "bforge/errors.hpp"

namespace bforge {

namespace {

int sign_of(int value) { return value > 0 ? 1 : value < 0 ? -1 : 0; }

// Same-degree lexicographic step: first differing entry decides.
int lex_tie(const Exponent& u, const Exponent& v) {
  for (int i = 0; i < u.width(); ++i) {
    if (u[i] != v[i]) return u[i] > v[i] ? 1 : -1;
  }
  return 0;
}

// Same-degree reverse-lexicographic step: last differing entry decides,
// and the smaller entry there wins.
int rlex_tie(const Exponent& u, const Exponent& v) {
  for (int i = u.width() - 1; i >= 0; --i) {
    if (u[i] != v[i]) return u[i] < v[i] ? 1 : -1;
  }
  return 0;
}

int block_degree(const Exponent& u, int block) {
  int total = 0;
  for (int i = 0; i < block; ++i) total += u[i];
  return total;
}

}  // namespace

int TermOrder::compare(const Exponent& u, const Exponent& v) const {
  if (u.width() != width_ || v.width() != width_) {
    throw Error(ErrorCode::WidthMismatch, "term order width mismatch");
  }
  switch (kind_) {
    case OrderKind::Hlex:
      if (u.degree() != v.degree()) return sign_of(u.degree() - v.degree());
      return lex_tie(u, v);
    case OrderKind::Rlex:
      if (u.degree() != v.degree()) return sign_of(u.degree() - v.degree());
      return rlex_tie(u, v);
    case OrderKind::ElimFirst: {
      int bu = block_degree(u, block_);
      int bv = block_degree(v, block_);
      if (bu != bv) return sign_of(bu - bv);
      if (u.degree() != v.degree()) return sign_of(u.degree() - v.degree());
      return rlex_tie(u, v);
    }
  }
  throw std::logic_error("unreachable order kind");
}

std::string TermOrder::name() const {
  switch (kind_) {
    case OrderKind::Hlex: return "hlex";
    case OrderKind::Rlex: return "rlex";
    case OrderKind::ElimFirst: return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

TermOrder order_from_name(const std::string& name, int width) {
  if (name == "hlex") return TermOrder::hlex(width);
  if (name == "rlex") return TermOrder::rlex(width);
  throw Error(ErrorCode::Parse, "unknown term order '" + name + "' (expected hlex or rlex)");
}

}  // namespace bforge
