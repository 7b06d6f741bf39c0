#pragma once

#include <string>

#include "bforge/exponent.hpp"

namespace bforge {

enum class OrderKind { Hlex, Rlex, ElimFirst };

// Degree-first monomial orders with X_1 > X_2 > ... > X_n. ElimFirst(k)
// eliminates the leading block of k variables; it is used internally for
// colon, intersection and subring sections and is not an input order.
class TermOrder {
 public:
  static TermOrder hlex(int width) { return TermOrder(OrderKind::Hlex, width, 0); }
  static TermOrder rlex(int width) { return TermOrder(OrderKind::Rlex, width, 0); }
  static TermOrder elim_first(int block, int width) {
    return TermOrder(OrderKind::ElimFirst, width, block);
  }

  OrderKind kind() const { return kind_; }
  int width() const { return width_; }
  int block() const { return block_; }

  // -1, 0 or +1 as u < v, u = v or u > v.
  int compare(const Exponent& u, const Exponent& v) const;

  bool greater(const Exponent& u, const Exponent& v) const { return compare(u, v) > 0; }
  bool less(const Exponent& u, const Exponent& v) const { return compare(u, v) < 0; }

  std::string name() const;

  bool operator==(const TermOrder& other) const = default;
  bool operator<(const TermOrder& other) const {
    if (kind_ != other.kind_) return kind_ < other.kind_;
    if (width_ != other.width_) return width_ < other.width_;
    return block_ < other.block_;
  }

 private:
  TermOrder(OrderKind kind, int width, int block)
      : kind_(kind), width_(width), block_(block) {}

  OrderKind kind_;
  int width_;
  int block_;
};

// Parses "hlex" or "rlex"; anything else is a Parse error.
TermOrder order_from_name(const std::string& name, int width);

}  // namespace bforge
