#include "bforge/borel.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bforge {

void UpperTriangular::set(int row, int col, int value) {
  if (row > col) throw std::invalid_argument("entry below the diagonal");
  entries_[index(row, col)] = value;
}

Exponent UpperTriangular::row_sums() const {
  std::vector<int> sums(static_cast<size_t>(size_), 0);
  for (int i = 0; i < size_; ++i) {
    for (int j = i; j < size_; ++j) sums[static_cast<size_t>(i)] += at(i, j);
  }
  return Exponent(std::move(sums));
}

Exponent UpperTriangular::col_sums() const {
  std::vector<int> sums(static_cast<size_t>(size_), 0);
  for (int j = 0; j < size_; ++j) {
    for (int i = 0; i <= j; ++i) sums[static_cast<size_t>(j)] += at(i, j);
  }
  return Exponent(std::move(sums));
}

bool UpperTriangular::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e >= 0; });
}

std::optional<UpperTriangular> UpperTriangular::diag_shifted(
    const SignedExponent& rho) const {
  if (rho.width() != size_) throw std::invalid_argument("width mismatch");
  UpperTriangular shifted = *this;
  for (int i = 0; i < size_; ++i) {
    int e = at(i, i) + rho[i];
    if (e < 0) return std::nullopt;
    shifted.set(i, i, e);
  }
  return shifted;
}

std::string UpperTriangular::to_string() const {
  std::string out;
  for (int i = 0; i < size_; ++i) {
    out += i ? "; " : "[";
    for (int j = 0; j < size_; ++j) {
      if (j) out += " ";
      out += std::to_string(j >= i ? at(i, j) : 0);
    }
  }
  return out + "]";
}

namespace {

void require_same_shape(const Exponent& a, const Exponent& b) {
  if (a.width() != b.width()) {
    throw Error(ErrorCode::WidthMismatch, "Borel comparison needs equal widths");
  }
}

}  // namespace

bool borel_ge(const Exponent& a, const Exponent& b) {
  require_same_shape(a, b);
  if (a.degree() != b.degree()) return false;
  int prefix = 0;
  for (int i = 0; i < a.width(); ++i) {
    prefix += a[i] - b[i];
    if (prefix < 0) return false;
  }
  return true;
}

BorelWitness borel_witness(const Exponent& a, const Exponent& b) {
  require_same_shape(a, b);
  const int n = a.width();
  BorelWitness witness;
  witness.alphas.assign(static_cast<size_t>(n) + 1, 0);
  if (a.degree() != b.degree()) return witness;
  for (int k = 1; k <= n; ++k) {
    witness.alphas[static_cast<size_t>(k)] =
        witness.alphas[static_cast<size_t>(k) - 1] + a[k - 1] - b[k - 1];
    if (witness.alphas[static_cast<size_t>(k)] < 0) return witness;
  }
  // alphas[n] telescopes to deg a - deg b = 0, so only the diagonal of the
  // seed matrix below can be negative.
  witness.comparable = true;

  UpperTriangular m(n);
  int deficiency = 0;
  for (int i = 0; i < n; ++i) {
    int diag = b[i] - witness.alphas[static_cast<size_t>(i)];
    m.set(i, i, diag);
    if (diag < 0) deficiency -= diag;
    if (i + 1 < n) m.set(i, i + 1, witness.alphas[static_cast<size_t>(i) + 1]);
  }

  int steps = 0;
  for (;;) {
    int l = -1;
    for (int i = 0; i < n; ++i) {
      if (m.at(i, i) < 0) {
        l = i;
        break;
      }
    }
    if (l < 0) break;
    int p = -1;
    for (int i = 0; i < l; ++i) {
      if (m.at(i, l) > 0) {
        p = i;
        break;
      }
    }
    int q = -1;
    for (int j = l + 1; j < n; ++j) {
      if (m.at(l, j) > 0) {
        q = j;
        break;
      }
    }
    // Row and column sums are nonnegative while the diagonal entry is not,
    // so both pivots exist.
    assert(p >= 0 && q >= 0);
    m.set(l, l, m.at(l, l) + 1);
    m.set(p, q, m.at(p, q) + 1);
    m.set(p, l, m.at(p, l) - 1);
    m.set(l, q, m.at(l, q) - 1);
    ++steps;
  }
  assert(steps == deficiency);
  assert(m.is_nonnegative());
  assert(m.row_sums() == a && m.col_sums() == b);

  witness.matrix = m;
  witness.repair_steps = steps;
  return witness;
}

namespace {

struct USearch {
  const Exponent& a;
  const Exponent& b;
  int n;
  long budget;
  long nodes = 0;
  UpperTriangular current;
  std::vector<int> row_remaining;
  std::vector<UpperTriangular> found;

  USearch(const Exponent& a_in, const Exponent& b_in, long budget_in)
      : a(a_in), b(b_in), n(a_in.width()), budget(budget_in), current(n) {
    row_remaining.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) row_remaining.push_back(a[i]);
  }

  void charge() {
    if (++nodes > budget) {
      throw Error(ErrorCode::Budget, "enumerate_U budget exceeded after " +
                                         std::to_string(budget) + " nodes");
    }
  }

  // Distribute `left` over rows row..col of column col, then move on.
  void fill_column(int col, int row, int left) {
    charge();
    if (row == col) {
      if (left > row_remaining[static_cast<size_t>(row)]) return;
      current.set(row, col, left);
      row_remaining[static_cast<size_t>(row)] -= left;
      next_column(col + 1);
      row_remaining[static_cast<size_t>(row)] += left;
      current.set(row, col, 0);
      return;
    }
    int cap = std::min(left, row_remaining[static_cast<size_t>(row)]);
    for (int take = 0; take <= cap; ++take) {
      current.set(row, col, take);
      row_remaining[static_cast<size_t>(row)] -= take;
      fill_column(col, row + 1, left - take);
      row_remaining[static_cast<size_t>(row)] += take;
      current.set(row, col, 0);
    }
  }

  void next_column(int col) {
    if (col == n) {
      // Every column consumed its full sum and degrees agree, so the
      // leftover row capacity is zero in total, hence zero per row.
      found.push_back(current);
      return;
    }
    fill_column(col, 0, b[col]);
  }
};

}  // namespace

std::vector<UpperTriangular> enumerate_U(const Exponent& a, const Exponent& b,
                                         const Limits& limits) {
  require_same_shape(a, b);
  if (a.degree() != b.degree()) return {};
  USearch search(a, b, limits.enum_budget);
  search.next_column(0);
  for (const UpperTriangular& m : search.found) {
    assert(m.row_sums() == a && m.col_sums() == b);
    (void)m;
  }
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

std::set<Exponent> borel_closure(const std::set<Exponent>& input) {
  std::set<Exponent> closed;
  std::vector<Exponent> frontier(input.begin(), input.end());
  for (const Exponent& e : frontier) {
    if (e.width() != frontier.front().width()) {
      throw Error(ErrorCode::WidthMismatch, "mixed widths in Borel set");
    }
  }
  while (!frontier.empty()) {
    Exponent e = frontier.back();
    frontier.pop_back();
    if (!closed.insert(e).second) continue;
    // Adjacent moves generate all moves e_j -> e_i with i < j.
    for (int j = 1; j < e.width(); ++j) {
      if (e[j] == 0) continue;
      std::vector<int> lifted = e.entries();
      lifted[static_cast<size_t>(j)] -= 1;
      lifted[static_cast<size_t>(j) - 1] += 1;
      frontier.emplace_back(std::move(lifted));
    }
  }
  return closed;
}

bool is_borel_set(const std::set<Exponent>& input) {
  for (const Exponent& e : input) {
    for (int j = 1; j < e.width(); ++j) {
      if (e[j] == 0) continue;
      std::vector<int> lifted = e.entries();
      lifted[static_cast<size_t>(j)] -= 1;
      lifted[static_cast<size_t>(j) - 1] += 1;
      if (!input.count(Exponent(std::move(lifted)))) return false;
    }
  }
  return true;
}

}  // namespace bforge
