#include "bforge/exponent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bforge {

Exponent::Exponent(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("exponent entries must be nonnegative");
    degree_ += e;
  }
}

Exponent Exponent::zero(int width) {
  return Exponent(std::vector<int>(static_cast<size_t>(width), 0));
}

Exponent Exponent::unit(int width, int var) {
  std::vector<int> v(static_cast<size_t>(width), 0);
  v.at(static_cast<size_t>(var)) = 1;
  return Exponent(std::move(v));
}

int Exponent::max_var() const {
  for (int i = width() - 1; i >= 0; --i) {
    if (entries_[static_cast<size_t>(i)] != 0) return i;
  }
  return 0;
}

Exponent Exponent::star() const {
  if (entries_.empty()) return *this;
  std::vector<int> v = entries_;
  v.back() = 0;
  return Exponent(std::move(v));
}

Exponent Exponent::truncated(int new_width) const {
  if (new_width > width()) throw std::invalid_argument("truncation widens");
  if (!support_within(*this, new_width)) {
    throw std::invalid_argument("truncation drops support: " + to_string());
  }
  return Exponent(std::vector<int>(entries_.begin(), entries_.begin() + new_width));
}

Exponent Exponent::extended(int new_width) const {
  if (new_width < width()) throw std::invalid_argument("extension narrows");
  std::vector<int> v = entries_;
  v.resize(static_cast<size_t>(new_width), 0);
  return Exponent(std::move(v));
}

std::string Exponent::to_string() const {
  std::string out = "(";
  for (int i = 0; i < width(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[static_cast<size_t>(i)]);
  }
  return out + ")";
}

bool divides(const Exponent& a, const Exponent& b) {
  if (a.width() != b.width()) throw std::invalid_argument("width mismatch");
  for (int i = 0; i < a.width(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool support_within(const Exponent& a, int vars) {
  for (int i = vars; i < a.width(); ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

bool coprime(const Exponent& a, const Exponent& b) {
  if (a.width() != b.width()) throw std::invalid_argument("width mismatch");
  for (int i = 0; i < a.width(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

Exponent exp_add(const Exponent& a, const Exponent& b) {
  if (a.width() != b.width()) throw std::invalid_argument("width mismatch");
  std::vector<int> v(static_cast<size_t>(a.width()));
  for (int i = 0; i < a.width(); ++i) v[static_cast<size_t>(i)] = a[i] + b[i];
  return Exponent(std::move(v));
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
  if (a.width() != b.width()) throw std::invalid_argument("width mismatch");
  std::vector<int> v(static_cast<size_t>(a.width()));
  for (int i = 0; i < a.width(); ++i) {
    if (a[i] < b[i]) throw std::invalid_argument("negative exponent in difference");
    v[static_cast<size_t>(i)] = a[i] - b[i];
  }
  return Exponent(std::move(v));
}

Exponent exp_lcm(const Exponent& a, const Exponent& b) {
  if (a.width() != b.width()) throw std::invalid_argument("width mismatch");
  std::vector<int> v(static_cast<size_t>(a.width()));
  for (int i = 0; i < a.width(); ++i) v[static_cast<size_t>(i)] = std::max(a[i], b[i]);
  return Exponent(std::move(v));
}

long weight_of(const Exponent& a, const std::vector<long>& weights) {
  if (static_cast<int>(weights.size()) != a.width()) {
    throw std::invalid_argument("weight vector width mismatch");
  }
  long total = 0;
  for (int i = 0; i < a.width(); ++i) total += weights[static_cast<size_t>(i)] * a[i];
  return total;
}

SignedExponent::SignedExponent(std::vector<int> entries) : entries_(std::move(entries)) {}

int SignedExponent::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool SignedExponent::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

int SignedExponent::max_var() const {
  for (int i = width() - 1; i >= 0; --i) {
    if (entries_[static_cast<size_t>(i)] != 0) return i;
  }
  return 0;
}

Exponent SignedExponent::plus_part() const {
  std::vector<int> v(static_cast<size_t>(width()));
  for (int i = 0; i < width(); ++i) v[static_cast<size_t>(i)] = std::max(entries_[static_cast<size_t>(i)], 0);
  return Exponent(std::move(v));
}

Exponent SignedExponent::minus_part() const {
  std::vector<int> v(static_cast<size_t>(width()));
  for (int i = 0; i < width(); ++i) v[static_cast<size_t>(i)] = std::max(-entries_[static_cast<size_t>(i)], 0);
  return Exponent(std::move(v));
}

SignedExponent SignedExponent::negated() const {
  std::vector<int> v = entries_;
  for (int& e : v) e = -e;
  return SignedExponent(std::move(v));
}

SignedExponent SignedExponent::truncated(int new_width) const {
  if (new_width > width()) throw std::invalid_argument("truncation widens");
  return SignedExponent(std::vector<int>(entries_.begin(), entries_.begin() + new_width));
}

std::string SignedExponent::to_string() const {
  std::string out = "(";
  for (int i = 0; i < width(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[static_cast<size_t>(i)]);
  }
  return out + ")";
}

std::optional<Exponent> shifted(const Exponent& a, const SignedExponent& rho) {
  if (a.width() != rho.width()) throw std::invalid_argument("width mismatch");
  std::vector<int> v(static_cast<size_t>(a.width()));
  for (int i = 0; i < a.width(); ++i) {
    int e = a[i] + rho[i];
    if (e < 0) return std::nullopt;
    v[static_cast<size_t>(i)] = e;
  }
  return Exponent(std::move(v));
}

namespace {

void fill_monomials(int width, int degree, std::vector<int>& prefix,
                    std::vector<Exponent>& out) {
  if (static_cast<int>(prefix.size()) == width - 1) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    prefix.push_back(e);
    fill_monomials(width, degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(int width, int degree) {
  if (width <= 0) {
    if (degree == 0) return {Exponent(std::vector<int>{})};
    return {};
  }
  std::vector<Exponent> out;
  std::vector<int> prefix;
  fill_monomials(width, degree, prefix, out);
  return out;
}

}  // namespace bforge
