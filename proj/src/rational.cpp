#include "bforge/rational.hpp"

#include <stdexcept>

namespace bforge {

Integer binomial_coeff(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Integer monomial_count(int width, long degree) {
  if (degree < 0) return 0;
  if (width == 0) return degree == 0 ? 1 : 0;
  return binomial_coeff(degree + width - 1, width - 1);
}

Integer multinomial_coeff(const std::vector<int>& parts) {
  long total = 0;
  Integer result = 1;
  for (int part : parts) {
    if (part < 0) throw std::invalid_argument("multinomial part must be nonnegative");
    total += part;
    result *= binomial_coeff(total, part);
  }
  return result;
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();
}

Rational parse_rational(const std::string& text) {
  Rational value(text);
  value.canonicalize();
  return value;
}

}  // namespace bforge
