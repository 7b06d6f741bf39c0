#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bforge {

using Rational = mpq_class;
using Integer = mpz_class;

Integer binomial_coeff(long n, long k);

// Number of monomials of degree d in w variables, i.e. C(d+w-1, w-1).
Integer monomial_count(int width, long degree);

// n! / (k_1! ... k_r!) where n is the sum of the parts.
Integer multinomial_coeff(const std::vector<int>& parts);

// Canonical rational rendering: "p" or "p/q" with q > 0.
std::string rational_to_string(const Rational& value);

Rational parse_rational(const std::string& text);

}  // namespace bforge
