#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace evb {

/// Exact rational; GMP keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p", "p/q". Throws InvalidInput on anything else or q = 0.
Rational parse_rational(std::string_view text);

}  // namespace evb
