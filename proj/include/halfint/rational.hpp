#ifndef HALFINT_RATIONAL_HPP
#define HALFINT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace halfint {

// Exact rationals are GMP's canonical mpq: reduced, denominator >= 1, zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p/q" with "/q" omitted when q = 1, leading '-' on the numerator.
std::string rational_to_string(const Rational& r);

/// Parses "p", "-p", "p/q". Rejects empty input, q = 0 and any stray characters.
Rational parse_rational(std::string_view text);

}  // namespace halfint

#endif
