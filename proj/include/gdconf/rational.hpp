#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gdconf {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
// or zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace gdconf
