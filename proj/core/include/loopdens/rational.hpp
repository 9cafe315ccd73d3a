#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace loopdens {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator).
using Rational = mpq_class;

std::string rational_str(const Rational& r); // "13/110", "-2", "0"
Rational parse_rational(std::string_view s); // throws parse_error

// r^k for any integer k; throws division_by_zero_error for r = 0, k < 0.
Rational rational_pow(const Rational& r, long k);

mpz_class binomial(unsigned long n, unsigned long k);

} // namespace loopdens
