#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bk {

using BigInt = mpz_class;

// Exact rational. GMP keeps every mpq_class in canonical form (lowest terms,
// positive denominator) after each arithmetic operation; the parsers below
// canonicalize explicitly.
using Rat = mpq_class;

// Accepts an integer literal or "p/q" with q > 0. Throws ParseError.
Rat parse_rat(std::string_view text);

// Like parse_rat but additionally accepts decimal notation ("-0.25", "1e-3").
// Used for command-line values.
Rat parse_decimal(std::string_view text);

// p / q in lowest terms. The two-argument mpq_class constructor does not
// reduce, and GMP arithmetic requires reduced operands.
Rat ratio(long p, unsigned long q);

// Canonical "p/q" or integer literal.
std::string to_string(const Rat& value);

// n (n-1) ... (n-k+1); zero when k > n, one when k == 0.
BigInt falling_factorial(unsigned long n, unsigned long k);

}  // namespace bk
