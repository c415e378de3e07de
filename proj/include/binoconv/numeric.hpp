#ifndef BINOCONV_NUMERIC_HPP
#define BINOCONV_NUMERIC_HPP

#include <gmpxx.h>

#include <string>

namespace binoconv {

// Exact arithmetic carriers. Int is an arbitrary-precision signed integer.
// Rat is an exact rational kept canonical: den > 0 and gcd(|num|, den) = 1.
using Int = mpz_class;
using Rat = mpq_class;

// Quotient n / d; requires d != 0 and exact divisibility.
Int exact_div(const Int& n, const Int& d);

// b^e for integer e >= 0, with the convention 0^0 = 1. Rejects e < 0.
Int pow0(const Int& b, const Int& e);

// b^e over rationals, e >= 0 (0^0 = 1 here too).
Rat rat_pow(const Rat& b, unsigned long e);

// Canonical rational num/den. Rejects den == 0.
Rat make_rat(const Int& num, const Int& den);

// Parses "p", "-p" or "p/q" (base 10) into a canonical rational.
Rat parse_rat(const std::string& text);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

// Narrowing for loop bounds; rejects values that do not fit a long.
long to_long(const Int& v, const char* what);

}  // namespace binoconv

#endif
