#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace schroeter {

using Int = mpz_class;
// Always held in canonical form: positive denominator, gcd 1.
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace. Throws
// GeometryError(ParseError) on anything else, including a zero denominator.
Rat parse_rat(std::string_view text);
Int parse_int(std::string_view text);

// "p/q", or "p" when q == 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& i);

}  // namespace schroeter
