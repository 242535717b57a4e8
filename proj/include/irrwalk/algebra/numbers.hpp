#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace irrwalk {

using Int = mpz_class;
using Rat = mpq_class;

std::string to_string(const Int& x);
// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rat& x);

Int parse_integer(std::string_view text);
Rat parse_rational(std::string_view text);

Int pow(const Int& base, unsigned long exp);
Rat pow(const Rat& base, unsigned long exp);
Int binomial(unsigned long n, unsigned long k);

inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rat& x) { return sgn(x); }

// floor(x) and ceil(x) for rationals.
Int floor(const Rat& x);
Int ceil(const Rat& x);

// x * 2^e for e possibly negative.
Rat mul_2exp(const Rat& x, long e);

double to_double(const Rat& x);

}  // namespace irrwalk
