#pragma once

#include <string>

#include <gmpxx.h>

namespace ellgen {

// Exact rational scalar. mpq_class keeps the canonical form
// (denominator > 0, gcd(num, den) = 1) after every arithmetic operation.
using Rat = mpq_class;

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rat& r);

bool is_integer(const Rat& r);

/// num/den in canonical form.
inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// base^exp for any integer exponent; base must be nonzero when exp < 0.
Rat rat_pow(long base, int exp);

/// acc += a * b without allocating a temporary.
inline void add_product(Rat& acc, const Rat& a, const Rat& b, Rat& scratch) {
  mpq_mul(scratch.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), scratch.get_mpq_t());
}

}  // namespace ellgen
