#pragma once

// Exact rational scalar used throughout the library.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace surfgerm {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (gmpxx canonicalizes after every arithmetic operation).
using Rat = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or "p" (optional leading sign). Throws std::invalid_argument
/// on malformed text or a zero denominator.
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Floor of a rational, as an integer.
BigInt floor_of(const Rat& r);

inline Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace surfgerm
