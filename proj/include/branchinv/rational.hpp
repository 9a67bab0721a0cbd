#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace branchinv {

// Exact rational scalar. mpq_class keeps values canonical after every
// arithmetic operation; values built from strings go through parse_rational.
using Coefficient = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "-p/q" or an integer. Throws BranchError(Parse) otherwise,
/// including for a zero denominator.
Coefficient parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Coefficient& c);

inline Coefficient make_rational(long num, long den = 1) {
  Coefficient c{Integer(num), Integer(den)};
  c.canonicalize();
  return c;
}

bool is_integer(const Coefficient& c);

}  // namespace branchinv
