#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hyperpoly {

using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" (integers only, no decimals). Result is canonical.
Rational parse_rational(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

inline int sign_of(const Rational& q) { return sgn(q); }

/// Exact power of p dividing a nonzero integer.
int ord_p(const mpz_class& n, std::uint64_t p);

/// Reduces an angle (in units of pi) into [0, 2).
Rational reduce_angle(const Rational& q);

}  // namespace hyperpoly
