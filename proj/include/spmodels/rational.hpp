#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "spmodels/errors.hpp"

namespace spm {

/// Exact rational coefficient. gmpxx keeps results of arithmetic in canonical
/// form (gcd 1, positive denominator, zero is 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional sign, surrounding whitespace ignored).
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace spm
