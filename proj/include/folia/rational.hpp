#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace folia {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p" or "p/q".
std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with an optional leading sign.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

}  // namespace folia
