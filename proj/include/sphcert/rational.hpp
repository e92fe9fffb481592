#pragma once

// Exact scalar types. All coefficients in the engine are GMP rationals kept in
// canonical form (reduced, positive denominator).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace sphcert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

/// Parses "a" or "a/b" (optional leading '-'). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

double to_double(const Rational& q);

}  // namespace sphcert
