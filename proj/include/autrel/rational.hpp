#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace autrel {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical: reduced, positive denominator

/// Parses "7", "-3", "22/7". Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Exact k-th root of q in Q, if one exists.
std::optional<Rational> rational_root(const Rational& q, unsigned long k);

/// Exact square root in Q, if one exists.
inline std::optional<Rational> rational_sqrt(const Rational& q) { return rational_root(q, 2); }

Rational rational_pow(const Rational& q, unsigned long k);

}  // namespace autrel
