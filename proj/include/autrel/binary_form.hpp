#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "autrel/error.hpp"
#include "autrel/polynomial.hpp"

namespace autrel {

/// Univariate polynomial, coeffs[i] multiplies t^i.
using UniPoly = std::vector<Rational>;

/// Rational roots with multiplicity, in ascending order. Throws DomainError when the
/// coefficients are too large for divisor enumeration.
std::vector<Rational> rational_roots(const UniPoly& p);

/// Q = c * prod_i (a_i x1^e1 + b_i x2^e2) * x1^r1 * x2^r2 with r_l < e_l.
struct BinaryFormFactors {
  Rational c;
  unsigned e1 = 1;
  unsigned e2 = 1;
  unsigned r1 = 0;
  unsigned r2 = 0;
  std::vector<std::pair<Rational, Rational>> pairs;  // (a_i, b_i), a_i = 1 unless a_i = 0; descending
  unsigned k() const { return static_cast<unsigned>(pairs.size()); }
};

struct BinaryFormNeedsExtension {
  std::string reason;
  unsigned e1 = 1;
  unsigned e2 = 1;
  unsigned r1 = 0;
  unsigned r2 = 0;
  unsigned k = 0;  // number of binomial factors over the algebraic closure
};

using BinaryFormResult = std::variant<BinaryFormFactors, BinaryFormNeedsExtension>;

class NotHomogeneous : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Q is a nonzero polynomial whose variables other than x1, x2 do not occur, homogeneous
/// for the integer weights (d1, d2).
BinaryFormResult factor_weighted_binary_form(const Polynomial& q, const Integer& d1, const Integer& d2);

/// Rebuilds c * prod(...) * x1^r1 * x2^r2 in `nvars` variables.
Polynomial expand_binary_form(const BinaryFormFactors& f, std::size_t nvars);

}  // namespace autrel
