#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autrel/autmap.hpp"
#include "autrel/error.hpp"
#include "autrel/polynomial.hpp"

namespace autrel {

/// sum_i coeffs[i] * d/dx_i
struct Derivation {
  std::vector<Polynomial> coeffs;

  std::size_t nvars() const noexcept { return coeffs.size(); }
  bool is_zero() const;
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

Derivation partial_derivation(std::size_t nvars, std::size_t i);
/// delta_i = mu^{-1} d/dx_i
Derivation scaled_partial(std::size_t nvars, std::size_t i, const Rational& mu);

Polynomial apply(const Derivation& d, const Polynomial& p);
Polynomial apply_power(const Derivation& d, const Polynomial& p, unsigned k);

/// max_i wdeg(a_i) - w_i, minus infinity for the zero derivation.
WDegree derivation_degree(const Derivation& d, const WeightVector& w);
/// Throws DomainError on the zero derivation.
Derivation leading_derivation(const Derivation& d, const WeightVector& w);

/// deg_d(p): the largest k with d^k(p) != 0. Minus infinity for p = 0, nullopt when
/// cap iterations do not vanish.
std::optional<WDegree> nilpotence_order(const Derivation& d, const Polynomial& p, unsigned cap);

struct NilpotenceVerdict {
  enum class Kind { LocallyNilpotent, NotNilpotent, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<unsigned> orders;  // minimal k_i with d^{k_i}(x_i) = 0, LocallyNilpotent only
  std::size_t variable = 0;      // offending variable otherwise
  std::string reason;
};

std::string to_string(NilpotenceVerdict::Kind k);

unsigned default_nilpotence_cap(const Derivation& d);
/// cap = 0 selects default_nilpotence_cap.
NilpotenceVerdict is_locally_nilpotent(const Derivation& d, unsigned cap = 0);

/// Delta_i for the inverse map inv = (g_1, ..., g_n): coefficient j is
/// j(g_1, ..., g_{i-1}, x_j, g_{i+1}, ..., g_n).
Derivation delta_derivation(const PolyMap& inv, std::size_t i);

class NoWitnessIndex : public DomainError {
 public:
  using DomainError::DomainError;
};

struct LndWitness {
  std::size_t index = 0;
  WeightVector d;
  Derivation delta;
  WDegree delta_degree;
  Derivation dbar;
  NilpotenceVerdict verdict;
  std::optional<bool> annihilates;  // dbar(R) == 0 when R was supplied
};

/// First index i with deg2(Delta_i) >= -w_i. Throws NoWitnessIndex when none exists
/// or when the leading derivation is not locally nilpotent.
LndWitness lnd_witness(const Automorphism& phi, const WeightVector& w1,
                       const std::optional<Polynomial>& relation = std::nullopt, unsigned cap = 0);

std::string format_derivation(const Derivation& d);
Derivation parse_derivation(std::string_view text, std::size_t nvars);

}  // namespace autrel
