#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "autrel/autmap.hpp"
#include "autrel/error.hpp"

namespace autrel {

struct ReductionStep {
  bool swapped = false;  // coordinates were exchanged before this step
  Rational c;
  unsigned r = 0;
  long degree_sum_before = 0;
  long degree_sum_after = 0;
};

struct Decomposition {
  AutWord word{2};
  std::vector<ReductionStep> steps;
  std::optional<Generator> affine_tail;  // absent when the affine part is the identity
};

struct NotAnAutomorphism {
  std::string stage;
  std::string reason;
};

using DecomposeOutcome = std::variant<Decomposition, NotAnAutomorphism>;

class NotAnAutomorphismError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// (c, r) with r = deg f / deg g and leading(f) = c leading(g)^r under the standard degree.
std::optional<std::pair<Rational, unsigned>> reduce_step(const Polynomial& f, const Polynomial& g);

/// On success expand(word) equals m exactly.
DecomposeOutcome decompose2(const PolyMap& m);

/// z_a - c z_b^r from the first reduction step, 0 for affine maps.
/// Throws NotAnAutomorphismError when decompose2 fails.
Polynomial relation2(const PolyMap& m);

}  // namespace autrel
