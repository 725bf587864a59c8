#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "autrel/autmap.hpp"
#include "autrel/classify3.hpp"
#include "autrel/polynomial.hpp"
#include "autrel/relations.hpp"

namespace autrel {

using Rng = std::mt19937_64;

/// Uniform in [lo, hi]. Does not depend on the standard library's distributions,
/// so seeded corpora are identical across toolchains.
long uniform(Rng& rng, long lo, long hi);
/// Uniform in [-bound, bound] \ {0}.
long nonzero(Rng& rng, long bound);

struct WordOptions {
  std::size_t nvars = 2;
  unsigned max_gens = 6;
  unsigned max_addend_degree = 4;
  long coeff_bound = 9;
  long degree_budget = 32;  // cap on the total degree of the expanded map
  bool allow_affine = true;
};

AutWord sample_tame_word(Rng& rng, const WordOptions& opts);
AutWord sample_affine_word(Rng& rng, std::size_t nvars, unsigned gens = 3);
/// Resamples until the expansion is not affine.
AutWord sample_nonaffine_word(Rng& rng, const WordOptions& opts);

/// Random polynomial with at most `terms` terms of total degree <= max_degree.
Polynomial sample_polynomial(Rng& rng, std::size_t nvars, unsigned max_degree, unsigned terms, long coeff_bound);

/// Words in two variables with the default options.
std::vector<AutWord> tame_corpus2(std::uint64_t seed, std::size_t count);

struct PrincipalSample {
  AutWord word{3};
  RelationReport report;
};

/// Non-affine words in three variables whose kernel ideal is principal and nonzero.
std::vector<PrincipalSample> principal_corpus3(std::uint64_t seed, std::size_t count);

struct ClassifierInstance {
  RelationTag tag = RelationTag::Zero;
  Polynomial R{3};
  WeightVector d;
};

/// A relation generated from the pattern of `tag` with random parameters, shift and scale.
ClassifierInstance sample_classifier_instance(Rng& rng, RelationTag tag);

struct ForbiddenInstance {
  int entry = 0;
  Polynomial R{3};
  WeightVector d;
};

/// entry in 1..6
ForbiddenInstance sample_forbidden_instance(Rng& rng, int entry);

}  // namespace autrel
