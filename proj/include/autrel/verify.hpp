#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autrel/autmap.hpp"
#include "autrel/relations.hpp"
#include "autrel/sampling.hpp"

namespace autrel {

struct CaseFailure {
  std::size_t index = 0;
  std::string message;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<CaseFailure> failures;
  std::map<std::string, std::size_t> counters;  // suite-specific tallies
  bool ok() const { return failures.empty(); }
};

/// lemma-1<2, parachute, lnd-witness, jvdk-roundtrip, classify-soundness, delta-identity
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite name.
SuiteResult run_suite(std::string_view name, std::uint64_t seed, std::size_t count);

// Single-case checks; an engaged result is the failure message.

/// decompose2 recomposes exactly and the degree sums strictly decrease.
std::optional<std::string> check_jvdk_roundtrip(const AutWord& w);
/// relation2 is z_a - c z_b^r with d_a = r d_b.
std::optional<std::string> check_relation_shape(const AutWord& w);
/// Index found, leading derivation locally nilpotent, and it kills R when R is given.
std::optional<std::string> check_lnd_witness(const AutWord& w, const std::optional<Polynomial>& R);
/// Delta_i(P) o phi = mu^-1 d(P o phi)/dx_i for every i.
std::optional<std::string> check_delta_identity(const AutWord& w, const Polynomial& p);
std::optional<std::string> check_lemma_case(const AutWord& w, const RelationReport& rep, const Polynomial& p);
std::optional<std::string> check_parachute_case(const AutWord& w, const RelationReport& rep, const Polynomial& p,
                                                unsigned k);
/// Classifies to the generating tag, reconstructs, normalizes and checks the canonical derivation.
std::optional<std::string> check_classifier_instance(const ClassifierInstance& in);
std::optional<std::string> check_forbidden_instance(const ForbiddenInstance& in);

/// Test polynomial for the lemma suites: a multiple of R plus lower-degree noise when
/// `in_ideal`, random otherwise.
Polynomial sample_test_polynomial(Rng& rng, const RelationReport& rep, bool in_ideal);

}  // namespace autrel
