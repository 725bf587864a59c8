#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "autrel/derivation.hpp"
#include "autrel/groebner.hpp"
#include "autrel/jvdk.hpp"
#include "autrel/relations.hpp"
#include "autrel/sampling.hpp"
#include "autrel/verify.hpp"

using namespace autrel;

namespace {

constexpr std::uint64_t kCorpusSeed = 2024;
constexpr std::uint64_t kCorpus3Seed = 3;

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Corpus {
  std::vector<AutWord> words2;
  std::vector<PolyMap> maps2;
  std::vector<RelationReport> reports2;
  std::vector<PrincipalSample> principal3;
};

Corpus& corpus() {
  static Corpus c = [] {
    Corpus out;
    out.words2 = tame_corpus2(kCorpusSeed, 100);
    for (const auto& w : out.words2) out.maps2.push_back(expand(w));
    return out;
  }();
  return c;
}

void fail(Verdict& v, const std::string& msg) {
  if (v.pass) v.detail = msg;
  v.pass = false;
}

std::string first_failure(const SuiteResult& s) {
  if (s.ok()) return "";
  return "case " + std::to_string(s.failures[0].index) + ": " + s.failures[0].message;
}

Verdict jvdk_round_trip() {
  Verdict v;
  auto& c = corpus();
  const auto start = std::chrono::steady_clock::now();
  std::size_t steps = 0;
  for (std::size_t i = 0; i < c.words2.size(); ++i) {
    if (auto f = check_jvdk_roundtrip(c.words2[i])) fail(v, "word " + std::to_string(i) + ": " + *f);
    auto out = decompose2(c.maps2[i]);
    if (auto* d = std::get_if<Decomposition>(&out)) steps += d->steps.size();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 60) fail(v, "runtime " + std::to_string(secs) + " s");
  if (v.pass) v.detail = "100 words, " + std::to_string(steps) + " reduction steps, " + std::to_string(secs) + " s";
  return v;
}

Verdict relation_shape() {
  Verdict v;
  auto& c = corpus();
  std::size_t nonaffine = 0, matched = 0;
  for (std::size_t i = 0; i < c.words2.size(); ++i) {
    if (is_affine_map(c.maps2[i])) continue;
    ++nonaffine;
    if (auto f = check_relation_shape(c.words2[i])) {
      fail(v, "word " + std::to_string(i) + ": " + *f);
      continue;
    }
    WeightVector d = deg2_weights(c.maps2[i], WeightVector::standard(2));
    std::vector<Polynomial> fbars;
    for (const auto& f : c.maps2[i].coords) fbars.push_back(leading_term(f, WeightVector::standard(2)));
    IdealBasis k = kernel_ideal(fbars, d);
    Polynomial r2 = make_monic(relation2(c.maps2[i]), k.order);
    if (k.gens.size() == 1 && k.gens[0] == r2) {
      ++matched;
    } else {
      fail(v, "word " + std::to_string(i) + ": relation2 differs from the kernel generator");
    }
  }
  if (matched < 25) fail(v, "only " + std::to_string(matched) + " kernel matches");
  if (v.pass) {
    v.detail = std::to_string(nonaffine) + " non-affine maps, " + std::to_string(matched) + " match the kernel generator";
  }
  return v;
}

bool build_reports(Verdict& v) {
  auto& c = corpus();
  if (!c.reports2.empty()) return true;
  try {
    for (const auto& m : c.maps2) c.reports2.push_back(relation_report(m, WeightVector::standard(2)));
    c.principal3 = principal_corpus3(kCorpus3Seed, 20);
  } catch (const Error& e) {
    fail(v, std::string("report failed: ") + e.what());
    return false;
  }
  return true;
}

Verdict relation_degree_bound() {
  Verdict v;
  if (!build_reports(v)) return v;
  auto& c = corpus();
  std::size_t checked = 0;
  auto check = [&](const RelationReport& r, const std::string& label) {
    if (!r.principal || !r.R) return;
    ++checked;
    const Rational bound = r.d.sum() - static_cast<long>(r.d.size()) + 1;
    if (!r.R->is_zero() && !(r.deg2_of_R <= WDegree(bound))) fail(v, label + ": deg2(R) exceeds the bound");
    if (!r.R->is_zero() && !r.bound_ok) fail(v, label + ": report flags the bound");
  };
  for (std::size_t i = 0; i < c.reports2.size(); ++i) check(c.reports2[i], "n=2 word " + std::to_string(i));
  for (std::size_t i = 0; i < c.principal3.size(); ++i) check(c.principal3[i].report, "n=3 word " + std::to_string(i));
  if (c.principal3.size() != 20) fail(v, "n=3 corpus has " + std::to_string(c.principal3.size()) + " maps");
  if (v.pass) v.detail = std::to_string(checked) + " principal reports, 0 violations";
  return v;
}

Verdict lnd_witness_check() {
  Verdict v;
  if (!build_reports(v)) return v;
  auto& c = corpus();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < c.words2.size(); ++i) {
    const auto& r = c.reports2[i];
    std::optional<Polynomial> R;
    if (r.principal && r.R) R = *r.R;
    if (auto f = check_lnd_witness(c.words2[i], R)) fail(v, "n=2 word " + std::to_string(i) + ": " + *f);
    ++checked;
  }
  for (std::size_t i = 0; i < c.principal3.size(); ++i) {
    const auto& s = c.principal3[i];
    if (auto f = check_lnd_witness(s.word, s.report.R)) fail(v, "n=3 word " + std::to_string(i) + ": " + *f);
    ++checked;
  }
  if (v.pass) v.detail = std::to_string(checked) + " witnesses, all LocallyNilpotent, R annihilated";
  return v;
}

Verdict suite(const char* name, std::uint64_t seed, std::size_t count) {
  SuiteResult s = run_suite(name, seed, count);
  Verdict v;
  v.pass = s.ok() && s.cases == count;
  v.detail = v.pass ? std::string(name) + ": " + std::to_string(s.cases) + " cases, 0 failures"
                    : std::string(name) + " " + first_failure(s);
  return v;
}

Verdict lemma_and_parachute() {
  Verdict a = suite("lemma-1<2", 6, 200);
  Verdict b = suite("parachute", 6, 200);
  return {a.pass && b.pass, a.detail + "; " + b.detail};
}

Verdict oracle_equivalence() {
  Verdict v;
  if (!build_reports(v)) return v;
  auto& c = corpus();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < c.reports2.size(); ++i) {
    if (!c.reports2[i].oracle_checked) fail(v, "n=2 word " + std::to_string(i) + ": oracle skipped");
    ++checked;
  }
  for (std::size_t i = 0; i < c.principal3.size(); ++i) {
    if (!c.principal3[i].report.oracle_checked) fail(v, "n=3 word " + std::to_string(i) + ": oracle skipped");
    ++checked;
  }
  try {
    RelationReport e = relation_report(parse_map("x1+x2^2; x2"), WeightVector::standard(2));
    if (!e.R || *e.R != parse_poly("x1 - x2^2", 2) || !e.oracle_checked) fail(v, "elementary instance");
    RelationReport n = relation_report(
        parse_map("x1 - 2*x2*(x1*x3+x2^2) - x3*(x1*x3+x2^2)^2; x2 + x3*(x1*x3+x2^2); x3"), WeightVector::standard(3));
    if (!n.R || *n.R != parse_poly("x2^2 + x1*x3", 3) || !n.oracle_checked) fail(v, "Nagata instance");
    checked += 2;
  } catch (const Error& e) {
    fail(v, e.what());
  }
  if (v.pass) v.detail = std::to_string(checked) + " maps, kernel and oracle agree";
  return v;
}

Verdict classifier() {
  // 13 lines and 6 forbidden entries per cycle, five cycles
  return suite("classify-soundness", 8, 5 * 19);
}

Verdict affine_characterization() {
  Verdict v;
  Rng rng(9);
  try {
    for (int i = 0; i < 20; ++i) {
      RelationReport r = relation_report(sample_affine_word(rng, 2 + i % 2), WeightVector::standard(2 + i % 2));
      if (!r.ideal.gens.empty()) fail(v, "affine word " + std::to_string(i) + " has a nonzero ideal");
    }
    WordOptions o;
    o.max_gens = 4;
    o.max_addend_degree = 3;
    o.coeff_bound = 5;
    o.degree_budget = 9;
    for (int i = 0; i < 20; ++i) {
      o.nvars = 2 + i % 2;
      RelationReport r = relation_report(sample_nonaffine_word(rng, o), WeightVector::standard(o.nvars));
      if (r.ideal.gens.empty()) fail(v, "non-affine word " + std::to_string(i) + " has the zero ideal");
    }
  } catch (const Error& e) {
    fail(v, e.what());
  }
  if (v.pass) v.detail = "20 affine words give (0), 20 non-affine words do not";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"jvdk round trip", jvdk_round_trip},
      {"relation shape", relation_shape},
      {"relation degree bound", relation_degree_bound},
      {"lnd witness", lnd_witness_check},
      {"delta identity", [] { return suite("delta-identity", 5, 200); }},
      {"degree lemma and parachute", lemma_and_parachute},
      {"oracle equivalence", oracle_equivalence},
      {"classifier soundness", classifier},
      {"affine characterization", affine_characterization},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("CRITERION %zu %s (%s): %s\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first, v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
