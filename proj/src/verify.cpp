#include "autrel/verify.hpp"

#include "autrel/classify3.hpp"
#include "autrel/derivation.hpp"
#include "autrel/jvdk.hpp"

namespace autrel {

namespace {

WordOptions small_word_options(std::size_t n) {
  WordOptions o;
  o.nvars = n;
  if (n == 2) {
    o.max_gens = 4;
    o.max_addend_degree = 3;
    o.degree_budget = 12;
  } else {
    o.max_gens = 3;
    o.max_addend_degree = 2;
    o.coeff_bound = 5;
    o.degree_budget = 6;
  }
  return o;
}

template <typename F>
void record(SuiteResult& res, std::size_t index, F&& check) {
  ++res.cases;
  std::optional<std::string> msg;
  try {
    msg = check();
  } catch (const std::exception& e) {
    msg = std::string("exception: ") + e.what();
  }
  if (msg) res.failures.push_back({index, *msg});
}

// Samples words until the relation report fits in the pair budget.
std::pair<AutWord, RelationReport> sample_reported_word(Rng& rng, std::size_t n, SuiteResult& res) {
  for (;;) {
    AutWord w = sample_tame_word(rng, small_word_options(n));
    try {
      RelationReport rep = relation_report(w, WeightVector::standard(n));
      return {std::move(w), std::move(rep)};
    } catch (const ResourceCapExceeded&) {
      ++res.counters["resampled_over_budget"];
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma-1<2",          "parachute",       "lnd-witness",
                                              "jvdk-roundtrip",     "classify-soundness", "delta-identity"};
  return names;
}

std::optional<std::string> check_jvdk_roundtrip(const AutWord& w) {
  PolyMap m = expand(w);
  DecomposeOutcome out = decompose2(m);
  if (auto* bad = std::get_if<NotAnAutomorphism>(&out)) return "decompose2 rejected a tame map: " + bad->reason;
  const auto& dec = std::get<Decomposition>(out);
  if (expand(dec.word) != m) return "decomposition does not recompose to the map";
  for (std::size_t s = 0; s < dec.steps.size(); ++s) {
    const auto& st = dec.steps[s];
    if (st.degree_sum_after >= st.degree_sum_before) return "degree sum did not decrease at step " + std::to_string(s);
    if (s > 0 && dec.steps[s - 1].degree_sum_after != st.degree_sum_before) {
      return "degree sums are not contiguous at step " + std::to_string(s);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_relation_shape(const AutWord& w) {
  PolyMap m = expand(w);
  DecomposeOutcome out = decompose2(m);
  if (auto* bad = std::get_if<NotAnAutomorphism>(&out)) return "decompose2 rejected a tame map: " + bad->reason;
  const auto& dec = std::get<Decomposition>(out);
  if (dec.steps.empty()) return std::nullopt;
  Polynomial R = relation2(m);
  const auto& first = dec.steps.front();
  std::size_t a = first.swapped ? 1 : 0;
  std::size_t b = 1 - a;
  WeightVector d = deg2_weights(m, WeightVector::standard(2));
  if (d[a] != Rational(first.r) * d[b]) {
    return "r = " + std::to_string(first.r) + " is not d_a / d_b = " + to_string(d[a]) + " / " + to_string(d[b]);
  }
  if (R.size() != 2 || R.coefficient(Monomial::variable(2, a)) != 1) return "relation is not z_a - c z_b^r";
  std::vector<Polynomial> fbars;
  for (const auto& c : m.coords) fbars.push_back(leading_term(c, WeightVector::standard(2)));
  if (!compose(R, fbars).is_zero()) return "relation does not vanish on the leading forms";
  return std::nullopt;
}

std::optional<std::string> check_lnd_witness(const AutWord& w, const std::optional<Polynomial>& R) {
  Automorphism phi = Automorphism::from_word(w);
  const std::size_t n = w.nvars();
  WeightVector w1 = WeightVector::standard(n);
  LndWitness lw;
  try {
    lw = lnd_witness(phi, w1, R);
  } catch (const NoWitnessIndex& e) {
    return std::string("no witness: ") + e.what();
  }
  if (lw.delta_degree < WDegree(-w1[lw.index])) return "witness index violates the degree inequality";
  if (lw.verdict.kind != NilpotenceVerdict::Kind::LocallyNilpotent) {
    return "leading derivation verdict " + to_string(lw.verdict.kind);
  }
  if (R && lw.annihilates != true) return "leading derivation does not annihilate R";
  return std::nullopt;
}

std::optional<std::string> check_delta_identity(const AutWord& w, const Polynomial& p) {
  Automorphism phi = Automorphism::from_word(w);
  Polynomial pphi = compose(p, phi.forward.coords);
  for (std::size_t i = 0; i < phi.nvars(); ++i) {
    Derivation delta = delta_derivation(phi.inverse, i);
    Polynomial lhs = compose(apply(delta, p), phi.forward.coords);
    Polynomial rhs = partial(pphi, i) * (1 / phi.jacobian);
    if (lhs != rhs) return "identity fails at i = " + std::to_string(i + 1);
  }
  return std::nullopt;
}

std::optional<std::string> check_lemma_case(const AutWord& w, const RelationReport& rep, const Polynomial& p) {
  DegreeLemmaCheck c = check_degree_lemma(expand(w), rep, p);
  if (!(c.lhs <= c.rhs)) return "deg1(P o phi) exceeds deg2(P)";
  if (c.strict != c.tilde_in_I) {
    return c.strict ? "strict inequality but leading form not in I" : "equality but leading form in I";
  }
  return std::nullopt;
}

std::optional<std::string> check_parachute_case(const AutWord& w, const RelationReport& rep, const Polynomial& p,
                                                unsigned k) {
  ParachuteCheck c = check_parachute(expand(w), rep, p, k);
  if (!c.holds) return "parachute inequality fails for k = " + std::to_string(k);
  return std::nullopt;
}

std::optional<std::string> check_classifier_instance(const ClassifierInstance& in) {
  ClassifyOutcome o = classify(in.R, in.d);
  if (o.kind != ClassifyOutcome::Kind::Classified) return "expected " + to_string(in.tag) + ", got " + to_string(o.kind);
  if (o.type.tag != in.tag) return "expected " + to_string(in.tag) + ", got " + to_string(o.type.tag);
  if (o.type.scale * reconstruct(o.type) != in.R) return "pattern does not reconstruct R";
  if (!o.inequalities.support_bound) return "support bound fails on a classified relation";
  NormalForm nf = normalize(in.R, o.type);
  if (compose(in.R, expand(nf.witness).coords) != nf.canonical.polynomial() * nf.residual_scalar) {
    return "normal form witness does not verify";
  }
  auto D = canonical_lnd(nf.canonical);
  if (!D) return "canonical form unresolved: " + nf.canonical.reason;
  if (!apply(*D, nf.canonical.polynomial()).is_zero()) return "canonical derivation does not annihilate the form";
  return std::nullopt;
}

std::optional<std::string> check_forbidden_instance(const ForbiddenInstance& in) {
  ClassifyOutcome o = classify(in.R, in.d);
  if (o.kind != ClassifyOutcome::Kind::Forbidden) return "expected Forbidden, got " + to_string(o.kind);
  if (o.forbidden_index != in.entry) {
    return "expected entry " + std::to_string(in.entry) + ", got " + std::to_string(o.forbidden_index);
  }
  return std::nullopt;
}

Polynomial sample_test_polynomial(Rng& rng, const RelationReport& rep, bool in_ideal) {
  const std::size_t n = rep.d.size();
  if (in_ideal && rep.R && !rep.R->is_zero()) {
    Polynomial q = sample_polynomial(rng, n, 2, 2, 5);
    if (q.is_zero()) q = Polynomial::constant(n, 1);
    Polynomial p = *rep.R * q;
    WDegree top = wdeg(p, rep.d);
    Polynomial noise = sample_polynomial(rng, n, 3, 3, 9);
    for (const auto& [m, c] : noise.terms()) {
      if (WDegree(rep.d.degree_of(m)) < top) p.add_term(m, c);
    }
    return p;
  }
  Polynomial p = sample_polynomial(rng, n, 4, 3, 9);
  if (p.is_zero()) p = Polynomial::variable(n, 0);
  return p;
}

SuiteResult run_suite(std::string_view name, std::uint64_t seed, std::size_t count) {
  SuiteResult res;
  res.suite = std::string(name);
  res.seed = seed;
  Rng rng(seed);

  if (name == "jvdk-roundtrip") {
    auto words = tame_corpus2(seed, count);
    for (std::size_t i = 0; i < words.size(); ++i) {
      record(res, i, [&]() -> std::optional<std::string> {
        if (auto m = check_jvdk_roundtrip(words[i])) return m;
        return check_relation_shape(words[i]);
      });
    }
  } else if (name == "lnd-witness") {
    auto words = tame_corpus2(seed, count);
    for (std::size_t i = 0; i < words.size(); ++i) {
      record(res, i, [&] { return check_lnd_witness(words[i], relation2(expand(words[i]))); });
    }
  } else if (name == "delta-identity") {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t n = 2 + i % 2;
      AutWord w = sample_tame_word(rng, small_word_options(n));
      Polynomial p = sample_polynomial(rng, n, 3, 3, 9);
      record(res, i, [&] { return check_delta_identity(w, p); });
    }
  } else if (name == "lemma-1<2" || name == "parachute") {
    const bool lemma = name == "lemma-1<2";
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t n = 2 + i % 2;
      auto [w, rep] = sample_reported_word(rng, n, res);
      bool in_ideal = uniform(rng, 0, 2) == 0;
      Polynomial p = sample_test_polynomial(rng, rep, in_ideal);
      unsigned k = static_cast<unsigned>(uniform(rng, 1, 3));
      if (in_ideal && rep.R && !rep.R->is_zero()) ++res.counters["in_ideal"];
      record(res, i, [&] { return lemma ? check_lemma_case(w, rep, p) : check_parachute_case(w, rep, p, k); });
    }
  } else if (name == "classify-soundness") {
    const auto& tags = nonzero_tags();
    const std::size_t cycle = tags.size() + 6;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t slot = i % cycle;
      if (slot < tags.size()) {
        ClassifierInstance in = sample_classifier_instance(rng, tags[slot]);
        record(res, i, [&] { return check_classifier_instance(in); });
      } else {
        ForbiddenInstance in = sample_forbidden_instance(rng, static_cast<int>(slot - tags.size()) + 1);
        record(res, i, [&] { return check_forbidden_instance(in); });
      }
    }
  } else {
    throw DomainError("unknown suite '" + std::string(name) + "'");
  }
  return res;
}

}  // namespace autrel
