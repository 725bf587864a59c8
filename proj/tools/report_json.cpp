#include "report_json.hpp"

#include "autrel/rational.hpp"

namespace autrel::report {

namespace {

json polys(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(format_poly(p));
  return out;
}

std::vector<Polynomial> polys_from(const json& j, std::size_t n) {
  std::vector<Polynomial> out;
  for (const auto& s : j) out.push_back(parse_poly(s.get<std::string>(), n));
  return out;
}

Rational rat(const json& j) { return parse_rational(j.get<std::string>()); }

template <typename Kind>
Kind kind_from(const std::string& name, std::initializer_list<Kind> kinds) {
  for (Kind k : kinds) {
    if (to_string(k) == name) return k;
  }
  throw ParseError("unknown kind '" + name + "'", 0);
}

}  // namespace

json to_json(const WDegree& d) { return d.is_minus_infinity() ? json("-inf") : json(to_string(d.value())); }

WDegree wdegree_from_json(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "-inf") return WDegree::minus_infinity();
  return WDegree(parse_rational(s));
}

json to_json(const AutWord& w) {
  json gens = json::array();
  for (const auto& g : w.generators()) gens.push_back(format_generator(g, w.nvars()));
  return {{"nvars", w.nvars()}, {"generators", gens}};
}

AutWord word_from_json(const json& j) {
  std::string text;
  for (const auto& line : j.at("generators")) text += line.get<std::string>() + "\n";
  return parse_word(text, j.at("nvars").get<std::size_t>());
}

json to_json(const PolyMap& m) { return polys(m.coords); }

PolyMap map_from_json(const json& j) {
  PolyMap m;
  m.coords = polys_from(j, j.size());
  return m;
}

json to_json(const RelationReport& r) {
  json j;
  j["w1"] = format_weights(r.w1);
  j["d"] = format_weights(r.d);
  j["fbars"] = polys(r.fbars);
  j["ideal"] = {{"order", r.ideal.order.describe()}, {"reduced", r.ideal.reduced}, {"gens", polys(r.ideal.gens)}};
  j["principal"] = r.principal;
  j["R"] = r.R ? json(format_poly(*r.R)) : json(nullptr);
  j["deg2_of_R"] = to_json(r.deg2_of_R);
  j["nabla"] = to_string(r.parachute);
  j["bound_ok"] = r.bound_ok;
  j["oracle_checked"] = r.oracle_checked;
  j["oracle_dmax"] = to_string(r.oracle_dmax);
  return j;
}

RelationReport relation_report_from_json(const json& j) {
  RelationReport r;
  r.w1 = parse_weights(j.at("w1").get<std::string>());
  r.d = parse_weights(j.at("d").get<std::string>());
  const std::size_t n = r.d.size();
  r.fbars = polys_from(j.at("fbars"), n);
  r.ideal.gens = polys_from(j.at("ideal").at("gens"), n);
  r.ideal.reduced = j.at("ideal").at("reduced").get<bool>();
  r.ideal.order = MonomialOrder::graded_lex(r.d);
  r.principal = j.at("principal").get<bool>();
  if (!j.at("R").is_null()) r.R = parse_poly(j.at("R").get<std::string>(), n);
  r.deg2_of_R = wdegree_from_json(j.at("deg2_of_R"));
  r.parachute = rat(j.at("nabla"));
  r.bound_ok = j.at("bound_ok").get<bool>();
  r.oracle_checked = j.at("oracle_checked").get<bool>();
  r.oracle_dmax = rat(j.at("oracle_dmax"));
  return r;
}

json to_json(const Decomposition& d) {
  json steps = json::array();
  for (const auto& s : d.steps) {
    steps.push_back({{"swapped", s.swapped},
                     {"c", to_string(s.c)},
                     {"r", s.r},
                     {"degree_sum_before", s.degree_sum_before},
                     {"degree_sum_after", s.degree_sum_after}});
  }
  return {{"status", "ok"},
          {"word", to_json(d.word)},
          {"steps", steps},
          {"affine_tail", d.affine_tail ? json(format_generator(*d.affine_tail, 2)) : json(nullptr)}};
}

json to_json(const NotAnAutomorphism& bad) {
  return {{"status", "NotAnAutomorphism"}, {"stage", bad.stage}, {"reason", bad.reason}};
}

Decomposition decomposition_from_json(const json& j) {
  Decomposition d;
  d.word = word_from_json(j.at("word"));
  for (const auto& s : j.at("steps")) {
    ReductionStep st;
    st.swapped = s.at("swapped").get<bool>();
    st.c = rat(s.at("c"));
    st.r = s.at("r").get<unsigned>();
    st.degree_sum_before = s.at("degree_sum_before").get<long>();
    st.degree_sum_after = s.at("degree_sum_after").get<long>();
    d.steps.push_back(st);
  }
  if (!j.at("affine_tail").is_null()) d.affine_tail = parse_generator(j.at("affine_tail").get<std::string>(), 2);
  return d;
}

json to_json(const ClassifyOutcome& o, const std::optional<NormalForm>& nf) {
  json j;
  j["outcome"] = to_string(o.kind);
  if (o.kind == ClassifyOutcome::Kind::Classified) {
    json params = json::object();
    for (const auto& [k, v] : o.type.params) params[k] = to_string(v);
    j["tag"] = to_string(o.type.tag);
    j["params"] = params;
    j["P"] = format_poly(o.type.P);
    j["h"] = format_poly(o.type.h);
    j["scale"] = to_string(o.type.scale);
  }
  if (o.kind == ClassifyOutcome::Kind::Forbidden) j["forbidden_index"] = o.forbidden_index;
  if (!o.reason.empty()) j["reason"] = o.reason;
  const auto& q = o.inequalities;
  j["inequalities"] = {{"support_bound", q.support_bound},
                       {"square_bound", q.square_bound ? json(*q.square_bound) : json(nullptr)},
                       {"factor_bound", q.factor_bound ? json(*q.factor_bound) : json(nullptr)},
                       {"notes", q.notes}};
  if (nf) {
    const auto& c = nf->canonical;
    j["normal_form"] = {{"canonical",
                         {{"kind", to_string(c.kind)},
                          {"r", c.r},
                          {"s", c.s},
                          {"coeff", to_string(c.coeff)},
                          {"k", c.k},
                          {"P", format_poly(c.P)},
                          {"reached", format_poly(c.reached)},
                          {"reason", c.reason},
                          {"polynomial", format_poly(c.polynomial())}}},
                        {"witness", to_json(nf->witness)},
                        {"residual_scalar", to_string(nf->residual_scalar)}};
  }
  return j;
}

ClassifyOutcome classify_outcome_from_json(const json& j) {
  using K = ClassifyOutcome::Kind;
  ClassifyOutcome o;
  o.kind = kind_from<K>(j.at("outcome").get<std::string>(),
                        {K::Classified, K::Forbidden, K::NeedsExtension, K::NotWeightedHomogeneous, K::NotInList});
  if (o.kind == K::Classified) {
    auto tag = parse_relation_tag(j.at("tag").get<std::string>());
    if (!tag) throw ParseError("unknown tag", 0);
    o.type.tag = *tag;
    for (const auto& [k, v] : j.at("params").items()) o.type.params[k] = rat(v);
    o.type.P = parse_poly(j.at("P").get<std::string>(), 3);
    o.type.h = parse_poly(j.at("h").get<std::string>(), 3);
    o.type.scale = rat(j.at("scale"));
  }
  if (j.contains("forbidden_index")) o.forbidden_index = j.at("forbidden_index").get<int>();
  if (j.contains("reason")) o.reason = j.at("reason").get<std::string>();
  const auto& q = j.at("inequalities");
  o.inequalities.support_bound = q.at("support_bound").get<bool>();
  if (!q.at("square_bound").is_null()) o.inequalities.square_bound = q.at("square_bound").get<bool>();
  if (!q.at("factor_bound").is_null()) o.inequalities.factor_bound = q.at("factor_bound").get<bool>();
  o.inequalities.notes = q.at("notes").get<std::vector<std::string>>();
  return o;
}

std::optional<NormalForm> normal_form_from_json(const json& j) {
  if (!j.contains("normal_form")) return std::nullopt;
  using K = CanonicalForm::Kind;
  const auto& n = j.at("normal_form");
  const auto& c = n.at("canonical");
  NormalForm nf;
  nf.canonical.kind = kind_from<K>(c.at("kind").get<std::string>(),
                                   {K::Zero, K::X3, K::Binomial, K::TriangularFiber, K::Unresolved});
  nf.canonical.r = c.at("r").get<unsigned>();
  nf.canonical.s = c.at("s").get<unsigned>();
  nf.canonical.coeff = rat(c.at("coeff"));
  nf.canonical.k = c.at("k").get<unsigned>();
  nf.canonical.P = parse_poly(c.at("P").get<std::string>(), 3);
  nf.canonical.reached = parse_poly(c.at("reached").get<std::string>(), 3);
  nf.canonical.reason = c.at("reason").get<std::string>();
  nf.witness = word_from_json(n.at("witness"));
  nf.residual_scalar = rat(n.at("residual_scalar"));
  return nf;
}

json to_json(const LndWitness& w) {
  json verdict = {{"kind", to_string(w.verdict.kind)},
                  {"orders", w.verdict.orders},
                  {"variable", w.verdict.variable + 1},
                  {"reason", w.verdict.reason}};
  return {{"index", w.index + 1},
          {"d", format_weights(w.d)},
          {"delta", polys(w.delta.coeffs)},
          {"delta_degree", to_json(w.delta_degree)},
          {"dbar", polys(w.dbar.coeffs)},
          {"verdict", verdict},
          {"annihilates", w.annihilates ? json(*w.annihilates) : json(nullptr)}};
}

LndWitness lnd_witness_from_json(const json& j) {
  using K = NilpotenceVerdict::Kind;
  LndWitness w;
  w.index = j.at("index").get<std::size_t>() - 1;
  w.d = parse_weights(j.at("d").get<std::string>());
  const std::size_t n = w.d.size();
  w.delta.coeffs = polys_from(j.at("delta"), n);
  w.delta_degree = wdegree_from_json(j.at("delta_degree"));
  w.dbar.coeffs = polys_from(j.at("dbar"), n);
  const auto& v = j.at("verdict");
  w.verdict.kind = kind_from<K>(v.at("kind").get<std::string>(), {K::LocallyNilpotent, K::NotNilpotent, K::Unknown});
  w.verdict.orders = v.at("orders").get<std::vector<unsigned>>();
  w.verdict.variable = v.at("variable").get<std::size_t>() - 1;
  w.verdict.reason = v.at("reason").get<std::string>();
  if (!j.at("annihilates").is_null()) w.annihilates = j.at("annihilates").get<bool>();
  return w;
}

json to_json(const SuiteResult& s) {
  json failures = json::array();
  for (const auto& f : s.failures) failures.push_back({{"index", f.index}, {"message", f.message}});
  return {{"suite", s.suite},
          {"seed", s.seed},
          {"cases", s.cases},
          {"failures", failures},
          {"counters", s.counters},
          {"ok", s.ok()}};
}

SuiteResult suite_result_from_json(const json& j) {
  SuiteResult s;
  s.suite = j.at("suite").get<std::string>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.cases = j.at("cases").get<std::size_t>();
  for (const auto& f : j.at("failures")) {
    s.failures.push_back({f.at("index").get<std::size_t>(), f.at("message").get<std::string>()});
  }
  s.counters = j.at("counters").get<std::map<std::string, std::size_t>>();
  return s;
}

}  // namespace autrel::report
