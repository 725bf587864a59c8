#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "autrel/classify3.hpp"
#include "autrel/derivation.hpp"
#include "autrel/jvdk.hpp"
#include "autrel/relations.hpp"
#include "autrel/verify.hpp"
#include "report_json.hpp"

using namespace autrel;
using report::json;

namespace {

enum Status { kOk = 0, kDomain = 1, kUsage = 2, kIo = 3 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "@path" reads the argument from a file.
std::string read_arg(const std::string& s) {
  if (s.empty() || s.front() != '@') return s;
  std::ifstream in(s.substr(1));
  if (!in) throw IoError("cannot read " + s.substr(1));
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string zify(std::string s) {
  std::replace(s.begin(), s.end(), 'x', 'z');
  return s;
}

std::string tuple(const std::vector<Polynomial>& ps) {
  std::string out = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + format_poly(ps[i]);
  return out + ")";
}

// Largest variable index mentioned by a word in the text grammar.
std::size_t infer_nvars(const std::string& text) {
  std::size_t n = 1;
  std::istringstream lines(text);
  std::string line;
  auto scan_x = [&](const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != 'x') continue;
      std::size_t j = i + 1;
      bool braced = j < s.size() && s[j] == '{';
      if (braced) ++j;
      std::size_t v = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) v = v * 10 + (s[j++] - '0');
      n = std::max(n, v);
    }
  };
  while (std::getline(lines, line, '\n')) {
    std::istringstream parts(line);
    std::string piece;
    while (std::getline(parts, piece, ';')) {
      piece = piece.substr(0, piece.find('#'));
      std::istringstream tok(piece);
      std::string head;
      if (!(tok >> head)) continue;
      if (head == "E" || head == "T") {
        std::size_t a = 0, b = 0;
        tok >> a;
        n = std::max(n, a);
        if (head == "T" && tok >> b) n = std::max(n, b);
        scan_x(piece);
      } else if (head == "A") {
        std::size_t count = 0;
        std::string t;
        while (tok >> t && t != "|") ++count;
        auto root = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(count))));
        n = std::max(n, root);
      }
    }
  }
  return n;
}

AutWord read_word(const std::string& arg, std::size_t nvars) {
  std::string text = read_arg(arg);
  return parse_word(text, nvars ? nvars : infer_nvars(text));
}

PolyMap read_map(const std::string& arg) { return parse_map(read_arg(arg)); }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_word(const AutWord& w, const std::string& indent) {
  if (w.empty()) std::cout << indent << "(empty)\n";
  for (const auto& g : w.generators()) std::cout << indent << format_generator(g, w.nvars()) << "\n";
}

WeightVector weights_or_standard(const std::string& text, std::size_t n) {
  if (text.empty()) return WeightVector::standard(n);
  WeightVector w = parse_weights(text);
  if (w.size() != n) throw DimensionError("expected " + std::to_string(n) + " weights");
  return w;
}

struct Options {
  std::string map, word, inverse, weights, rel, suite;
  std::size_t nvars = 0;
  std::size_t budget = kDefaultPairBudget;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  bool json = false;
  bool no_oracle = false;
};

int cmd_relations(const Options& o) {
  PolyMap phi = o.map.empty() ? expand(read_word(o.word, o.nvars)) : read_map(o.map);
  WeightVector w1 = weights_or_standard(o.weights, phi.nvars());
  ReportOptions ro;
  ro.budget = o.budget;
  ro.shadow_oracle = !o.no_oracle;
  RelationReport r;
  try {
    r = relation_report(phi, w1, ro);
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kDomain;
  }
  if (o.json) {
    json j = report::to_json(r);
    j["map"] = report::to_json(phi);
    print_json(j);
    return kOk;
  }
  std::vector<std::string> gens;
  for (const auto& g : r.ideal.gens) gens.push_back(zify(format_poly(g)));
  std::cout << "map: " << tuple(phi.coords) << "\n";
  std::cout << "w1: " << format_weights(r.w1) << "\n";
  std::cout << "d: " << format_weights(r.d) << "\n";
  std::cout << "leading forms: " << tuple(r.fbars) << "\n";
  std::cout << "ideal: (";
  for (std::size_t i = 0; i < gens.size(); ++i) std::cout << (i ? ", " : "") << gens[i];
  std::cout << ")\n";
  std::cout << "principal: " << (r.principal ? "yes" : "no") << "\n";
  if (r.R) std::cout << "R: " << zify(format_poly(*r.R)) << "\n";
  std::cout << "deg2(R): " << to_string(r.deg2_of_R) << "\n";
  std::cout << "nabla: " << to_string(r.parachute) << "\n";
  std::cout << "bound deg2(R) <= nabla + 1: " << (r.bound_ok ? "ok" : "fails") << "\n";
  if (r.oracle_checked) std::cout << "oracle: agrees up to degree " << to_string(r.oracle_dmax) << "\n";
  return kOk;
}

int cmd_decompose2(const Options& o) {
  PolyMap m = read_map(o.map);
  if (m.nvars() != 2) throw DimensionError("decompose2 needs a map in two variables");
  DecomposeOutcome out = decompose2(m);
  if (auto* bad = std::get_if<NotAnAutomorphism>(&out)) {
    if (o.json) {
      print_json(report::to_json(*bad));
    } else {
      std::cout << "not an automorphism (" << bad->stage << "): " << bad->reason << "\n";
    }
    return kDomain;
  }
  const auto& dec = std::get<Decomposition>(out);
  std::optional<Polynomial> R;
  if (!dec.steps.empty()) R = relation2(m);
  if (o.json) {
    json j = report::to_json(dec);
    j["relation"] = R ? json(format_poly(*R)) : json(nullptr);
    print_json(j);
    return kOk;
  }
  std::cout << "word:\n";
  print_word(dec.word, "  ");
  std::cout << "steps:\n";
  for (std::size_t i = 0; i < dec.steps.size(); ++i) {
    const auto& s = dec.steps[i];
    std::cout << "  " << i + 1 << ": c = " << to_string(s.c) << ", r = " << s.r << ", degree sum "
              << s.degree_sum_before << " -> " << s.degree_sum_after << (s.swapped ? " (after swap)" : "") << "\n";
  }
  if (dec.affine_tail) std::cout << "affine tail: " << format_generator(*dec.affine_tail, 2) << "\n";
  if (R) std::cout << "relation: " << zify(format_poly(*R)) << "\n";
  return kOk;
}

int cmd_classify3(const Options& o) {
  Polynomial R = parse_poly(read_arg(o.rel), 3);
  WeightVector d = weights_or_standard(o.weights, 3);
  std::vector<std::size_t> order(3);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  std::vector<std::size_t> perm(3);
  for (std::size_t k = 0; k < 3; ++k) perm[order[k]] = k;
  bool reordered = order != std::vector<std::size_t>{0, 1, 2};
  if (reordered) {
    R = R.permute(perm);
    d = WeightVector({d[order[0]], d[order[1]], d[order[2]]});
  }

  ClassifyOutcome out = classify(R, d);
  std::optional<NormalForm> nf;
  if (out.kind == ClassifyOutcome::Kind::Classified) nf = normalize(R, out.type);
  const int status = out.kind == ClassifyOutcome::Kind::Classified ? kOk : kDomain;

  if (o.json) {
    json j = report::to_json(out, nf);
    j["R"] = format_poly(R);
    j["d"] = format_weights(d);
    if (reordered) j["variable_order"] = {order[0] + 1, order[1] + 1, order[2] + 1};
    print_json(j);
    return status;
  }
  if (reordered) {
    std::cout << "variables reordered: (x1, x2, x3) = (x" << order[0] + 1 << ", x" << order[1] + 1 << ", x"
              << order[2] + 1 << ")\n";
    std::cout << "R: " << format_poly(R) << "\n";
  }
  std::cout << "d: " << format_weights(d) << "\n";
  std::cout << "outcome: " << to_string(out.kind) << "\n";
  switch (out.kind) {
    case ClassifyOutcome::Kind::Classified: {
      std::cout << "tag: " << to_string(out.type.tag) << "\n";
      std::cout << "params:";
      for (const auto& [k, v] : out.type.params) std::cout << " " << k << "=" << to_string(v);
      std::cout << "\n";
      if (out.type.tag == RelationTag::T4_MonomialX3) std::cout << "P: " << format_poly(out.type.P) << "\n";
      std::cout << "h: " << format_poly(out.type.h) << "\n";
      std::cout << "scale: " << to_string(out.type.scale) << "\n";
      std::cout << "witness:\n";
      print_word(nf->witness, "  ");
      std::cout << "canonical: " << to_string(nf->canonical.kind) << " " << format_poly(nf->canonical.polynomial())
                << "\n";
      if (!nf->canonical.reason.empty()) std::cout << "note: " << nf->canonical.reason << "\n";
      std::cout << "residual scalar: " << to_string(nf->residual_scalar) << "\n";
      if (auto D = canonical_lnd(nf->canonical)) std::cout << "lnd: " << tuple(D->coeffs) << "\n";
      break;
    }
    case ClassifyOutcome::Kind::Forbidden:
      std::cout << "forbidden entry: " << out.forbidden_index << "\n";
      break;
    default:
      std::cout << "reason: " << out.reason << "\n";
  }
  for (const auto& note : out.inequalities.notes) std::cout << "inequality: " << note << "\n";
  return status;
}

int cmd_lnd_witness(const Options& o) {
  Automorphism phi;
  if (!o.word.empty()) {
    phi = Automorphism::from_word(read_word(o.word, o.nvars));
  } else {
    if (o.inverse.empty()) throw DomainError("--map needs --inverse");
    phi = Automorphism::from_maps(read_map(o.map), read_map(o.inverse));
  }
  WeightVector w1 = weights_or_standard(o.weights, phi.nvars());
  std::optional<Polynomial> R;
  try {
    ReportOptions ro;
    ro.shadow_oracle = false;
    ro.budget = o.budget;
    RelationReport rep = relation_report(phi.forward, w1, ro);
    if (rep.principal) R = rep.R;
  } catch (const ResourceCapExceeded&) {
  }
  LndWitness w;
  try {
    w = lnd_witness(phi, w1, R);
  } catch (const NoWitnessIndex& e) {
    std::cout << "no witness: " << e.what() << "\n";
    return kDomain;
  }
  if (o.json) {
    json j = report::to_json(w);
    j["R"] = R ? json(format_poly(*R)) : json(nullptr);
    print_json(j);
    return kOk;
  }
  std::cout << "index: " << w.index + 1 << "\n";
  std::cout << "d: " << format_weights(w.d) << "\n";
  std::cout << "Delta: " << tuple(w.delta.coeffs) << "\n";
  std::cout << "deg2(Delta): " << to_string(w.delta_degree) << "\n";
  std::cout << "leading derivation: " << tuple(w.dbar.coeffs) << "\n";
  std::cout << "verdict: " << to_string(w.verdict.kind);
  if (!w.verdict.orders.empty()) {
    std::cout << " (orders";
    for (auto k : w.verdict.orders) std::cout << " " << k;
    std::cout << ")";
  }
  std::cout << "\n";
  if (R) std::cout << "R: " << zify(format_poly(*R)) << "\n";
  if (w.annihilates) std::cout << "annihilates R: " << (*w.annihilates ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  SuiteResult res = run_suite(o.suite, o.seed, o.count);
  if (o.json) {
    print_json(report::to_json(res));
  } else {
    std::cout << "suite " << res.suite << " seed " << res.seed << ": " << res.cases << " cases, "
              << res.failures.size() << " failures\n";
    for (const auto& [k, v] : res.counters) std::cout << "  " << k << " = " << v << "\n";
    for (const auto& f : res.failures) std::cout << "  case " << f.index << ": " << f.message << "\n";
  }
  return res.ok() ? kOk : kDomain;
}

int cmd_compose(const Options& o, bool invert) {
  AutWord w = read_word(o.word, o.nvars);
  if (invert) w = invert_word(w);
  PolyMap m = expand(w);
  if (o.json) {
    json j = {{"map", report::to_json(m)}};
    if (invert) j["word"] = report::to_json(w);
    print_json(j);
    return kOk;
  }
  if (invert) {
    std::cout << "word:\n";
    print_word(w, "  ");
  }
  std::cout << "map: " << tuple(m.coords) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relations among leading forms of polynomial automorphisms"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "Structured output"); };
  auto add_weights = [&](CLI::App* c) { c->add_option("--weights", o.weights, "Weights w1,...,wn (default all 1)"); };

  auto* rel = app.add_subcommand("relations", "Kernel ideal of the leading forms");
  auto* rel_map = rel->add_option("--map", o.map, "Coordinates separated by ';'");
  auto* rel_word = rel->add_option("--word", o.word, "Generators separated by ';' or newlines");
  rel_map->excludes(rel_word);
  rel->add_option("--nvars", o.nvars, "Number of variables for --word");
  rel->add_option("--budget", o.budget, "Pair-reduction budget");
  rel->add_flag("--no-oracle", o.no_oracle, "Skip the linear-algebra cross-check");
  add_weights(rel);
  add_json(rel);

  auto* dec = app.add_subcommand("decompose2", "Tame decomposition of a plane automorphism");
  dec->add_option("--map", o.map, "Coordinates separated by ';'")->required();
  add_json(dec);

  auto* cls = app.add_subcommand("classify3", "Classify a relation in three variables");
  cls->add_option("--rel", o.rel, "Relation polynomial")->required();
  add_weights(cls);
  add_json(cls);

  auto* lnd = app.add_subcommand("lnd-witness", "Locally nilpotent derivation from the inverse");
  auto* lnd_map = lnd->add_option("--map", o.map, "Coordinates separated by ';'");
  auto* lnd_word = lnd->add_option("--word", o.word, "Generators separated by ';' or newlines");
  lnd_map->excludes(lnd_word);
  lnd->add_option("--inverse", o.inverse, "Inverse map, required with --map");
  lnd->add_option("--nvars", o.nvars, "Number of variables for --word");
  lnd->add_option("--budget", o.budget, "Pair-reduction budget");
  add_weights(lnd);
  add_json(lnd);

  auto* ver = app.add_subcommand("verify", "Run a property suite");
  ver->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--seed", o.seed, "Seed");
  ver->add_option("--count", o.count, "Number of cases");
  add_json(ver);

  auto* cmp = app.add_subcommand("compose", "Expand a word into a map");
  cmp->add_option("--word", o.word, "Generators")->required();
  cmp->add_option("--nvars", o.nvars, "Number of variables");
  add_json(cmp);

  auto* inv = app.add_subcommand("invert", "Invert a word");
  inv->add_option("--word", o.word, "Generators")->required();
  inv->add_option("--nvars", o.nvars, "Number of variables");
  add_json(inv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*rel) {
      if (o.map.empty() && o.word.empty()) throw DomainError("relations needs --map or --word");
      return cmd_relations(o);
    }
    if (*dec) return cmd_decompose2(o);
    if (*cls) return cmd_classify3(o);
    if (*lnd) {
      if (o.map.empty() && o.word.empty()) throw DomainError("lnd-witness needs --map or --word");
      return cmd_lnd_witness(o);
    }
    if (*ver) return cmd_verify(o);
    if (*cmp) return cmd_compose(o, false);
    if (*inv) return cmd_compose(o, true);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const NotAnAutomorphismError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
