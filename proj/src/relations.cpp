#include "autrel/relations.hpp"

namespace autrel {

RelationReport relation_report(const PolyMap& phi, const WeightVector& w1, const ReportOptions& opts) {
  validate_map(phi);
  const std::size_t n = phi.nvars();
  if (w1.size() != n) throw DimensionError("weight vector has the wrong length");

  RelationReport rep;
  rep.w1 = w1;
  rep.d = deg2_weights(phi, w1);
  for (const auto& f : phi.coords) rep.fbars.push_back(leading_term(f, w1));
  rep.ideal = kernel_ideal(rep.fbars, rep.d, opts.budget);

  Principality pr = is_principal(rep.ideal, n);
  rep.principal = pr.principal;
  if (pr.principal) {
    rep.R = pr.generator;
    rep.deg2_of_R = wdeg(pr.generator, rep.d);
  }
  rep.parachute = rep.d.sum() - w1.sum();
  rep.bound_ok = rep.principal && rep.deg2_of_R <= WDegree(Rational(rep.parachute + 1));

  if (opts.shadow_oracle && n <= 3 && rep.d.is_integral()) {
    rep.oracle_dmax = rep.parachute + 1;
    auto oracle = graded_kernel_oracle(rep.fbars, rep.d, rep.oracle_dmax);
    OracleAgreement agree = compare_with_oracle(rep.ideal, oracle, rep.d, rep.oracle_dmax);
    if (!agree.ok()) throw Error("graded oracle disagrees with the Groebner kernel: " + agree.detail);
    rep.oracle_checked = true;
  }
  return rep;
}

RelationReport relation_report(const AutWord& phi, const WeightVector& w1, const ReportOptions& opts) {
  return relation_report(expand(phi), w1, opts);
}

DegreeLemmaCheck check_degree_lemma(const PolyMap& phi, const RelationReport& report, const Polynomial& p) {
  DegreeLemmaCheck out;
  out.lhs = wdeg(compose(p, phi.coords), report.w1);
  out.rhs = wdeg(p, report.d);
  out.strict = out.lhs < out.rhs;
  if (!p.is_zero()) out.tilde_in_I = normal_form(leading_term(p, report.d), report.ideal).is_zero();
  return out;
}

ParachuteCheck check_parachute(const PolyMap& phi, const RelationReport& report, const Polynomial& p, unsigned k,
                               std::optional<std::size_t> var) {
  const std::size_t v = var.value_or(phi.nvars() - 1);
  if (v >= phi.nvars()) throw DimensionError("parachute variable out of range");
  Polynomial q = p;
  for (unsigned s = 0; s < k; ++s) q = partial(q, v);
  ParachuteCheck out;
  out.lhs = wdeg(compose(p, phi.coords), report.w1);
  WDegree inner = wdeg(compose(q, phi.coords), report.w1);
  if (inner.is_minus_infinity()) {
    out.rhs = inner;
  } else {
    out.rhs = WDegree(Rational(inner.value() + Rational(k) * report.d[v] - Rational(k) * report.parachute));
  }
  out.holds = out.lhs >= out.rhs;
  return out;
}

unsigned order_in_R(const Polynomial& ptilde, const Polynomial& R) {
  if (R.is_zero() || R.is_constant()) throw DomainError("order_in_R needs a non-constant R");
  if (ptilde.is_zero()) throw DomainError("order_in_R of the zero polynomial");
  unsigned k = 0;
  Polynomial q = ptilde;
  while (auto next = divide_exact(q, R)) {
    q = std::move(*next);
    ++k;
  }
  return k;
}

OrderBoundCheck check_order_bound(const PolyMap& phi, const RelationReport& report, const Polynomial& p) {
  if (!report.principal || !report.R || report.R->is_zero()) throw DomainError("order bound needs a nonzero principal R");
  OrderBoundCheck out;
  out.k = order_in_R(leading_term(p, report.d), *report.R);
  out.lhs = wdeg(compose(p, phi.coords), report.w1);
  out.bound = Rational(out.k) * (report.deg2_of_R.value() - report.parachute);
  out.holds = out.lhs >= WDegree(out.bound);
  return out;
}

}  // namespace autrel
