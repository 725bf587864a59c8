#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "autrel/autmap.hpp"
#include "autrel/groebner.hpp"
#include "autrel/polynomial.hpp"

namespace autrel {

struct RelationReport {
  WeightVector w1;
  WeightVector d;
  std::vector<Polynomial> fbars;
  IdealBasis ideal;
  bool principal = false;
  std::optional<Polynomial> R;  // zero polynomial for I = (0); absent when not principal
  WDegree deg2_of_R;
  Rational parachute;  // sum(d) - sum(w1)
  bool bound_ok = false;
  bool oracle_checked = false;
  Rational oracle_dmax;
};

struct ReportOptions {
  std::size_t budget = kDefaultPairBudget;
  bool shadow_oracle = true;
};

/// Throws Error when the shadow oracle disagrees with the Groebner kernel.
RelationReport relation_report(const PolyMap& phi, const WeightVector& w1, const ReportOptions& opts = {});
RelationReport relation_report(const AutWord& phi, const WeightVector& w1, const ReportOptions& opts = {});

struct DegreeLemmaCheck {
  WDegree lhs;  // deg1(P o phi)
  WDegree rhs;  // deg2(P)
  bool strict = false;
  bool tilde_in_I = false;
  bool holds() const { return lhs <= rhs && strict == tilde_in_I; }
};

DegreeLemmaCheck check_degree_lemma(const PolyMap& phi, const RelationReport& report, const Polynomial& p);

struct ParachuteCheck {
  WDegree lhs;  // deg1(P o phi)
  WDegree rhs;  // deg1(d^k P / dx_var^k o phi) + k d_var - k nabla
  bool holds = false;
};

/// var defaults to the last variable.
ParachuteCheck check_parachute(const PolyMap& phi, const RelationReport& report, const Polynomial& p, unsigned k,
                               std::optional<std::size_t> var = std::nullopt);

/// Largest k with R^k dividing ptilde. R must be a nonzero non-constant polynomial.
unsigned order_in_R(const Polynomial& ptilde, const Polynomial& R);

struct OrderBoundCheck {
  unsigned k = 0;
  WDegree lhs;      // deg1(P o phi)
  Rational bound;   // k (deg2 R - nabla)
  bool holds = false;
};

/// deg1(P o phi) >= k (deg2(R) - nabla) where k = order_in_R(P~, R). Requires a nonzero principal R.
OrderBoundCheck check_order_bound(const PolyMap& phi, const RelationReport& report, const Polynomial& p);

}  // namespace autrel
