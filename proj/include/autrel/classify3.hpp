#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "autrel/autmap.hpp"
#include "autrel/derivation.hpp"
#include "autrel/error.hpp"
#include "autrel/polynomial.hpp"

namespace autrel {

/// Lines of the principal-relation list for n = 3. x3' = x3 + h(x1, x2).
///   Zero                 0
///   ElemReducible        x3'
///   TwoVarBinomial       x1^e1 + c x2^e2, gcd(e1, e2) = 1
///   T3_ProductLinearX3   (x2 + a x1^e1) x3' + c x1^k, k >= 2
///   T4_MonomialX3        x1^k x3' + P(x1, x2), k >= 1
///   T5                   x3'^2 + c x2^3
///   T6                   x3'^2 + c x1 x2^2
///   T7                   x3'^2 + c x1^r1, r1 odd >= 3
///   T8                   x3'^2 + c x1^r1 x2, r1 >= 1
///   T9                   x3'^2 + a x1^e1 + b x2^2, ab != 0, e1 odd >= 3
///   T10                  x3'^2 + (a x1^e1 + b x2) x1^r1, ab != 0
///   T11                  x3'^2 + (a1 x1^e1 + b1 x2)(a2 x1^e1 + b2 x2), a1 b2 - a2 b1 != 0
///   T12                  x3'^2 + (a1 x1 + b1 x2)(a2 x1 + b2 x2)^2
///   T13                  x3'^2 + c (a x1^e1 + x2)^2 x1, a != 0, e1 >= 2
enum class RelationTag {
  Zero,
  ElemReducible,
  TwoVarBinomial,
  T3_ProductLinearX3,
  T4_MonomialX3,
  T5,
  T6,
  T7,
  T8,
  T9,
  T10,
  T11,
  T12,
  T13,
};

std::string to_string(RelationTag tag);
std::optional<RelationTag> parse_relation_tag(const std::string& name);
/// The thirteen tags other than Zero, in list order.
const std::vector<RelationTag>& nonzero_tags();

struct RelationType {
  RelationTag tag = RelationTag::Zero;
  std::map<std::string, Rational> params;  // integer parameters are stored as integral rationals
  Polynomial P{3};                          // T4_MonomialX3 only
  Polynomial h{3};                          // the shift x3' = x3 + h
  Rational scale{1};                        // R = scale * reconstruct(type)

  long int_param(const std::string& name) const;
  const Rational& param(const std::string& name) const;
};

/// The pattern of the line with x3 replaced by x3 + h.
Polynomial reconstruct(const RelationType& type);

struct InequalityReport {
  bool support_bound = true;        // every alpha in Supp(R): alpha . d <= sum(d) - 2
  std::optional<bool> square_bound;  // d3 <= d1 + d2 - 2, square cases only
  std::optional<bool> factor_bound;  // 2/e2 <= k + r1/e1 + r2/e2 < 2/e2 + 2/e1
  std::vector<std::string> notes;
};

struct ClassifyOutcome {
  enum class Kind { Classified, Forbidden, NeedsExtension, NotWeightedHomogeneous, NotInList };
  Kind kind = Kind::NotInList;
  RelationType type;            // Classified
  int forbidden_index = 0;      // Forbidden, 1..6
  std::string reason;           // NeedsExtension, NotInList
  InequalityReport inequalities;
};

std::string to_string(ClassifyOutcome::Kind kind);

class OddLeadingX3Coefficient : public DomainError {
 public:
  using DomainError::DomainError;
};

struct CompletedSquare {
  Polynomial Rprime;  // R(x1, x2, x3 - h)
  Polynomial h;
};

/// Removes the x3-linear part (degree 2) or the Q-part (degree 1).
CompletedSquare complete_square_x3(const Polynomial& R);

/// Index 1..6 of the forbidden family R is proportional to.
std::optional<int> forbidden_match(const Polynomial& R);

/// d must be sorted ascending positive integers. R has three variables.
ClassifyOutcome classify(const Polynomial& R, const WeightVector& d);

InequalityReport check_inequalities(const Polynomial& R, const WeightVector& d);

struct CanonicalForm {
  enum class Kind { Zero, X3, Binomial, TriangularFiber, Unresolved };
  Kind kind = Kind::Zero;
  unsigned r = 0;  // Binomial: x1^r + coeff x2^s
  unsigned s = 0;
  Rational coeff{1};
  unsigned k = 0;       // TriangularFiber: x1^k x3 + P
  Polynomial P{3};
  Polynomial reached{3};  // Unresolved: the polynomial the witness reaches
  std::string reason;

  Polynomial polynomial() const;
};

std::string to_string(CanonicalForm::Kind kind);

/// The derivation whose kernel contains the canonical form. Absent for Unresolved.
std::optional<Derivation> canonical_lnd(const CanonicalForm& form);

struct NormalForm {
  CanonicalForm canonical;
  AutWord witness{3};
  Rational residual_scalar{1};  // R o expand(witness) = residual_scalar * canonical
};

class WitnessVerificationFailed : public Error {
 public:
  using Error::Error;
};

/// R is the relation the type was extracted from.
NormalForm normalize(const Polynomial& R, const RelationType& type);

}  // namespace autrel
