#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "autrel/error.hpp"
#include "autrel/polynomial.hpp"

namespace autrel {

/// Total monomial order. Weighted comparisons are done on integer-scaled weights.
class MonomialOrder {
 public:
  enum class Kind { Lex, GradedLex, BlockElimination };

  static MonomialOrder lex(std::size_t nvars);
  /// Weighted degree first, ties broken lexicographically.
  static MonomialOrder graded_lex(const WeightVector& w);
  /// Variables [0, front) form the front block. Monomials are compared by the front block
  /// under graded_lex(front), then the back block under graded_lex(back). If `grading` is
  /// nonempty it is compared before everything else; this keeps elimination valid for
  /// ideals that are homogeneous for `grading`.
  static MonomialOrder block(const WeightVector& front, const WeightVector& back, const WeightVector& grading = {});

  Kind kind() const noexcept { return kind_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t front_size() const noexcept { return front_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string describe() const;

 private:
  Kind kind_ = Kind::Lex;
  std::size_t nvars_ = 0;
  std::size_t front_ = 0;
  std::vector<std::int64_t> grading_;
  std::vector<std::int64_t> front_w_;
  std::vector<std::int64_t> back_w_;
};

struct IdealBasis {
  std::vector<Polynomial> gens;
  MonomialOrder order;
  bool reduced = false;
};

class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);
Rational leading_coefficient(const Polynomial& p, const MonomialOrder& order);
/// Scales so the leading coefficient under `order` is 1.
Polynomial make_monic(const Polynomial& p, const MonomialOrder& order);

/// Remainder of full multivariate division.
Polynomial normal_form(const Polynomial& p, const IdealBasis& basis);

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t coprime_skips = 0;
  std::size_t chain_skips = 0;
};

inline constexpr std::size_t kDefaultPairBudget = 100000;

/// Reduced Groebner basis. Throws ResourceCapExceeded after `budget` pair reductions.
IdealBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                      std::size_t budget = kDefaultPairBudget, BuchbergerStats* stats = nullptr);

/// Every S-polynomial reduces to zero.
bool is_groebner_basis(const IdealBasis& basis);

/// Kernel of z_i -> images[i], as a reduced basis in n relation variables ordered by
/// graded_lex(dweights).
IdealBasis kernel_ideal(const std::vector<Polynomial>& images, const WeightVector& dweights,
                        std::size_t budget = kDefaultPairBudget);

/// Linear algebra on each graded slice alpha . d = D <= dmax. Returns a basis of every
/// slice's solution space.
std::vector<Polynomial> graded_kernel_oracle(const std::vector<Polynomial>& images, const WeightVector& dweights,
                                             const Rational& dmax);

struct OracleAgreement {
  bool oracle_in_ideal = true;     // each oracle relation reduces to 0
  bool basis_in_oracle = true;     // each basis member of degree <= dmax lies in the oracle span
  std::string detail;
  bool ok() const { return oracle_in_ideal && basis_in_oracle; }
};

OracleAgreement compare_with_oracle(const IdealBasis& kernel, const std::vector<Polynomial>& oracle,
                                    const WeightVector& dweights, const Rational& dmax);

struct Principality {
  bool principal = false;
  Polynomial generator;  // zero polynomial for the zero ideal
};

/// Principal iff the reduced basis has at most one element.
Principality is_principal(const IdealBasis& basis, std::size_t nvars);

}  // namespace autrel
