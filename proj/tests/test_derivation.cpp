#include <gtest/gtest.h>

#include "autrel/derivation.hpp"
#include "autrel/sampling.hpp"
#include "autrel/verify.hpp"
#include "helpers.hpp"

using namespace autrel;
using autrel::test::M;
using autrel::test::P;

namespace {

Derivation D(std::string_view text, std::size_t n) { return parse_derivation(text, n); }

}  // namespace

TEST(Apply, Examples) {
  EXPECT_EQ(apply(partial_derivation(2, 0), P("x1^2", 2)), P("2*x1", 2));
  EXPECT_TRUE(apply(D("2*x2; 1", 2), P("x1 - x2^2", 2)).is_zero());
  EXPECT_EQ(apply_power(partial_derivation(2, 0), P("x1^3", 2), 2), P("6*x1", 2));
}

TEST(DerivationDegree, Examples) {
  WeightVector w{2, 5, 3};
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(derivation_degree(partial_derivation(3, i), w), WDegree(-w[i]));
  EXPECT_TRUE(derivation_degree(Derivation{{Polynomial(3), Polynomial(3), Polynomial(3)}}, w).is_minus_infinity());
  EXPECT_EQ(derivation_degree(D("2*x2; 1", 2), WeightVector{2, 1}), WDegree(-1));
}

TEST(LeadingDerivation, Examples) {
  Derivation h = D("2*x2; 1", 2);
  EXPECT_EQ(leading_derivation(h, WeightVector{2, 1}), h);
  EXPECT_EQ(leading_derivation(D("2*x2+1; 1", 2), WeightVector{2, 1}), h);
  EXPECT_EQ(leading_derivation(D("1; x1", 2), WeightVector{1, 1}), D("0; x1", 2));
  EXPECT_THROW(leading_derivation(Derivation{{Polynomial(2), Polynomial(2)}}, WeightVector{1, 1}), DomainError);
}

TEST(NilpotenceOrder, Examples) {
  auto zero = nilpotence_order(partial_derivation(2, 0), Polynomial(2), 10);
  ASSERT_TRUE(zero);
  EXPECT_TRUE(zero->is_minus_infinity());
  EXPECT_EQ(nilpotence_order(partial_derivation(2, 0), P("x1^3", 2), 10), WDegree(3));
  EXPECT_FALSE(nilpotence_order(D("x1; 0", 2), P("x1", 2), 20));
}

TEST(LocallyNilpotent, Partial) {
  auto v = is_locally_nilpotent(partial_derivation(3, 2));
  EXPECT_EQ(v.kind, NilpotenceVerdict::Kind::LocallyNilpotent);
  for (unsigned k : v.orders) EXPECT_LE(k, 2u);
}

TEST(LocallyNilpotent, EulerIsNotNilpotent) {
  // x1 d/dx1 maps x1 to itself, a certificate that no power vanishes
  auto v = is_locally_nilpotent(D("x1; 0", 2), 12);
  EXPECT_EQ(v.kind, NilpotenceVerdict::Kind::NotNilpotent);
  EXPECT_EQ(v.variable, 0u);
}

TEST(LocallyNilpotent, UnknownWhenIterationIsInconclusive) {
  // x2 d/dx1 + x1 d/dx2 cycles x1 -> x2 -> x1 with no divisibility certificate
  EXPECT_EQ(is_locally_nilpotent(D("x2; x1", 2), 10).kind, NilpotenceVerdict::Kind::Unknown);
  EXPECT_EQ(is_locally_nilpotent(D("x2; 1", 2), 1).kind, NilpotenceVerdict::Kind::Unknown);
}

TEST(LocallyNilpotent, TriangularFiberDerivation) {
  // x1^k d/dx2 - dP/dx2 d/dx3 with P = x1 x2^3 + x2^2, k = 2
  Polynomial p = P("x1*x2^3 + x2^2", 3);
  Derivation d{{Polynomial(3), P("x1^2", 3), -partial(p, 1)}};
  EXPECT_EQ(is_locally_nilpotent(d).kind, NilpotenceVerdict::Kind::LocallyNilpotent);
  EXPECT_TRUE(apply(d, P("x1^2*x3", 3) + p).is_zero());
}

TEST(DeltaDerivation, Examples) {
  EXPECT_EQ(delta_derivation(identity_map(2), 0), partial_derivation(2, 0));
  PolyMap inv = M("x1-x2^2; x2");
  EXPECT_EQ(delta_derivation(inv, 1), D("2*x2; 1", 2));
}

TEST(DeltaDerivation, KroneckerOnInverseCoordinates) {
  PolyMap inv = M(test::kNagataInverse);
  for (std::size_t i = 0; i < 3; ++i) {
    Derivation d = delta_derivation(inv, i);
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(apply(d, inv.coords[j]), Polynomial::constant(3, i == j ? 1 : 0));
    }
  }
}

TEST(LndWitness, AffineMap) {
  AutWord w(2, {make_affine({{1, 2}, {0, 3}}, {1, -1})});
  LndWitness lw = lnd_witness(Automorphism::from_word(w), WeightVector::standard(2));
  for (const auto& c : lw.dbar.coeffs) EXPECT_TRUE(c.is_constant());
  EXPECT_EQ(lw.verdict.kind, NilpotenceVerdict::Kind::LocallyNilpotent);
}

TEST(LndWitness, ElementaryMap) {
  AutWord w(2, {make_elementary(2, 0, P("x2^2", 2))});
  LndWitness lw = lnd_witness(Automorphism::from_word(w), WeightVector::standard(2), P("x1 - x2^2", 2));
  EXPECT_EQ(lw.index, 1u);
  EXPECT_EQ(lw.dbar, D("2*x2; 1", 2));
  ASSERT_TRUE(lw.annihilates);
  EXPECT_TRUE(*lw.annihilates);
}

TEST(LndWitness, Nagata) {
  Automorphism a = Automorphism::from_maps(M(test::kNagata), M(test::kNagataInverse));
  LndWitness lw = lnd_witness(a, WeightVector::standard(3), P("x2^2 + x1*x3", 3));
  EXPECT_EQ(lw.verdict.kind, NilpotenceVerdict::Kind::LocallyNilpotent);
  ASSERT_TRUE(lw.annihilates);
  EXPECT_TRUE(*lw.annihilates);
}

TEST(DerivationText, RoundTrip) {
  Derivation d = D("2*x2; 1 - 1/3*x1^2", 2);
  EXPECT_EQ(parse_derivation(format_derivation(d), 2), d);
}

// Property: the degree of a product under a locally nilpotent derivation is additive.
TEST(DerivationProperty, NilpotenceOrderAdditive) {
  Rng rng(31);
  Derivation d = D("x2^2; x3; 0", 3);
  ASSERT_EQ(is_locally_nilpotent(d).kind, NilpotenceVerdict::Kind::LocallyNilpotent);
  for (int i = 0; i < 60; ++i) {
    Polynomial a = sample_polynomial(rng, 3, 3, 3, 5);
    Polynomial b = sample_polynomial(rng, 3, 3, 3, 5);
    if (a.is_zero() || b.is_zero()) continue;
    auto da = nilpotence_order(d, a, 40);
    auto db = nilpotence_order(d, b, 40);
    auto dab = nilpotence_order(d, a * b, 80);
    ASSERT_TRUE(da && db && dab);
    EXPECT_EQ(*dab, *da + *db);
  }
}

TEST(DerivationProperty, DeltaIdentityOnRandomWords) {
  Rng rng(32);
  for (int i = 0; i < 40; ++i) {
    WordOptions o;
    o.nvars = 2 + i % 2;
    o.max_gens = 3;
    o.max_addend_degree = 2;
    o.coeff_bound = 5;
    o.degree_budget = 6;
    AutWord w = sample_tame_word(rng, o);
    Polynomial p = sample_polynomial(rng, o.nvars, 3, 4, 5);
    auto failure = check_delta_identity(w, p);
    EXPECT_FALSE(failure) << *failure;
  }
}
