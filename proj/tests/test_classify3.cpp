#include <gtest/gtest.h>

#include "autrel/binary_form.hpp"
#include "autrel/classify3.hpp"
#include "autrel/sampling.hpp"
#include "autrel/verify.hpp"
#include "helpers.hpp"

using namespace autrel;
using autrel::test::P;

namespace {

Polynomial R3(std::string_view text) { return P(text, 3); }

using K = ClassifyOutcome::Kind;

}  // namespace

TEST(Classify, Zero) {
  ClassifyOutcome o = classify(Polynomial(3), WeightVector{1, 1, 1});
  ASSERT_EQ(o.kind, K::Classified);
  EXPECT_EQ(o.type.tag, RelationTag::Zero);
  EXPECT_EQ(o.reason, "affine case");
}

TEST(Classify, T5) {
  ClassifyOutcome o = classify(R3("x3^2 + 5*x2^3"), WeightVector{1, 2, 3});
  ASSERT_EQ(o.kind, K::Classified);
  EXPECT_EQ(o.type.tag, RelationTag::T5);
  EXPECT_EQ(o.type.param("c"), 5);
  EXPECT_TRUE(o.type.h.is_zero());
  EXPECT_EQ(o.type.scale * reconstruct(o.type), R3("x3^2 + 5*x2^3"));
}

TEST(Classify, ForbiddenEntryOne) {
  ClassifyOutcome o = classify(R3("x3^2 + x1^4 + x2^3"), WeightVector{3, 4, 6});
  ASSERT_EQ(o.kind, K::Forbidden);
  EXPECT_EQ(o.forbidden_index, 1);
}

TEST(Classify, NagataRelationIsT4) {
  ClassifyOutcome o = classify(R3("x2^2 + x1*x3"), WeightVector{1, 3, 5});
  ASSERT_EQ(o.kind, K::Classified);
  EXPECT_EQ(o.type.tag, RelationTag::T4_MonomialX3);
  EXPECT_EQ(o.type.int_param("k"), 1);
  EXPECT_EQ(o.type.P, R3("x2^2"));
}

TEST(Classify, ProductLinearX3WithShift) {
  Polynomial r = R3("x2*x3 + x1^5 + x1*x2^2");
  ClassifyOutcome o = classify(r, WeightVector{1, 2, 3});
  ASSERT_EQ(o.kind, K::Classified);
  EXPECT_EQ(o.type.tag, RelationTag::T3_ProductLinearX3);
  EXPECT_EQ(o.type.h, R3("x1*x2"));
  EXPECT_EQ(o.type.int_param("k"), 5);
  EXPECT_EQ(o.type.scale * reconstruct(o.type), r);
}

TEST(Classify, NeedsExtension) {
  ClassifyOutcome o = classify(R3("x3^2 + x1^2 - 2*x2^2"), WeightVector{1, 1, 1});
  EXPECT_EQ(o.kind, K::NeedsExtension);
  EXPECT_FALSE(o.reason.empty());
}

TEST(Classify, NotInList) {
  EXPECT_EQ(classify(R3("x3^2 + x2^5"), WeightVector{1, 2, 5}).kind, K::NotInList);
  EXPECT_EQ(classify(R3("x3^2 + 2*x1*x3 + x1^2"), WeightVector{1, 1, 1}).kind, K::NotInList);
}

TEST(Classify, NotWeightedHomogeneous) {
  EXPECT_EQ(classify(R3("x3^2 + x2"), WeightVector{1, 2, 3}).kind, K::NotWeightedHomogeneous);
}

TEST(Classify, Inequalities) {
  // the support bound is reported, never enforced
  ClassifyOutcome o = classify(R3("x3^2 + 5*x2^3"), WeightVector{1, 2, 3});
  EXPECT_FALSE(o.inequalities.support_bound);
  ASSERT_TRUE(o.inequalities.square_bound);
  EXPECT_FALSE(*o.inequalities.square_bound);
  EXPECT_TRUE(check_inequalities(R3("x2^2 + x1*x3"), WeightVector{1, 3, 5}).support_bound);
}

TEST(CompleteSquare, Examples) {
  CompletedSquare sq = complete_square_x3(R3("x3^2 + 2*x1*x3 + x1^2"));
  EXPECT_EQ(sq.Rprime, R3("x3^2"));
  EXPECT_EQ(sq.h, R3("x1"));
  CompletedSquare same = complete_square_x3(R3("x3^2 + 5*x2^3"));
  EXPECT_EQ(same.Rprime, R3("x3^2 + 5*x2^3"));
  EXPECT_TRUE(same.h.is_zero());
  EXPECT_THROW(complete_square_x3(R3("x1*x3^2 + x2^3")), OddLeadingX3Coefficient);
}

TEST(BinaryForm, MonomialFactors) {
  auto res = factor_weighted_binary_form(R3("x1*x2^2"), 2, 2);
  ASSERT_TRUE(std::holds_alternative<BinaryFormFactors>(res));
  const auto& f = std::get<BinaryFormFactors>(res);
  EXPECT_EQ(f.e1, 1u);
  EXPECT_EQ(f.e2, 1u);
  EXPECT_EQ(f.r1 + f.r2, 0u);
  EXPECT_EQ(f.k(), 3u);
  EXPECT_EQ(expand_binary_form(f, 3), R3("x1*x2^2"));
}

TEST(BinaryForm, IrreducibleBinomial) {
  auto res = factor_weighted_binary_form(R3("x1^4 + x2^3"), 3, 4);
  ASSERT_TRUE(std::holds_alternative<BinaryFormFactors>(res));
  const auto& f = std::get<BinaryFormFactors>(res);
  EXPECT_EQ(f.e1, 4u);
  EXPECT_EQ(f.e2, 3u);
  EXPECT_EQ(f.k(), 1u);
  EXPECT_EQ(f.pairs[0], std::make_pair(Rational(1), Rational(1)));
}

TEST(BinaryForm, TwoBinomials) {
  Polynomial q = R3("(x1^2 + x2)*(x1^2 - x2)");
  auto res = factor_weighted_binary_form(q, 1, 2);
  ASSERT_TRUE(std::holds_alternative<BinaryFormFactors>(res));
  const auto& f = std::get<BinaryFormFactors>(res);
  EXPECT_EQ(f.e1, 2u);
  EXPECT_EQ(f.e2, 1u);
  EXPECT_EQ(f.k(), 2u);
  EXPECT_EQ(expand_binary_form(f, 3), q);
}

TEST(BinaryForm, ExtensionAndErrors) {
  EXPECT_TRUE(std::holds_alternative<BinaryFormNeedsExtension>(
      factor_weighted_binary_form(R3("x1^2 - 2*x2^2"), 1, 1)));
  EXPECT_THROW(factor_weighted_binary_form(R3("x1^2 + x2"), 1, 1), NotHomogeneous);
}

TEST(Forbidden, Examples) {
  EXPECT_EQ(forbidden_match(R3("x3^2 + x1^5 + x2^3")), 2);
  EXPECT_EQ(forbidden_match(R3("x3^2 + (x1^3 + x2^2)*x2")), 5);
  EXPECT_FALSE(forbidden_match(R3("x3^2 + x2^3")));
}

TEST(Normalize, T5RetainsCoefficient) {
  Polynomial r = R3("x3^2 + 5*x2^3");
  NormalForm nf = normalize(r, classify(r, WeightVector{1, 2, 3}).type);
  EXPECT_EQ(nf.canonical.kind, CanonicalForm::Kind::Binomial);
  EXPECT_EQ(nf.canonical.r, 2u);
  EXPECT_EQ(nf.canonical.s, 3u);
  EXPECT_EQ(nf.canonical.coeff, 5);
  ASSERT_EQ(nf.witness.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<TranspositionGen>(nf.witness.generators()[0]));
  EXPECT_EQ(compose(r, expand(nf.witness).coords), nf.residual_scalar * nf.canonical.polynomial());
}

TEST(Normalize, T4IsAlreadyTriangular) {
  Polynomial r = R3("x2^2 + x1*x3");
  NormalForm nf = normalize(r, classify(r, WeightVector{1, 3, 5}).type);
  EXPECT_EQ(nf.canonical.kind, CanonicalForm::Kind::TriangularFiber);
  EXPECT_TRUE(nf.witness.empty());
  auto lnd = canonical_lnd(nf.canonical);
  ASSERT_TRUE(lnd);
  EXPECT_TRUE(apply(*lnd, nf.canonical.polynomial()).is_zero());
}

TEST(Normalize, T9WithSquare) {
  Polynomial r = R3("x3^2 + x1^3 - 4*x2^2");
  ClassifyOutcome o = classify(r, WeightVector{2, 3, 3});
  ASSERT_EQ(o.type.tag, RelationTag::T9);
  NormalForm nf = normalize(r, o.type);
  EXPECT_EQ(nf.canonical.kind, CanonicalForm::Kind::TriangularFiber);
  EXPECT_EQ(compose(r, expand(nf.witness).coords), nf.residual_scalar * nf.canonical.polynomial());
}

TEST(Normalize, T9WithoutSquareIsUnresolved) {
  Polynomial r = R3("x3^2 + x1^3 + 3*x2^2");
  ClassifyOutcome o = classify(r, WeightVector{2, 3, 3});
  ASSERT_EQ(o.type.tag, RelationTag::T9);
  NormalForm nf = normalize(r, o.type);
  EXPECT_EQ(nf.canonical.kind, CanonicalForm::Kind::Unresolved);
  EXPECT_FALSE(nf.canonical.reason.empty());
  EXPECT_FALSE(canonical_lnd(nf.canonical));
}

TEST(Tags, NamesRoundTrip) {
  EXPECT_EQ(nonzero_tags().size(), 13u);
  for (RelationTag t : nonzero_tags()) EXPECT_EQ(parse_relation_tag(to_string(t)), t);
  EXPECT_FALSE(parse_relation_tag("T14"));
}

// Property: sampled instances of every line classify back to their tag and normalize.
TEST(ClassifyProperty, SampledLines) {
  Rng rng(51);
  for (RelationTag tag : nonzero_tags()) {
    for (int i = 0; i < 4; ++i) {
      auto in = sample_classifier_instance(rng, tag);
      auto failure = check_classifier_instance(in);
      EXPECT_FALSE(failure) << to_string(tag) << ": " << *failure;
    }
  }
}

TEST(ClassifyProperty, SampledForbidden) {
  Rng rng(52);
  for (int entry = 1; entry <= 6; ++entry) {
    for (int i = 0; i < 3; ++i) {
      auto failure = check_forbidden_instance(sample_forbidden_instance(rng, entry));
      EXPECT_FALSE(failure) << entry << ": " << *failure;
    }
  }
}
