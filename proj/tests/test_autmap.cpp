#include <gtest/gtest.h>

#include "autrel/autmap.hpp"
#include "autrel/error.hpp"
#include "autrel/sampling.hpp"
#include "helpers.hpp"

using namespace autrel;
using autrel::test::M;
using autrel::test::P;

TEST(Expand, SingleGenerators) {
  AutWord e(2, {make_elementary(2, 0, P("x2^2", 2))});
  EXPECT_EQ(expand(e), M("x1+x2^2; x2"));
  AutWord t(2, {make_transposition(2, 0, 1)});
  EXPECT_EQ(expand(t), M("x2; x1"));
}

TEST(Expand, ThreeGeneratorsMatchStepwiseSubstitution) {
  Generator g1 = make_elementary(2, 0, P("x2^2", 2));
  Generator g2 = make_transposition(2, 0, 1);
  Generator g3 = make_elementary(2, 0, P("x2^3", 2));
  AutWord w(2, {g1, g2, g3});
  // g3 o g2 o g1, substituting the later generators' coordinates into the earlier map
  PolyMap step = generator_map(g1, 2);
  step = compose_maps(generator_map(g2, 2), step);
  step = compose_maps(generator_map(g3, 2), step);
  EXPECT_EQ(expand(w), step);
  // (x1 + x2^2, x2) -> swap -> (x2, x1 + x2^2) -> add cube of second to first
  EXPECT_EQ(expand(w), M("x2 + (x1+x2^2)^3; x1 + x2^2"));
}

TEST(Invert, Examples) {
  AutWord e(2, {make_elementary(2, 0, P("x2^2", 2))});
  AutWord inv = invert_word(e);
  ASSERT_EQ(inv.size(), 1u);
  EXPECT_EQ(expand(inv), M("x1-x2^2; x2"));
  EXPECT_TRUE(invert_word(AutWord(3)).empty());
}

TEST(Jacobian, Constants) {
  EXPECT_EQ(jacobian_constant(identity_map(3)), 1);
  EXPECT_EQ(jacobian_constant(M("x1+x2^2; x2")), 1);
  EXPECT_EQ(jacobian_constant(M("2*x1; x2")), 2);
  EXPECT_THROW(jacobian_constant(M("x1^2; x2")), NonConstantJacobian);
  EXPECT_THROW(jacobian_constant(M("x1+x2; x1+x2")), ZeroJacobian);
}

TEST(Deg2Weights, Examples) {
  EXPECT_EQ(deg2_weights(identity_map(2), WeightVector{1, 1}).values(), (WeightVector{1, 1}).values());
  EXPECT_EQ(deg2_weights(M("x1+x2^2; x2"), WeightVector::standard(2)).values(), (WeightVector{2, 1}).values());
  EXPECT_EQ(deg2_weights(M(test::kNagata), WeightVector::standard(3)).values(), (WeightVector{5, 3, 1}).values());
}

TEST(Automorphism, NagataFromMaps) {
  Automorphism a = Automorphism::from_maps(M(test::kNagata), M(test::kNagataInverse));
  EXPECT_EQ(a.jacobian, 1);
  EXPECT_THROW(Automorphism::from_maps(M(test::kNagata), M(test::kNagata)), DomainError);
}

TEST(Generators, Validation) {
  EXPECT_THROW(make_elementary(2, 0, P("x1*x2", 2)), DomainError);
  EXPECT_THROW(make_transposition(2, 1, 1), DomainError);
  EXPECT_THROW(make_affine({{1, 1}, {1, 1}}, {0, 0}), DomainError);
}

TEST(TextFormat, WordRoundTrip) {
  AutWord w = parse_word("E 1 x2^2\nT 1 2 # swap\nA 2 0 0 1 | 1 -1/2; E 2 3*x1^3", 2);
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(parse_word(format_word(w), 2).generators().size(), 4u);
  EXPECT_EQ(expand(parse_word(format_word(w), 2)), expand(w));
  EXPECT_THROW(parse_word("Q 1 2", 2), ParseError);
  EXPECT_THROW(parse_word("T 1 3", 2), Error);
}

TEST(TextFormat, MapRoundTrip) {
  PolyMap m = M(test::kNagata);
  EXPECT_EQ(parse_map(format_map(m)), m);
  EXPECT_THROW(parse_map("x1; x3"), ParseError);
}

// Property: a word composed with its inverse expands to the identity, and the Jacobian
// is the product of generator Jacobians.
TEST(AutmapProperty, InverseAndJacobian) {
  Rng rng(21);
  for (int i = 0; i < 80; ++i) {
    WordOptions o;
    o.nvars = 2 + i % 2;
    o.max_gens = 4;
    o.max_addend_degree = 3;
    o.degree_budget = 9;
    AutWord w = sample_tame_word(rng, o);
    EXPECT_TRUE(is_identity(expand(w * invert_word(w))));
    EXPECT_TRUE(is_identity(expand(invert_word(w) * w)));
    EXPECT_EQ(jacobian_constant(expand(w)), word_jacobian(w));
    Automorphism a = Automorphism::from_word(w);
    EXPECT_TRUE(is_identity(compose_maps(a.inverse, a.forward)));
  }
}

TEST(AutmapProperty, AffineWordsExpandAffine) {
  Rng rng(22);
  for (int i = 0; i < 30; ++i) EXPECT_TRUE(is_affine_map(expand(sample_affine_word(rng, 2 + i % 2))));
}
