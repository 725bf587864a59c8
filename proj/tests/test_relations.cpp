#include <gtest/gtest.h>

#include "autrel/relations.hpp"
#include "autrel/sampling.hpp"
#include "autrel/verify.hpp"
#include "helpers.hpp"

using namespace autrel;
using autrel::test::M;
using autrel::test::P;

TEST(RelationReport, Affine) {
  AutWord w = parse_word("A 1 2 0 1 | 3 0", 2);
  RelationReport r = relation_report(w, WeightVector::standard(2));
  EXPECT_TRUE(r.principal);
  ASSERT_TRUE(r.R);
  EXPECT_TRUE(r.R->is_zero());
  EXPECT_TRUE(r.ideal.gens.empty());
}

TEST(RelationReport, Elementary) {
  RelationReport r = relation_report(M("x1+x2^2; x2"), WeightVector::standard(2));
  ASSERT_TRUE(r.R);
  EXPECT_EQ(*r.R, P("x1 - x2^2", 2));
  EXPECT_EQ(r.deg2_of_R, WDegree(2));
  EXPECT_EQ(r.parachute, 1);
  EXPECT_TRUE(r.bound_ok);
  EXPECT_TRUE(r.oracle_checked);
}

TEST(RelationReport, Nagata) {
  RelationReport r = relation_report(M(test::kNagata), WeightVector::standard(3));
  EXPECT_EQ(r.d, (WeightVector{5, 3, 1}));
  ASSERT_TRUE(r.R);
  EXPECT_EQ(*r.R, P("x2^2 + x1*x3", 3));
  EXPECT_EQ(r.deg2_of_R, WDegree(6));
  EXPECT_EQ(r.parachute, 6);
  EXPECT_TRUE(r.bound_ok);
}

TEST(DegreeLemma, Examples) {
  PolyMap phi = M("x1+x2^2; x2");
  RelationReport r = relation_report(phi, WeightVector::standard(2));
  auto xi = check_degree_lemma(phi, r, P("x1", 2));
  EXPECT_EQ(xi.lhs, WDegree(2));
  EXPECT_EQ(xi.rhs, WDegree(2));
  EXPECT_FALSE(xi.strict);
  EXPECT_TRUE(xi.holds());
  auto g = check_degree_lemma(phi, r, P("x1 - x2^2", 2));
  EXPECT_EQ(g.lhs, WDegree(1));
  EXPECT_EQ(g.rhs, WDegree(2));
  EXPECT_TRUE(g.strict);
  EXPECT_TRUE(g.tilde_in_I);
}

TEST(DegreeLemma, InverseCoordinatesOfNagata) {
  PolyMap phi = M(test::kNagata);
  PolyMap inv = M(test::kNagataInverse);
  RelationReport r = relation_report(phi, WeightVector::standard(3));
  for (std::size_t j = 0; j < 2; ++j) {
    auto c = check_degree_lemma(phi, r, inv.coords[j]);
    EXPECT_EQ(c.lhs, WDegree(1));
    EXPECT_TRUE(c.tilde_in_I);
    EXPECT_TRUE(c.holds());
  }
}

TEST(Parachute, Examples) {
  PolyMap phi = M("x1+x2^2; x2");
  RelationReport r = relation_report(phi, WeightVector::standard(2));
  EXPECT_TRUE(check_parachute(phi, r, P("x1^3 - x1*x2", 2), 0).holds);
  auto c = check_parachute(phi, r, P("x1 - x2^2", 2), 1);
  EXPECT_EQ(c.lhs, WDegree(1));
  EXPECT_EQ(c.rhs, WDegree(1));
  EXPECT_TRUE(c.holds);
}

TEST(OrderInR, Examples) {
  Polynomial r = P("x1 - x2^2", 2);
  Polynomial s = P("x1 + x2", 2);
  EXPECT_EQ(order_in_R(pow(r, 3) * s, r), 3u);
  EXPECT_EQ(order_in_R(s, r), 0u);
  EXPECT_THROW(order_in_R(s, Polynomial::constant(2, 2)), DomainError);
}

TEST(OrderBound, Nagata) {
  PolyMap phi = M(test::kNagata);
  RelationReport r = relation_report(phi, WeightVector::standard(3));
  auto c = check_order_bound(phi, r, pow(*r.R, 2) + P("x1", 3));
  EXPECT_EQ(c.k, 2u);
  EXPECT_TRUE(c.holds);
  auto inv = M(test::kNagataInverse);
  auto d = check_order_bound(phi, r, inv.coords[1]);
  EXPECT_TRUE(d.holds);
}

// Property: random words and test polynomials satisfy both degree inequalities.
TEST(RelationsProperty, LemmaAndParachuteSuites) {
  for (const char* name : {"lemma-1<2", "parachute"}) {
    SuiteResult s = run_suite(name, 5, 30);
    EXPECT_TRUE(s.ok()) << name << ": " << (s.failures.empty() ? "" : s.failures[0].message);
    EXPECT_EQ(s.cases, 30u);
  }
}
