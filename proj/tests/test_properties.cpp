#include <gtest/gtest.h>

#include <cctype>
#include <cstdlib>

#include "autrel/error.hpp"
#include "autrel/sampling.hpp"
#include "autrel/verify.hpp"

using namespace autrel;

class SuiteTest : public testing::TestWithParam<std::string> {};

TEST_P(SuiteTest, SmallRunHasNoFailures) {
  SuiteResult s = run_suite(GetParam(), 17, 20);
  EXPECT_EQ(s.cases, 20u);
  EXPECT_TRUE(s.ok()) << s.failures[0].index << ": " << s.failures[0].message;
}

TEST_P(SuiteTest, Deterministic) {
  SuiteResult a = run_suite(GetParam(), 3, 8);
  SuiteResult b = run_suite(GetParam(), 3, 8);
  EXPECT_EQ(a.counters, b.counters);
  EXPECT_EQ(a.failures.size(), b.failures.size());
}

INSTANTIATE_TEST_SUITE_P(AllSuites, SuiteTest, testing::ValuesIn(suite_names()),
                         [](const testing::TestParamInfo<std::string>& info) {
                           std::string name;
                           for (char ch : info.param) name += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
                           return name;
                         });

TEST(Suites, UnknownNameThrows) { EXPECT_THROW(run_suite("no-such-suite", 1, 1), DomainError); }

TEST(Sampling, SeededCorporaAreReproducible) {
  auto a = tame_corpus2(99, 10);
  auto b = tame_corpus2(99, 10);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(format_word(a[i]), format_word(b[i]));
  Rng r1(5), r2(5);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(uniform(r1, -3, 7), uniform(r2, -3, 7));
}

TEST(Sampling, RangesRespected) {
  Rng rng(6);
  for (int i = 0; i < 500; ++i) {
    long u = uniform(rng, -4, 4);
    EXPECT_GE(u, -4);
    EXPECT_LE(u, 4);
    long z = nonzero(rng, 3);
    EXPECT_NE(z, 0);
    EXPECT_LE(std::abs(z), 3);
  }
}
