#include <gtest/gtest.h>

#include <optional>
#include <vector>

#include "qseries/dissection.hpp"
#include "qseries/qproducts.hpp"
#include "random_series.hpp"

using namespace qseries;
using qseries::testing::SeriesGen;

TEST(Dissection, ConstantSeries) {
  const Dissection d = dissect(Series::constant(1, 100), 5);
  ASSERT_EQ(d.slices.size(), 5u);
  EXPECT_EQ(d.slices[0].coefficient(0), 1);
  for (std::size_t l = 1; l < 5; ++l) EXPECT_TRUE(d.slices[l].is_zero());
  EXPECT_EQ(d.slices[0].order(), 20);
}

TEST(Dissection, ModulusOneIsIdentity) {
  const Series g = G_product(100);
  const Dissection d = dissect(g, 1);
  ASSERT_EQ(d.slices.size(), 1u);
  EXPECT_EQ(d.slices[0], g);
}

TEST(Dissection, SliceOrdersRoundUp) {
  // N = 23, m = 5: slice l knows q^n for 5n + l < 23.
  const Dissection d = dissect(G_product(23), 5);
  const std::vector<Exponent> expected{5, 5, 5, 4, 4};
  for (std::size_t l = 0; l < 5; ++l) EXPECT_EQ(d.slices[l].order(), expected[l]);
}

TEST(Dissection, SlicesReadTheRightCoefficients) {
  const Series f = R(200);
  const Dissection d = dissect(f, 5);
  for (Exponent n = 0; n < 200; ++n) EXPECT_EQ(d.slices[n % 5].coefficient(n / 5), f.coefficient(n));
}

TEST(Dissection, RejectsBadInput) {
  EXPECT_THROW(dissect(Series::monomial(1, -1, 10), 5), NegativeValuation);
  EXPECT_THROW(dissect(Series::constant(1, 10), 0), SeriesError);
}

TEST(DissectionProperty, RoundTripOnRandomSeries) {
  SeriesGen gen(314159);
  for (int trial = 0; trial < 100; ++trial) {
    const Series f = gen.series(0, 10, 200, 70);
    const std::int64_t m = gen.uniform(1, 12);
    const Dissection d = dissect(f, m);
    const Series back = recombine(d);
    EXPECT_EQ(back, f) << "trial " << trial << " m " << m;
  }
}

TEST(SupportCheck, AcceptsSingleClassTerms) {
  const std::vector<Series> terms{shift(substitute_power(G_product(40), 5), 2).truncated(200),
                                  shift(substitute_power(H_product(40), 5), 0).truncated(200)};
  const std::vector<std::optional<std::int64_t>> expected{2, 0};
  const SupportReport r = slice_support_check(terms, 5, expected);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.terms[0].residue, 2);
  EXPECT_EQ(r.terms[1].residue, 0);
}

TEST(SupportCheck, ReportsFirstViolation) {
  const std::pair<Exponent, Integer> mixed[] = {{1, 1}, {6, 1}, {8, 3}};
  const std::vector<Series> terms{Series::make(mixed, 20)};
  const SupportReport r = slice_support_check(terms, 5);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.terms[0].residue, 1);
  EXPECT_EQ(r.terms[0].first_violation, 8);
}

TEST(SupportCheck, ReportsWrongExpectedClass) {
  const std::vector<Series> terms{Series::monomial(1, 3, 20)};
  const std::vector<std::optional<std::int64_t>> expected{4};
  EXPECT_FALSE(slice_support_check(terms, 5, expected).pass());
}
