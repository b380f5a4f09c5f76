#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "qseries/series.hpp"
#include "random_series.hpp"

using namespace qseries;
using qseries::testing::SeriesGen;

namespace {

std::vector<long> coefficients(const Series& s, Exponent from, Exponent to) {
  std::vector<long> out;
  for (Exponent n = from; n < to; ++n) out.push_back(s.coefficient(n).get_si());
  return out;
}

// 1 - q, to the given order.
Series one_minus_q(Exponent order) {
  const std::pair<Exponent, Integer> terms[] = {{0, 1}, {1, -1}};
  return Series::make(terms, order);
}

}  // namespace

TEST(Series, Factories) {
  const Series z = Series::zero(10);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.valuation(), 10);
  EXPECT_EQ(z.order(), 10);
  EXPECT_EQ(z.coefficient(3), 0);

  const Series m = Series::monomial(7, 3, 10);
  EXPECT_EQ(m.valuation(), 3);
  EXPECT_EQ(m.coefficient(3), 7);
  EXPECT_EQ(m.coefficient(2), 0);

  EXPECT_TRUE(Series::constant(0, 5).is_zero());
  EXPECT_EQ(Series::from_dense(-2, {0, 0, 4, 5}, 10).valuation(), 0);
}

TEST(Series, MakeRejectsDuplicatesAndOutOfRange) {
  const std::pair<Exponent, Integer> dup[] = {{1, 1}, {1, 2}};
  EXPECT_THROW(Series::make(dup, 5), DuplicateExponent);
  const std::pair<Exponent, Integer> far[] = {{7, 1}};
  EXPECT_THROW(Series::make(far, 5), SeriesError);
}

TEST(Series, CoefficientBeyondOrderThrows) {
  const Series s = one_minus_q(4);
  EXPECT_THROW(s.coefficient(4), OrderExceeded);
  try {
    s.coefficient(9);
  } catch (const OrderExceeded& e) {
    EXPECT_EQ(e.exponent, 9);
    EXPECT_EQ(e.order, 4);
  }
}

TEST(Series, InverseOfOneMinusQIsGeometric) {
  const Series g = invert(one_minus_q(10));
  EXPECT_EQ(coefficients(g, 0, 10), std::vector<long>(10, 1));
  EXPECT_EQ(g.order(), 10);
}

TEST(Series, InverseOfLaurentMonomial) {
  const Series q3 = Series::monomial(1, 3, 10);
  const Series inv = invert(q3);
  EXPECT_EQ(inv.valuation(), -3);
  EXPECT_EQ(inv.order(), 10 - 6);
  EXPECT_EQ(first_mismatch(inv * q3, Series::constant(1, 4)), std::nullopt);
  EXPECT_EQ((inv * q3).order(), 7);
}

TEST(Series, InvertRejectsNonUnit) {
  const std::pair<Exponent, Integer> terms[] = {{0, 2}, {1, 1}};
  EXPECT_THROW(invert(Series::make(terms, 5)), NonUnitLeadingCoefficient);
  EXPECT_THROW(invert(Series::zero(5)), SeriesError);
}

TEST(Series, ExactDivisionByNonUnitLeadingCoefficient) {
  // (2 + 2q) * (1 - q + 3q^2) / (2 + 2q)
  const std::pair<Exponent, Integer> b_terms[] = {{0, 2}, {1, 2}};
  const std::pair<Exponent, Integer> c_terms[] = {{0, 1}, {1, -1}, {2, 3}};
  const Series b = Series::make(b_terms, 12);
  const Series c = Series::make(c_terms, 12);
  EXPECT_EQ(divide(b * c, b), c);

  const std::pair<Exponent, Integer> odd[] = {{0, 1}};
  EXPECT_THROW(divide(Series::make(odd, 12), b), NonUnitLeadingCoefficient);
}

TEST(Series, OrderRules) {
  const Series a = Series::from_dense(2, {1, 1, 1}, 7);  // O(q^7)
  const Series b = Series::from_dense(0, {1, 3}, 10);    // O(q^10)
  EXPECT_EQ((a + b).order(), 7);
  // min(7 + 0, 10 + 2)
  EXPECT_EQ((a * b).order(), 7);
  EXPECT_EQ(substitute_power(b, 3).order(), 30);
  EXPECT_EQ(shift(a, -2).order(), 5);
  EXPECT_EQ(shift(a, -2).valuation(), 0);
}

TEST(Series, PowerMatchesRepeatedProduct) {
  const Series a = one_minus_q(20);
  Series cube = a * a * a;
  EXPECT_EQ(pow(a, 3), cube);
  EXPECT_EQ(pow(a, -3) * cube, Series::constant(1, 20));
  EXPECT_EQ(pow(a, 0), Series::constant(1, 20));
}

TEST(Series, SubstitutionAndNegation) {
  const Series a = Series::from_dense(0, {1, 2, 3}, 3);
  const Series s = substitute_power(a, 4);
  EXPECT_EQ(coefficients(s, 0, 12), (std::vector<long>{1, 0, 0, 0, 2, 0, 0, 0, 3, 0, 0, 0}));
  EXPECT_EQ(coefficients(negate_variable(a), 0, 3), (std::vector<long>{1, -2, 3}));
  EXPECT_THROW(substitute_power(a, 0), SeriesError);
}

TEST(Series, QDerivative) {
  const Series a = Series::from_dense(-1, {5, 1, 2, 3}, 3);
  EXPECT_EQ(coefficients(q_derivative(a), -1, 3), (std::vector<long>{-5, 0, 2, 6}));
}

TEST(Series, FirstMismatch) {
  const Series a = Series::from_dense(0, {1, 2, 3, 4}, 4);
  const Series b = Series::from_dense(0, {1, 2, 5, 4}, 4);
  EXPECT_EQ(first_mismatch(a, b), 2);
  EXPECT_EQ(first_mismatch(a, b, 2), std::nullopt);
  EXPECT_EQ(first_mismatch(a, a), std::nullopt);
}

TEST(SeriesProperty, RingAxioms) {
  SeriesGen gen(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const Series a = gen.series(-3, 5, 40);
    const Series b = gen.series(-3, 5, 40);
    const Series c = gen.series(-3, 5, 40);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(((a * b) * c).truncated(30), (a * (b * c)).truncated(30));
    const Series lhs = a * (b + c);
    const Series rhs = a * b + a * c;
    EXPECT_EQ(first_mismatch(lhs, rhs), std::nullopt);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a + Series::zero(a.order()), a);
    EXPECT_EQ(a * Series::constant(1, a.order() - a.valuation()), a);
  }
}

TEST(SeriesProperty, DivisionUndoesMultiplication) {
  SeriesGen gen(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Series u = gen.unit(50);
    const Series a = gen.series(-4, 4, 50);
    const Series prod = a * u;
    const Series back = divide(prod, u);
    EXPECT_EQ(first_mismatch(back, a), std::nullopt);
    EXPECT_GE(back.order(), std::min(a.order(), u.order() + a.valuation()));
    EXPECT_EQ(first_mismatch(invert(u) * u, Series::constant(1, u.order())), std::nullopt);
  }
}

TEST(SeriesProperty, SubstitutionIsARingMap) {
  SeriesGen gen(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Series a = gen.series(0, 3, 30);
    const Series b = gen.series(0, 3, 30);
    const std::int64_t m = gen.uniform(1, 5);
    EXPECT_EQ(substitute_power(a * b, m), substitute_power(a, m) * substitute_power(b, m));
    EXPECT_EQ(substitute_power(a + b, m), substitute_power(a, m) + substitute_power(b, m));
  }
}
