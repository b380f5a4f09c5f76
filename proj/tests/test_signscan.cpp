#include <gtest/gtest.h>

#include "qseries/expr.hpp"
#include "qseries/signscan.hpp"
#include "qseries/theorems.hpp"

using namespace qseries;

namespace {

SignRule alpha_exchanged() {
  SignRule r = expected_rule(SignedSequence::alpha);
  r.positive = {0, 3, 6, 7, 9};
  r.negative = {1, 2, 4, 5, 8};
  return r;
}

}  // namespace

TEST(SignScan, BetaGammaDeltaFollowTheirRules) {
  for (auto s : {SignedSequence::beta, SignedSequence::gamma, SignedSequence::delta}) {
    const SignReport r = scan(s, expected_rule(s), 1000);
    EXPECT_TRUE(r.pass()) << name_of(s) << " first violation at " << (r.violations.empty() ? -1 : r.violations[0].n);
  }
}

TEST(SignScan, ZeroSets) {
  EXPECT_EQ(scan(SignedSequence::alpha, alpha_exchanged(), 1000).zeros, (std::vector<Exponent>{4}));
  EXPECT_EQ(scan(SignedSequence::beta, expected_rule(SignedSequence::beta), 1000).zeros, (std::vector<Exponent>{5}));
  EXPECT_TRUE(scan(SignedSequence::gamma, expected_rule(SignedSequence::gamma), 1000).zeros.empty());
  EXPECT_EQ(scan(SignedSequence::delta, expected_rule(SignedSequence::delta), 1000).zeros, (std::vector<Exponent>{2}));
}

TEST(SignScan, AlphaResiduesFourAndNineAreExchanged) {
  const SignReport stated = scan(SignedSequence::alpha, expected_rule(SignedSequence::alpha), 1000);
  ASSERT_FALSE(stated.pass());
  EXPECT_EQ(stated.violations.front().n, 9);
  for (const auto& v : stated.violations) {
    EXPECT_TRUE(v.n % 10 == 4 || v.n % 10 == 9) << v.n;
    EXPECT_NE(sgn(v.value), 0);
  }
  EXPECT_TRUE(scan(SignedSequence::alpha, alpha_exchanged(), 1000).pass());
}

TEST(SignScan, DetectsWrongRules) {
  SignRule swapped = expected_rule(SignedSequence::gamma);
  std::swap(swapped.positive, swapped.negative);
  const SignReport r = scan(SignedSequence::gamma, swapped, 50);
  ASSERT_GE(r.violations.size(), 2u);
  EXPECT_EQ(r.violations[0].n, 0);
  EXPECT_EQ(r.violations[1].n, 1);

  const Series d = evaluate(sequence_expression(SignedSequence::delta), 10);
  EXPECT_EQ(d.coefficient(2), 0);
  EXPECT_LT(d.coefficient(7), 0);
}

TEST(SignScan, RuleValidation) {
  EXPECT_THROW((SignRule{5, {0, 1, 2}, {2, 3, 4}, {}}.validate()), SeriesError);
  EXPECT_THROW((SignRule{5, {0, 1}, {3, 4}, {}}.validate()), SeriesError);
  EXPECT_THROW((SignRule{0, {}, {}, {}}.validate()), SeriesError);
  EXPECT_NO_THROW(expected_rule(SignedSequence::alpha).validate());
  EXPECT_EQ(expected_rule(SignedSequence::delta).expected_sign(2), 0);
  EXPECT_EQ(expected_rule(SignedSequence::delta).expected_sign(7), -1);
}

TEST(SignScan, NeedsEnoughCoefficients) {
  const Series f = evaluate("R(q)", 20);
  EXPECT_THROW(scan(f, expected_rule(SignedSequence::gamma), 30), OrderExceeded);
  EXPECT_THROW(scan(evaluate("1/q", 5), expected_rule(SignedSequence::gamma), 3), SeriesError);
}

TEST(SignScan, ReportJson) {
  const auto j = to_json(scan(SignedSequence::delta, expected_rule(SignedSequence::delta), 100));
  EXPECT_EQ(j.at("pass"), true);
  EXPECT_EQ(j.at("zeros"), nlohmann::json::array({2}));
  EXPECT_EQ(sequence_from_name("gamma"), SignedSequence::gamma);
  EXPECT_FALSE(sequence_from_name("omega").has_value());
}

// Each dissection term is a single sign class; its leading sign must match
// the rule on the residue it occupies.
TEST(SignScan, DissectionScalarsAgreeWithRules) {
  const std::pair<std::string, SignedSequence> pairs[] = {{"5-dis-3", SignedSequence::alpha},
                                                          {"5-dis-4", SignedSequence::beta},
                                                          {"5-dis-2", SignedSequence::gamma},
                                                          {"5-dis-1", SignedSequence::delta}};
  for (const auto& [id, seq] : pairs) {
    const DissectionTheorem* th = find_theorem(id);
    ASSERT_NE(th, nullptr) << id;
    const Series f = evaluate(sequence_expression(seq), 200);
    for (const auto& t : th->terms) {
      const Series term = expand_term(t, 200);
      EXPECT_EQ(sgn(f.coefficient(t.prefactor)), sgn(term.coefficient(t.prefactor))) << id << " " << t.prefactor;
    }
  }
}
