#ifndef QSERIES_SIGNSCAN_HPP
#define QSERIES_SIGNSCAN_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qseries/series.hpp"

namespace qseries {

/// Expected strict sign of a(n) by n mod modulus, with listed exceptional
/// indices whose coefficient must be exactly zero.
struct SignRule {
  std::int64_t modulus = 1;
  std::set<std::int64_t> positive;
  std::set<std::int64_t> negative;
  std::set<Exponent> zeros;

  /// Residue sets must partition [0, modulus).
  void validate() const;
  /// +1, -1 or 0 (exception) for index n.
  int expected_sign(Exponent n) const;
};

enum class SignedSequence { alpha, beta, gamma, delta };

std::optional<SignedSequence> sequence_from_name(std::string_view name);
std::string_view name_of(SignedSequence s);

/// Generating function of the sequence, in expression-language syntax.
std::string_view sequence_expression(SignedSequence s);

/// The sign pattern claimed for each sequence.
SignRule expected_rule(SignedSequence s);

struct SignViolation {
  Exponent n = 0;
  Integer value;
  int expected = 0;
};

struct SignReport {
  std::string sequence;
  Exponent order = 0;
  std::vector<SignViolation> violations;
  std::vector<Exponent> zeros;  // every n with a(n) == 0
  bool pass() const { return violations.empty(); }
};

/// Checks a(n) for 0 <= n < order against the rule. Requires f to be known
/// below `order` and to have nonnegative valuation.
SignReport scan(const Series& f, const SignRule& rule, Exponent order, std::string name = {});
SignReport scan(SignedSequence s, const SignRule& rule, Exponent order);

nlohmann::json to_json(const SignReport& r);

}  // namespace qseries

#endif  // QSERIES_SIGNSCAN_HPP
