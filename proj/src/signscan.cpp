#include "qseries/signscan.hpp"

#include "qseries/expr.hpp"

namespace qseries {

void SignRule::validate() const {
  if (modulus < 1) throw SeriesError("sign rule modulus must be positive");
  for (std::int64_t r = 0; r < modulus; ++r) {
    if (positive.contains(r) == negative.contains(r)) {
      throw SeriesError("residue " + std::to_string(r) + " must be in exactly one of the sign classes");
    }
  }
  for (auto r : positive) {
    if (r < 0 || r >= modulus) throw SeriesError("residue out of range");
  }
  for (auto r : negative) {
    if (r < 0 || r >= modulus) throw SeriesError("residue out of range");
  }
}

int SignRule::expected_sign(Exponent n) const {
  if (zeros.contains(n)) return 0;
  return positive.contains(((n % modulus) + modulus) % modulus) ? +1 : -1;
}

std::optional<SignedSequence> sequence_from_name(std::string_view name) {
  if (name == "alpha") return SignedSequence::alpha;
  if (name == "beta") return SignedSequence::beta;
  if (name == "gamma") return SignedSequence::gamma;
  if (name == "delta") return SignedSequence::delta;
  return std::nullopt;
}

std::string_view name_of(SignedSequence s) {
  switch (s) {
    case SignedSequence::alpha: return "alpha";
    case SignedSequence::beta: return "beta";
    case SignedSequence::gamma: return "gamma";
    case SignedSequence::delta: return "delta";
  }
  return "?";
}

std::string_view sequence_expression(SignedSequence s) {
  switch (s) {
    case SignedSequence::alpha: return "R(q)*R(q^2)^2";
    case SignedSequence::beta: return "1/(R(q)*R(q^2)^2)";
    case SignedSequence::gamma: return "R(q)^2/R(q^2)";
    case SignedSequence::delta: return "R(q^2)/R(q)^2";
  }
  return "";
}

SignRule expected_rule(SignedSequence s) {
  switch (s) {
    case SignedSequence::alpha: return {10, {0, 3, 4, 6, 7}, {1, 2, 5, 8, 9}, {4}};
    case SignedSequence::beta: return {10, {0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}, {5}};
    case SignedSequence::gamma: return {5, {0, 2, 4}, {1, 3}, {}};
    case SignedSequence::delta: return {5, {0, 1}, {2, 3, 4}, {2}};
  }
  return {};
}

SignReport scan(const Series& f, const SignRule& rule, Exponent order, std::string name) {
  rule.validate();
  if (f.order() < order) throw OrderExceeded(order - 1, f.order());
  if (!f.is_zero() && f.valuation() < 0) throw SeriesError("sign scan needs a power series");
  SignReport report;
  report.sequence = std::move(name);
  report.order = order;
  for (Exponent n = 0; n < order; ++n) {
    const Integer c = f.coefficient(n);
    const int actual = sgn(c) > 0 ? 1 : (sgn(c) < 0 ? -1 : 0);
    if (actual == 0) report.zeros.push_back(n);
    const int expected = rule.expected_sign(n);
    if (actual != expected) report.violations.push_back({n, c, expected});
  }
  return report;
}

SignReport scan(SignedSequence s, const SignRule& rule, Exponent order) {
  const Series f = evaluate(sequence_expression(s), order);
  return scan(f, rule, order, std::string(name_of(s)));
}

nlohmann::json to_json(const SignReport& r) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : r.violations) v.push_back({{"n", x.n}, {"value", x.value.get_str()}, {"expected", x.expected}});
  return {{"sequence", r.sequence}, {"order", r.order}, {"pass", r.pass()}, {"zeros", r.zeros}, {"violations", v}};
}

}  // namespace qseries
