#include "qseries/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qseries/kernels.hpp"

namespace qseries {

OrderExceeded::OrderExceeded(Exponent n, Exponent ord)
    : SeriesError("coefficient of q^" + std::to_string(n) + " requested but series is only known below q^" +
                  std::to_string(ord)),
      exponent(n),
      order(ord) {}

DuplicateExponent::DuplicateExponent(Exponent n)
    : SeriesError("duplicate exponent " + std::to_string(n)), exponent(n) {}

Series Series::zero(Exponent order) {
  Series s;
  s.order_ = order;
  s.valuation_ = order;
  return s;
}

Series Series::constant(const Integer& c, Exponent order) { return monomial(c, 0, order); }

Series Series::monomial(const Integer& c, Exponent exponent, Exponent order) {
  if (exponent >= order || c == 0) return zero(order);
  std::vector<Integer> coeffs(static_cast<std::size_t>(order - exponent));
  coeffs[0] = c;
  return from_dense(exponent, std::move(coeffs), order);
}

Series Series::make(std::span<const std::pair<Exponent, Integer>> terms, Exponent order) {
  std::map<Exponent, Integer> sorted;
  for (const auto& [e, c] : terms) {
    if (e >= order) throw OrderExceeded(e, order);
    if (!sorted.emplace(e, c).second) throw DuplicateExponent(e);
  }
  if (sorted.empty()) return zero(order);
  const Exponent low = sorted.begin()->first;
  std::vector<Integer> coeffs(static_cast<std::size_t>(order - low));
  for (auto& [e, c] : sorted) coeffs[static_cast<std::size_t>(e - low)] = std::move(c);
  return from_dense(low, std::move(coeffs), order);
}

Series Series::from_dense(Exponent valuation, std::vector<Integer> coeffs, Exponent order) {
  const Exponent room = std::max<Exponent>(order - valuation, 0);
  if (static_cast<Exponent>(coeffs.size()) > room) coeffs.resize(static_cast<std::size_t>(room));
  const auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const Integer& c) { return sgn(c) != 0; });
  if (first == coeffs.end()) return zero(order);
  const auto skip = first - coeffs.begin();
  coeffs.erase(coeffs.begin(), first);
  coeffs.resize(static_cast<std::size_t>(room - skip));
  Series s;
  s.valuation_ = valuation + skip;
  s.order_ = order;
  s.coeffs_ = std::move(coeffs);
  return s;
}

Integer Series::coefficient(Exponent n) const {
  if (n >= order_) throw OrderExceeded(n, order_);
  if (is_zero() || n < valuation_) return 0;
  return coeffs_[static_cast<std::size_t>(n - valuation_)];
}

Series Series::truncated(Exponent new_order) const {
  if (new_order >= order_) return *this;
  if (is_zero()) return zero(new_order);
  return from_dense(valuation_, coeffs_, new_order);
}

namespace {

// Coefficients of s for exponents [low, high), zero filled.
std::vector<Integer> window(const Series& s, Exponent low, Exponent high) {
  std::vector<Integer> out(static_cast<std::size_t>(std::max<Exponent>(high - low, 0)));
  if (s.is_zero()) return out;
  const auto& c = s.coeffs();
  for (Exponent e = std::max(low, s.valuation()); e < high && e < s.order(); ++e) {
    out[static_cast<std::size_t>(e - low)] = c[static_cast<std::size_t>(e - s.valuation())];
  }
  return out;
}

template <typename Op>
Series combine(const Series& a, const Series& b, Op op) {
  const Exponent order = std::min(a.order(), b.order());
  const Exponent low = std::min(a.valuation(), b.valuation());
  if (low >= order) return Series::zero(order);
  auto ca = window(a, low, order);
  const auto cb = window(b, low, order);
  for (std::size_t i = 0; i < ca.size(); ++i) op(ca[i], cb[i]);
  return Series::from_dense(low, std::move(ca), order);
}

}  // namespace

Series operator+(const Series& a, const Series& b) {
  return combine(a, b, [](Integer& x, const Integer& y) { x += y; });
}

Series operator-(const Series& a, const Series& b) {
  return combine(a, b, [](Integer& x, const Integer& y) { x -= y; });
}

Series operator-(const Series& a) {
  Series r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series operator*(const Integer& c, const Series& a) {
  if (c == 0) return Series::zero(a.order());
  Series r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Series operator*(const Series& a, const Series& b) {
  const Exponent order = std::min(a.order() + b.valuation(), b.order() + a.valuation());
  const Exponent val = a.valuation() + b.valuation();
  if (a.is_zero() || b.is_zero()) return Series::zero(order);
  const std::size_t len = std::min(a.coeffs().size(), b.coeffs().size());
  std::vector<Integer> out(len);
  kernels::convolve(a.coeffs(), b.coeffs(), out);
  return Series::from_dense(val, std::move(out), order);
}

Series divide(const Series& a, const Series& b) {
  if (b.is_zero()) throw NonUnitLeadingCoefficient("division by a series with no known nonzero term");
  const Exponent vb = b.valuation();
  const Exponent order = std::min(a.order() - vb, b.order() - 2 * vb + a.valuation());
  if (a.is_zero()) return Series::zero(order);
  const Exponent val = a.valuation() - vb;
  const std::size_t len = static_cast<std::size_t>(std::max<Exponent>(order - val, 0));
  std::vector<Integer> out(len);
  const std::size_t bad = kernels::long_divide(a.coeffs(), b.coeffs(), out);
  if (bad != len) {
    std::ostringstream msg;
    msg << "quotient coefficient of q^" << (val + static_cast<Exponent>(bad))
        << " is not an integer (divisor leading coefficient " << b.leading_coefficient() << ")";
    throw NonUnitLeadingCoefficient(msg.str());
  }
  return Series::from_dense(val, std::move(out), order);
}

Series invert(const Series& a) {
  if (a.is_zero() || abs(a.leading_coefficient()) != 1) {
    std::ostringstream msg;
    msg << "cannot invert series with leading coefficient "
        << (a.is_zero() ? Integer(0) : a.leading_coefficient());
    throw NonUnitLeadingCoefficient(msg.str());
  }
  const Exponent v = a.valuation();
  return divide(Series::constant(1, a.order() - v), a);
}

Series pow(const Series& a, std::int64_t e) {
  Series base = e < 0 ? invert(a) : a;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  // The identity carries the base's relative precision so that q^0 costs nothing.
  Series result = Series::constant(1, base.order() - base.valuation());
  bool first = true;
  while (k > 0) {
    if (k & 1U) {
      result = first ? base : result * base;
      first = false;
    }
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Series substitute_power(const Series& a, std::int64_t m) {
  if (m < 1) throw SeriesError("substitute_power needs m >= 1");
  if (m == 1) return a;
  const Exponent order = a.order() * m;
  if (a.is_zero()) return Series::zero(order);
  std::vector<Integer> out(static_cast<std::size_t>(order - a.valuation() * m));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i * static_cast<std::size_t>(m)] = a.coeffs()[i];
  return Series::from_dense(a.valuation() * m, std::move(out), order);
}

Series negate_variable(const Series& a) {
  if (a.is_zero()) return a;
  auto coeffs = a.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Exponent e = a.valuation() + static_cast<Exponent>(i);
    if (e % 2 != 0) coeffs[i] = -coeffs[i];
  }
  return Series::from_dense(a.valuation(), std::move(coeffs), a.order());
}

Series shift(const Series& a, Exponent k) {
  if (a.is_zero()) return Series::zero(a.order() + k);
  return Series::from_dense(a.valuation() + k, a.coeffs(), a.order() + k);
}

Series q_derivative(const Series& a) {
  if (a.is_zero()) return a;
  auto coeffs = a.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] *= a.valuation() + static_cast<Exponent>(i);
  return Series::from_dense(a.valuation(), std::move(coeffs), a.order());
}

std::optional<Exponent> first_mismatch(const Series& a, const Series& b, std::optional<Exponent> limit) {
  Exponent high = std::min(a.order(), b.order());
  if (limit) high = std::min(high, *limit);
  for (Exponent e = std::min(a.valuation(), b.valuation()); e < high; ++e) {
    if (a.coefficient(e) != b.coefficient(e)) return e;
  }
  return std::nullopt;
}

std::string to_string(const Series& a, std::size_t max_terms) {
  std::ostringstream out;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < a.coeffs().size() && shown < max_terms; ++i) {
    const Integer& c = a.coeffs()[i];
    if (c == 0) continue;
    const Exponent e = a.valuation() + static_cast<Exponent>(i);
    out << (sgn(c) < 0 ? (shown == 0 ? "-" : " - ") : (shown == 0 ? "" : " + "));
    const Integer mag = abs(c);
    if (mag != 1 || e == 0) out << mag;
    if (e != 0) {
      if (mag != 1) out << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
    ++shown;
  }
  if (shown == 0) out << "0";
  out << " + O(q^" << a.order() << ")";
  return out.str();
}

}  // namespace qseries
