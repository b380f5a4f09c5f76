#ifndef QSERIES_SERIES_HPP
#define QSERIES_SERIES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qseries {

using Integer = mpz_class;
using Exponent = std::int64_t;

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a division would need non-integer coefficients.
class NonUnitLeadingCoefficient : public SeriesError {
 public:
  explicit NonUnitLeadingCoefficient(const std::string& what) : SeriesError(what) {}
};

class OrderExceeded : public SeriesError {
 public:
  OrderExceeded(Exponent n, Exponent order);
  Exponent exponent;
  Exponent order;
};

class DuplicateExponent : public SeriesError {
 public:
  explicit DuplicateExponent(Exponent n);
  Exponent exponent;
};

/// Truncated Laurent series with arbitrary-precision integer coefficients.
///
/// A series knows its coefficients for every exponent below `order()`.
/// Storage is dense from the valuation up to `order() - 1`, and the first
/// stored coefficient is always nonzero. The zero series stores nothing and
/// reports `valuation() == order()`, i.e. "nothing nonzero is known below
/// the order", which makes the product order rule work unchanged for it.
///
/// Values are immutable once built; every operation returns a new series
/// whose order never exceeds what the operands guarantee.
class Series {
 public:
  Series() = default;

  static Series zero(Exponent order);
  static Series constant(const Integer& c, Exponent order);
  static Series monomial(const Integer& c, Exponent exponent, Exponent order);

  /// Builds from sparse (exponent, coefficient) pairs. Every exponent must be
  /// below `order`; repeated exponents throw DuplicateExponent.
  static Series make(std::span<const std::pair<Exponent, Integer>> terms, Exponent order);

  /// Builds from a dense block starting at `valuation`. Coefficients at or
  /// beyond `order` are dropped; leading zeros are stripped.
  static Series from_dense(Exponent valuation, std::vector<Integer> coeffs, Exponent order);

  Exponent valuation() const { return is_zero() ? order_ : valuation_; }
  Exponent order() const { return order_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Dense coefficients for exponents valuation() .. order()-1.
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  /// Exact coefficient of q^n. Throws OrderExceeded for n >= order().
  Integer coefficient(Exponent n) const;

  /// Coefficient of the lowest nonzero term. Precondition: !is_zero().
  const Integer& leading_coefficient() const { return coeffs_.front(); }

  /// Same series, trusted only below min(order(), new_order).
  Series truncated(Exponent new_order) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator-(const Series& a);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Integer& c, const Series& a);

  bool operator==(const Series& other) const = default;

 private:
  Exponent valuation_ = 0;
  Exponent order_ = 0;
  std::vector<Integer> coeffs_;
};

/// Two-sided inverse to working order. Requires a leading coefficient of +1
/// or -1; the result has valuation -a.valuation().
Series invert(const Series& a);

/// Exact quotient a / b. The leading coefficient of b may be any nonzero
/// integer as long as every quotient coefficient comes out integral;
/// otherwise NonUnitLeadingCoefficient is thrown naming the first bad
/// exponent. Order follows the same rule as a * invert(b).
Series divide(const Series& a, const Series& b);

/// a^e by repeated squaring; negative e inverts first.
Series pow(const Series& a, std::int64_t e);

/// q -> q^m for m >= 1.
Series substitute_power(const Series& a, std::int64_t m);

/// q -> -q.
Series negate_variable(const Series& a);

/// Multiply by q^k.
Series shift(const Series& a, Exponent k);

/// q d/dq.
Series q_derivative(const Series& a);

/// First exponent below min(a.order(), b.order(), limit) where a and b
/// differ, if any.
std::optional<Exponent> first_mismatch(const Series& a, const Series& b,
                                       std::optional<Exponent> limit = std::nullopt);

std::string to_string(const Series& a, std::size_t max_terms = 12);

}  // namespace qseries

#endif  // QSERIES_SERIES_HPP
