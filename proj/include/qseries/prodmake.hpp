#ifndef QSERIES_PRODMAKE_HPP
#define QSERIES_PRODMAKE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qseries/qproducts.hpp"
#include "qseries/series.hpp"

namespace qseries {

class NonIntegralExponent : public SeriesError {
 public:
  explicit NonIntegralExponent(std::int64_t n);
  std::int64_t n;
};

/// The recovered exponent no longer fits in 64 bits, which happens for
/// series far from any product form (e.g. 1 + 2q).
class ExponentOverflow : public SeriesError {
 public:
  explicit ExponentOverflow(std::int64_t n);
  std::int64_t n;
};

class NotUnit : public SeriesError {
 public:
  explicit NotUnit(const std::string& what) : SeriesError(what) {}
};

/// a_n depends only on n mod `modulus` for modulus <= n < order.
struct PeriodView {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> pattern;  // pattern[r], r in [0, modulus)
  /// (n, a_n) for n < modulus where a_n disagrees with the pattern.
  std::vector<std::pair<std::int64_t, std::int64_t>> leading_exceptions;
};

/// f = prod_{n>=1} (1 - q^n)^{a_n} to order `order`.
struct EtaExponents {
  Exponent order = 0;
  std::vector<std::int64_t> exponents;  // exponents[n] for 1 <= n < order; [0] unused
  std::optional<PeriodView> period_view;
};

/// Recovers the exponents of f = prod (1 - q^n)^{a_n} from the logarithmic
/// derivative: with t_n the coefficient of q^n in -q f'/f,
/// t_n = sum_{d | n} d a_d. Every division by n must be exact.
/// The result is re-expanded and compared with f before returning.
///
/// Throws NotUnit unless f has valuation 0 and constant term +1, and
/// NonIntegralExponent(n) when the recurrence leaves the integers at n.
EtaExponents prodmake(const Series& f, Exponent order);

/// Residue pattern with period M, if a_n is M-periodic on [M, order).
/// Requires order >= 3M.
std::optional<PeriodView> detect_period(const EtaExponents& e, std::int64_t modulus);

/// (q^r; q^M)^{pattern[r]} with r = 0 written as offset M.
QProduct to_qproduct(const PeriodView& view);

/// Rewrites a period-2M pattern as a product of (q^j; q^M) and (-q^j; q^M)
/// factors, j in [1, M]. Uses (-x; y) = (x^2; y^2) / (x; y), which makes the
/// decomposition unique. Requires M odd so residues j and j+M differ in parity.
QProduct signed_grouping(const PeriodView& view_2m, std::int64_t base);

/// detect_period(2M) followed by signed_grouping, for products over (+-q^j; q^M).
std::optional<QProduct> detect_signed_product(const EtaExponents& e, std::int64_t base);

/// One slice of an m-dissection read back as scalar * q^prefactor * product.
struct TermGuess {
  std::int64_t residue = 0;
  bool vanishes = false;  // slice identically zero to the available order
  Exponent prefactor_exponent = 0;
  Integer scalar;
  EtaExponents exponents;  // of the normalized term in the original variable
  std::optional<QProduct> product;
};

/// The conjecturing workflow for dissections: split f into m slices, strip
/// each slice's leading monomial, move it back to q^m and run prodmake and
/// period detection with period `period`. With `signed_base` set, looks for
/// (+-q^j; q^base) factors instead.
std::vector<TermGuess> conjecture_dissection(const Series& f, std::int64_t m, std::int64_t period,
                                             bool signed_base = false);

}  // namespace qseries

#endif  // QSERIES_PRODMAKE_HPP
