#ifndef QSERIES_QPRODUCTS_HPP
#define QSERIES_QPRODUCTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

class InvalidFactor : public SeriesError {
 public:
  explicit InvalidFactor(const std::string& what) : SeriesError(what) {}
};

/// (sign * q^offset; q^modulus)_inf raised to `power`.
struct PochFactor {
  int sign = +1;
  std::int64_t offset = 1;
  std::int64_t modulus = 1;
  std::int64_t power = 1;

  /// Rejects offset 0 (the factor would be 0 or 2) and modulus < 1.
  void validate() const;
  bool operator==(const PochFactor&) const = default;
};

struct QProduct {
  std::vector<PochFactor> factors;

  /// Net exponent per distinct (sign, offset, modulus). Two products with the
  /// same aggregate are the same function.
  std::map<std::tuple<int, std::int64_t, std::int64_t>, std::int64_t> aggregate() const;

  /// The matrix notation: numerator entries over denominator entries with a
  /// shared base. Offsets are listed once per unit of power.
  static QProduct from_lists(const std::vector<std::pair<int, std::int64_t>>& numerator,
                             const std::vector<std::pair<int, std::int64_t>>& denominator, std::int64_t base);
};

std::string to_string(const QProduct& p);

Series poch_expand(const PochFactor& f, Exponent order);
Series product_expand(const QProduct& p, Exponent order);

/// (q^m; q^m)_inf.
Series euler(std::int64_t m, Exponent order);

/// Product over n >= 1 of (1 - q^n)^exponents[n]; exponents[0] is ignored.
Series eta_expand(const std::vector<std::int64_t>& exponents, Exponent order);

// Rogers-Ramanujan functions. The product sides go through product_expand;
// the sum sides are computed independently from sum q^{n^2+an}/(q;q)_n.
Series G_product(Exponent order);
Series H_product(Exponent order);
Series G_sum(Exponent order);
Series H_sum(Exponent order);

/// Rogers-Ramanujan continued fraction without the q^{1/5}: H/G.
Series R(Exponent order);
Series R_inv(Exponent order);

/// phi(sign*q) = sum over all integers n of (sign*q)^{n^2}.
Series phi(int sign, Exponent order);
/// (q^2;q^2)^5 / ((q;q)^2 (q^4;q^4)^2), evaluated at sign*q.
Series phi_product(int sign, Exponent order);
/// psi(q) = sum_{n>=0} q^{n(n+1)/2}.
Series psi(Exponent order);
/// (q^2;q^2)^2 / (q;q).
Series psi_product(Exponent order);

/// Ramanujan's parameter q R(q) R(q^2)^2.
Series ramanujan_k(Exponent order);

}  // namespace qseries

#endif  // QSERIES_QPRODUCTS_HPP
