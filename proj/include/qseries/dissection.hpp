#ifndef QSERIES_DISSECTION_HPP
#define QSERIES_DISSECTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

class NegativeValuation : public SeriesError {
 public:
  NegativeValuation() : SeriesError("m-dissection of a series with negative valuation is not defined") {}
};

/// f(q) = sum_l q^l * slices[l](q^m).
struct Dissection {
  std::int64_t modulus = 1;
  std::vector<Series> slices;
  Exponent source_order = 0;
};

Dissection dissect(const Series& f, std::int64_t m);
Series recombine(const Dissection& d);

/// Outcome of checking that one term lives on a single residue class mod m.
struct TermSupport {
  std::size_t term = 0;
  std::optional<std::int64_t> residue;           // class of the lowest nonzero exponent
  std::optional<std::int64_t> expected_residue;  // from the caller, if given
  bool pass = true;
  std::optional<Exponent> first_violation;  // first exponent off the class
};

struct SupportReport {
  std::int64_t modulus = 1;
  std::vector<TermSupport> terms;
  bool pass() const;
};

/// Checks each term is supported on one residue class mod m and, where
/// `expected` names one for a term index, that it is that class.
SupportReport slice_support_check(std::span<const Series> terms, std::int64_t m,
                                  std::span<const std::optional<std::int64_t>> expected = {});

}  // namespace qseries

#endif  // QSERIES_DISSECTION_HPP
