#ifndef QSERIES_THEOREMS_HPP
#define QSERIES_THEOREMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/dissection.hpp"
#include "qseries/qproducts.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// scalar * q^prefactor * product
struct DissectionTerm {
  Exponent prefactor = 0;
  std::int64_t scalar = 1;
  QProduct product;
};

/// A 5-dissection stated term by term. `period` is the modulus of the
/// q-products (50, 25 or 125); `signed_factors` marks products written with
/// (-q^j; q^period) entries.
struct DissectionTheorem {
  std::string id;
  std::string target;  // expression-language text
  std::int64_t modulus = 5;
  std::int64_t period = 50;
  bool signed_factors = false;
  std::vector<DissectionTerm> terms;
};

/// The dissections of R(q), 1/R(q), R(q)R(q^2)^2, its reciprocal,
/// R(q)^2/R(q^2) and its reciprocal. Ids match the registry.
const std::vector<DissectionTheorem>& dissection_theorems();
const DissectionTheorem* find_theorem(std::string_view id);

Series expand_term(const DissectionTerm& t, Exponent order);

struct TheoremCheck {
  SupportReport support;  // each term on the residue of its prefactor
  bool residues_distinct = false;
  bool recombine_pass = false;
  std::optional<Exponent> mismatch;
  bool pass() const { return support.pass() && residues_distinct && recombine_pass; }
};

/// Expands each term, checks it occupies one residue class mod `modulus`,
/// assembles the slices into a Dissection and compares the recombined series
/// with the target.
TheoremCheck check_dissection_theorem(const DissectionTheorem& th, Exponent order);

}  // namespace qseries

#endif  // QSERIES_THEOREMS_HPP
