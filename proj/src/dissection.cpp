#include "qseries/dissection.hpp"

#include <algorithm>

namespace qseries {

namespace {

Exponent ceil_div(Exponent a, Exponent b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

Exponent floor_mod(Exponent a, Exponent m) { return ((a % m) + m) % m; }

}  // namespace

Dissection dissect(const Series& f, std::int64_t m) {
  if (m < 1) throw SeriesError("dissection modulus must be positive");
  if (!f.is_zero() && f.valuation() < 0) throw NegativeValuation();
  Dissection d;
  d.modulus = m;
  d.source_order = f.order();
  for (std::int64_t l = 0; l < m; ++l) {
    const Exponent slice_order = std::max<Exponent>(ceil_div(f.order() - l, m), 0);
    std::vector<Integer> c(static_cast<std::size_t>(slice_order));
    for (Exponent n = 0; n < slice_order; ++n) c[n] = f.coefficient(m * n + l);
    d.slices.push_back(Series::from_dense(0, std::move(c), slice_order));
  }
  return d;
}

Series recombine(const Dissection& d) {
  Series out = Series::zero(d.source_order);
  for (std::int64_t l = 0; l < static_cast<std::int64_t>(d.slices.size()); ++l) {
    out = out + shift(substitute_power(d.slices[l], d.modulus), l);
  }
  return out.truncated(d.source_order);
}

bool SupportReport::pass() const {
  return std::all_of(terms.begin(), terms.end(), [](const TermSupport& t) { return t.pass; });
}

SupportReport slice_support_check(std::span<const Series> terms, std::int64_t m,
                                  std::span<const std::optional<std::int64_t>> expected) {
  SupportReport report;
  report.modulus = m;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Series& t = terms[i];
    TermSupport ts;
    ts.term = i;
    if (i < expected.size()) ts.expected_residue = expected[i];
    if (!t.is_zero()) {
      const std::int64_t r = floor_mod(t.valuation(), m);
      ts.residue = r;
      for (std::size_t k = 0; k < t.coeffs().size(); ++k) {
        const Exponent e = t.valuation() + static_cast<Exponent>(k);
        if (sgn(t.coeffs()[k]) != 0 && floor_mod(e, m) != r) {
          ts.pass = false;
          ts.first_violation = e;
          break;
        }
      }
    }
    if (ts.expected_residue && ts.residue != ts.expected_residue) ts.pass = false;
    report.terms.push_back(ts);
  }
  return report;
}

}  // namespace qseries
