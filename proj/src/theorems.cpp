#include "qseries/theorems.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>

#include "qseries/expr.hpp"

namespace qseries {

namespace {

// Matrix notation with a shared base; a negative entry -j stands for -q^j.
QProduct jp(std::initializer_list<int> numerator, std::initializer_list<int> denominator, std::int64_t base) {
  QProduct p;
  for (int j : numerator) p.factors.push_back({j < 0 ? -1 : +1, std::abs(j), base, +1});
  for (int j : denominator) p.factors.push_back({j < 0 ? -1 : +1, std::abs(j), base, -1});
  return p;
}

// (q^125;q^125) / (q^5;q^5) times the given product.
QProduct with_common_factor(QProduct p) {
  p.factors.insert(p.factors.begin(), {{+1, 125, 125, 1}, {+1, 5, 5, -1}});
  return p;
}

std::vector<DissectionTheorem> build() {
  std::vector<DissectionTheorem> out;

  out.push_back({"hir-R", "R(q)", 5, 125, false,
                 {
                     {0, 1, with_common_factor(jp({30, 95}, {15, 110}, 125))},
                     {1, -1, with_common_factor(jp({20, 105}, {10, 115}, 125))},
                     {2, 1, with_common_factor(jp({55, 70}, {35, 90}, 125))},
                     {18, -1, with_common_factor(jp({5, 120}, {60, 65}, 125))},
                     {4, -1, with_common_factor(jp({45, 80}, {40, 85}, 125))},
                 }});

  out.push_back({"hir-Rinv", "Rinv(q)", 5, 125, false,
                 {
                     {0, 1, with_common_factor(jp({40, 85}, {20, 105}, 125))},
                     {1, 1, with_common_factor(jp({60, 65}, {30, 95}, 125))},
                     {7, -1, with_common_factor(jp({35, 90}, {45, 80}, 125))},
                     {3, -1, with_common_factor(jp({10, 115}, {5, 120}, 125))},
                     {14, -1, with_common_factor(jp({15, 110}, {55, 70}, 125))},
                 }});

  out.push_back({"5-dis-3", "R(q)*R(q^2)^2", 5, 50, false,
                 {
                     {0, 1, jp({5, 5, 25, 25, 25, 25, 45, 45}, {10, 10, 10, 20, 30, 40, 40, 40}, 50)},
                     {1, -1, jp({5, 5, 15, 25, 25, 35, 45, 45}, {10, 10, 10, 20, 30, 40, 40, 40}, 50)},
                     {2, -1, jp({5, 15, 15, 25, 25, 35, 35, 45}, {10, 20, 20, 20, 30, 30, 30, 40}, 50)},
                     {3, 2, jp({5, 5, 15, 25, 25, 35, 45, 45}, {10, 10, 20, 20, 30, 30, 40, 40}, 50)},
                     {9, 1, jp({5, 5, 5, 15, 35, 45, 45, 45}, {10, 20, 20, 20, 30, 30, 30, 40}, 50)},
                 }});

  out.push_back({"5-dis-4", "1/(R(q)*R(q^2)^2)", 5, 50, false,
                 {
                     {0, 1, jp({15, 15, 25, 25, 25, 25, 35, 35}, {10, 20, 20, 20, 30, 30, 30, 40}, 50)},
                     {1, 1, jp({5, 15, 15, 15, 35, 35, 35, 45}, {10, 10, 10, 20, 30, 40, 40, 40}, 50)},
                     {2, 2, jp({5, 15, 15, 25, 25, 35, 35, 45}, {10, 10, 20, 20, 30, 30, 40, 40}, 50)},
                     {3, 1, jp({5, 5, 15, 25, 25, 35, 45, 45}, {10, 10, 10, 20, 30, 40, 40, 40}, 50)},
                     {4, 1, jp({5, 15, 15, 25, 25, 35, 35, 45}, {10, 20, 20, 20, 30, 30, 30, 40}, 50)},
                 }});

  out.push_back({"5-dis-2", "R(q)^2/R(q^2)", 5, 25, true,
                 {
                     {0, 1, jp({-5, -10, -10, -10, -15, -15, -15, -20}, {5, 10, 10, 10, 15, 15, 15, 20}, 25)},
                     {1, -2, jp({-5, -10, -10, -15, -15, -20, -25, -25}, {5, 5, 5, 10, 15, 20, 20, 20}, 25)},
                     {2, 4, jp({-5, -10, -10, -15, -15, -20, -25, -25}, {5, 5, 10, 10, 15, 15, 20, 20}, 25)},
                     {3, -4, jp({-10, -10, -15, -15, -25, -25, -25, -25}, {5, 5, 5, 10, 15, 20, 20, 20}, 25)},
                     {4, 2, jp({-5, -5, -10, -15, -20, -20, -25, -25}, {5, 10, 10, 10, 15, 15, 15, 20}, 25)},
                 }});

  out.push_back({"5-dis-1", "R(q^2)/R(q)^2", 5, 25, true,
                 {
                     {0, 1, jp({-5, -5, -5, -10, -15, -20, -20, -20}, {5, 5, 5, 10, 15, 20, 20, 20}, 25)},
                     {1, 2, jp({-5, -10, -10, -15, -15, -20, -25, -25}, {5, 5, 5, 10, 15, 20, 20, 20}, 25)},
                     {7, -4, jp({-5, -5, -20, -20, -25, -25, -25, -25}, {5, 10, 10, 10, 15, 15, 15, 20}, 25)},
                     {3, -4, jp({-5, -5, -10, -15, -20, -20, -25, -25}, {5, 5, 10, 10, 15, 15, 20, 20}, 25)},
                     {4, -2, jp({-5, -5, -10, -15, -20, -20, -25, -25}, {5, 10, 10, 10, 15, 15, 15, 20}, 25)},
                 }});
  return out;
}

}  // namespace

const std::vector<DissectionTheorem>& dissection_theorems() {
  static const std::vector<DissectionTheorem> theorems = build();
  return theorems;
}

const DissectionTheorem* find_theorem(std::string_view id) {
  const auto& all = dissection_theorems();
  const auto it = std::find_if(all.begin(), all.end(), [&](const auto& t) { return t.id == id; });
  return it == all.end() ? nullptr : &*it;
}

Series expand_term(const DissectionTerm& t, Exponent order) {
  const Exponent inner = std::max<Exponent>(order - t.prefactor, 1);
  return Integer(t.scalar) * shift(product_expand(t.product, inner), t.prefactor).truncated(order);
}

TheoremCheck check_dissection_theorem(const DissectionTheorem& th, Exponent order) {
  std::vector<Series> terms;
  std::vector<std::optional<std::int64_t>> expected;
  for (const auto& t : th.terms) {
    terms.push_back(expand_term(t, order));
    expected.emplace_back(t.prefactor % th.modulus);
  }

  TheoremCheck check;
  check.support = slice_support_check(terms, th.modulus, expected);
  std::set<std::int64_t> residues;
  for (const auto& ts : check.support.terms) {
    if (ts.residue) residues.insert(*ts.residue);
  }
  check.residues_distinct = static_cast<std::int64_t>(residues.size()) == th.modulus &&
                            static_cast<std::int64_t>(terms.size()) == th.modulus;
  if (!check.support.pass() || !check.residues_distinct) return check;

  // Each term is its own slice: slice l of the term on residue l.
  Dissection d;
  d.modulus = th.modulus;
  d.source_order = order;
  d.slices.resize(static_cast<std::size_t>(th.modulus));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto r = *check.support.terms[i].residue;
    d.slices[r] = dissect(terms[i], th.modulus).slices[r];
  }
  const Series target = evaluate(th.target, order);
  check.mismatch = first_mismatch(recombine(d), target, order);
  check.recombine_pass = !check.mismatch && target.order() >= order;
  return check;
}

}  // namespace qseries
