#include "qseries/json.hpp"

namespace qseries {

nlohmann::json to_json(const Series& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  return {{"valuation", s.valuation()}, {"order", s.order()}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const Dissection& d) {
  nlohmann::json slices = nlohmann::json::array();
  for (std::size_t l = 0; l < d.slices.size(); ++l) {
    auto j = to_json(d.slices[l]);
    j["residue"] = l;
    slices.push_back(std::move(j));
  }
  return {{"modulus", d.modulus}, {"source_order", d.source_order}, {"slices", slices}};
}

nlohmann::json to_json(const SupportReport& r) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : r.terms) {
    nlohmann::json j{{"term", t.term}, {"pass", t.pass}};
    j["residue"] = t.residue ? nlohmann::json(*t.residue) : nlohmann::json(nullptr);
    if (t.expected_residue) j["expected_residue"] = *t.expected_residue;
    if (t.first_violation) j["first_violation"] = *t.first_violation;
    terms.push_back(std::move(j));
  }
  return {{"modulus", r.modulus}, {"pass", r.pass()}, {"terms", terms}};
}

nlohmann::json to_json(const PeriodView& v) {
  nlohmann::json ex = nlohmann::json::array();
  for (const auto& [n, a] : v.leading_exceptions) ex.push_back({n, a});
  return {{"period", v.modulus}, {"residue_pattern", v.pattern}, {"leading_exceptions", ex}};
}

nlohmann::json to_json(const EtaExponents& e) {
  nlohmann::json j{{"order", e.order}};
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t n = 1; n < e.exponents.size(); ++n) a.push_back(e.exponents[n]);
  j["exponents"] = a;
  if (e.period_view) {
    const auto v = to_json(*e.period_view);
    for (const auto& [k, val] : v.items()) j[k] = val;
  } else {
    j["period"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const QProduct& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, power] : p.aggregate()) {
    const auto& [sign, offset, modulus] = key;
    out.push_back({{"sign", sign}, {"offset", offset}, {"modulus", modulus}, {"power", power}});
  }
  return {{"factors", out}, {"text", to_string(p)}};
}

}  // namespace qseries
