#include "qseries/registry.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#ifndef QSERIES_REGISTRY_FILE
#define QSERIES_REGISTRY_FILE "data/identities.json"
#endif

namespace qseries {

namespace {

// Long expressions may be split over several strings in the data file.
std::string joined_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_array()) throw RegistryError("expression must be a string or an array of strings");
  std::string out;
  for (const auto& part : v) {
    if (!out.empty()) out += ' ';
    out += part.get<std::string>();
  }
  return out;
}

ExprPtr parse_field(const std::string& what, const std::string& text, const MacroTable& macros) {
  try {
    return parse(text, &macros);
  } catch (const ParseError& e) {
    throw RegistryError(what + ": " + e.what());
  }
}

}  // namespace

Registry Registry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RegistryError("cannot open registry file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw RegistryError(path.string() + ": " + e.what());
  }
  return from_json(doc);
}

Registry Registry::from_json(const nlohmann::json& doc) {
  Registry reg;
  reg.doc_ = doc;
  try {
    for (const auto& m : doc.value("macros", nlohmann::json::array())) {
      const auto name = m.at("name").get<std::string>();
      reg.macros_[name] = parse_field("macro $" + name, joined_text(m.at("expr")), reg.macros_);
    }
    for (const auto& r : doc.at("identities")) {
      IdentityRecord rec;
      rec.id = r.at("id").get<std::string>();
      rec.about = r.value("about", "");
      rec.suggested_order = r.value("order", Exponent{300});
      for (const auto& side : r.at("sides")) {
        rec.sides_text.push_back(joined_text(side));
        rec.sides.push_back(parse_field("identity " + rec.id, rec.sides_text.back(), reg.macros_));
      }
      if (rec.sides.size() < 2) throw RegistryError("identity " + rec.id + " needs at least two sides");
      if (reg.find(rec.id) != nullptr) throw RegistryError("duplicate identity id " + rec.id);
      reg.records_.push_back(std::move(rec));
    }
    for (const auto& p : doc.value("pipelines", nlohmann::json::array())) {
      std::vector<PipelineStep> steps;
      for (const auto& s : p.at("steps")) {
        PipelineStep step{s.value("step", ""), s.at("identity").get<std::string>()};
        if (reg.find(step.identity) == nullptr) {
          throw RegistryError("pipeline step refers to unknown identity " + step.identity);
        }
        steps.push_back(std::move(step));
      }
      reg.pipelines_.emplace_back(p.at("theorem").get<std::string>(), std::move(steps));
    }
  } catch (const nlohmann::json::exception& e) {
    throw RegistryError(std::string("malformed registry: ") + e.what());
  }
  return reg;
}

const IdentityRecord* Registry::find(std::string_view id) const {
  const auto it = std::find_if(records_.begin(), records_.end(), [&](const auto& r) { return r.id == id; });
  return it == records_.end() ? nullptr : &*it;
}

std::vector<std::string> Registry::pipeline_names() const {
  std::vector<std::string> out;
  for (const auto& [name, steps] : pipelines_) out.push_back(name);
  return out;
}

const std::vector<PipelineStep>& Registry::pipeline(std::string_view name) const {
  for (const auto& [n, steps] : pipelines_) {
    if (n == name) return steps;
  }
  throw RegistryError("unknown pipeline " + std::string(name));
}

Registry Registry::with_macro(std::string_view name, std::string_view text) const {
  nlohmann::json doc = doc_;
  bool found = false;
  for (auto& m : doc["macros"]) {
    if (m.at("name") == name) {
      m["expr"] = std::string(text);
      found = true;
    }
  }
  if (!found) throw RegistryError("unknown macro $" + std::string(name));
  return from_json(doc);
}

std::filesystem::path default_registry_path() {
  if (const char* env = std::getenv("QSERIES_REGISTRY"); env != nullptr && *env != '\0') return env;
  return QSERIES_REGISTRY_FILE;
}

VerifyReport verify_sides(std::string_view id, std::span<const ExprPtr> sides, Exponent order) {
  VerifyReport report;
  report.id = std::string(id);
  report.order = order;
  try {
    if (order < 1) throw SeriesError("verification order must be positive");
    Evaluator ev;
    std::vector<Series> values;
    for (const auto& side : sides) {
      Exponent guard = 0;
      Series s = ev.eval(*side, order);
      // Each retry adds the precision the previous attempt fell short by.
      for (int attempt = 0; attempt < 4 && s.order() < order; ++attempt) {
        guard += order - s.order();
        s = ev.eval(*side, order + guard);
      }
      if (s.order() < order) {
        throw SeriesError("side " + print(*side) + " only reaches order " + std::to_string(s.order()));
      }
      values.push_back(s.truncated(order));
    }
    report.checked_order = order;
    report.pass = true;
    for (std::size_t i = 1; i < values.size(); ++i) {
      const auto bad = first_mismatch(values[0], values[i], order);
      if (bad && (!report.mismatch || *bad < *report.mismatch)) {
        report.pass = false;
        report.mismatch = bad;
        report.side = i;
        report.lhs_coefficient = values[0].coefficient(*bad);
        report.rhs_coefficient = values[i].coefficient(*bad);
      }
    }
  } catch (const std::exception& e) {
    report.pass = false;
    report.error = e.what();
  }
  return report;
}

VerifyReport verify(const IdentityRecord& rec, Exponent order) { return verify_sides(rec.id, rec.sides, order); }

VerifyReport verify(const IdentityRecord& rec) { return verify(rec, rec.suggested_order); }

std::vector<VerifyReport> verify_all(const Registry& reg, std::optional<Exponent> order) {
  const auto& recs = reg.records();
  std::vector<VerifyReport> out(recs.size());
  const auto count = static_cast<std::int64_t>(recs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) out[i] = verify(recs[i], order.value_or(recs[i].suggested_order));
  return out;
}

std::vector<VerifyReport> verify_proof_pipeline(const Registry& reg, std::string_view theorem, Exponent order) {
  std::vector<VerifyReport> out;
  for (const auto& step : reg.pipeline(theorem)) out.push_back(verify(*reg.find(step.identity), order));
  return out;
}

IdentityRecord perturbed(const IdentityRecord& rec, Exponent exponent, const Integer& delta) {
  IdentityRecord out = rec;
  out.id = rec.id + "+perturbed";
  auto bump = make_binary('*', make_int(delta), make_power(make_var(), exponent));
  out.sides.back() = make_binary('+', out.sides.back(), std::move(bump));
  out.sides_text.back() = print(*out.sides.back());
  return out;
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json j{{"id", r.id}, {"order", r.order}, {"pass", r.pass}};
  if (r.pass || r.mismatch) j["checked_order"] = r.checked_order;
  if (r.mismatch) {
    j["mismatch"] = {{"exponent", *r.mismatch},
                     {"side", r.side},
                     {"lhs", r.lhs_coefficient->get_str()},
                     {"rhs", r.rhs_coefficient->get_str()}};
  }
  if (r.error) j["error"] = *r.error;
  return j;
}

}  // namespace qseries
