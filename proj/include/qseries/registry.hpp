#ifndef QSERIES_REGISTRY_HPP
#define QSERIES_REGISTRY_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qseries/expr.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// One identity: every side must expand to the same series.
struct IdentityRecord {
  std::string id;
  std::string about;
  Exponent suggested_order = 300;
  std::vector<std::string> sides_text;
  std::vector<ExprPtr> sides;
};

struct VerifyReport {
  std::string id;
  Exponent order = 0;          // requested
  Exponent checked_order = 0;  // coefficients compared below this exponent
  bool pass = false;
  std::optional<Exponent> mismatch;  // first differing exponent
  std::size_t side = 0;              // side that disagreed with side 0
  std::optional<Integer> lhs_coefficient, rhs_coefficient;
  std::optional<std::string> error;
};

struct PipelineStep {
  std::string description;
  std::string identity;
};

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The identity catalogue. Loaded from a JSON document with named macros
/// (expanded at parse time), identity records and proof pipelines; see
/// data/identities.json.
class Registry {
 public:
  static Registry load(const std::filesystem::path& path);
  static Registry from_json(const nlohmann::json& doc);

  const std::vector<IdentityRecord>& records() const { return records_; }
  const IdentityRecord* find(std::string_view id) const;
  const MacroTable& macros() const { return macros_; }

  std::vector<std::string> pipeline_names() const;
  /// Throws RegistryError for an unknown pipeline.
  const std::vector<PipelineStep>& pipeline(std::string_view name) const;

  /// Copy with one macro's text replaced; every record is re-parsed.
  Registry with_macro(std::string_view name, std::string_view text) const;

  const nlohmann::json& document() const { return doc_; }

 private:
  nlohmann::json doc_;
  MacroTable macros_;
  std::vector<IdentityRecord> records_;
  std::vector<std::pair<std::string, std::vector<PipelineStep>>> pipelines_;
};

/// Registry file shipped with the sources (overridable with QSERIES_REGISTRY).
std::filesystem::path default_registry_path();

/// Expands every side below `order` and compares each with the first.
/// Sides whose own order comes out lower (division by q^k for instance) are
/// re-expanded with extra working precision until `order` is reached.
/// Expansion errors are reported, not thrown.
VerifyReport verify_sides(std::string_view id, std::span<const ExprPtr> sides, Exponent order);
VerifyReport verify(const IdentityRecord& rec, Exponent order);
VerifyReport verify(const IdentityRecord& rec);

/// Every record at its suggested order (or at `order` if given). Records are
/// checked in parallel; the result follows registry order.
std::vector<VerifyReport> verify_all(const Registry& reg, std::optional<Exponent> order = std::nullopt);

/// One report per step of the named pipeline, in step order.
std::vector<VerifyReport> verify_proof_pipeline(const Registry& reg, std::string_view theorem, Exponent order);

/// The record with `delta * q^exponent` added to its last side.
IdentityRecord perturbed(const IdentityRecord& rec, Exponent exponent, const Integer& delta = 1);

nlohmann::json to_json(const VerifyReport& r);

}  // namespace qseries

#endif  // QSERIES_REGISTRY_HPP
