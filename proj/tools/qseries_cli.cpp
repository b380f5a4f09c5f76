#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qseries/dissection.hpp"
#include "qseries/expr.hpp"
#include "qseries/json.hpp"
#include "qseries/prodmake.hpp"
#include "qseries/registry.hpp"
#include "qseries/signscan.hpp"

using namespace qseries;

namespace {

struct Options {
  std::string registry_path;
  bool json = false;
};

Registry open_registry(const Options& opt) {
  return Registry::load(opt.registry_path.empty() ? default_registry_path() : std::filesystem::path(opt.registry_path));
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<std::int64_t>& v, std::size_t from = 0) {
  std::string out;
  for (std::size_t i = from; i < v.size(); ++i) {
    if (i > from) out += ", ";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string coefficient_list(const Series& s, Exponent from, Exponent to) {
  std::string out;
  for (Exponent n = from; n < to; ++n) {
    if (n > from) out += ", ";
    out += s.coefficient(n).get_str();
  }
  return out;
}

int run_expand(const std::string& text, Exponent order, const Options& opt) {
  const Series s = evaluate(text, order);
  if (opt.json) {
    print_json(to_json(s));
    return 0;
  }
  std::cout << "# " << text << " to O(q^" << s.order() << ")\n";
  for (Exponent n = s.valuation(); n < s.order(); ++n) std::cout << n << ' ' << s.coefficient(n).get_str() << '\n';
  return 0;
}

int run_dissect(const std::string& text, std::int64_t m, Exponent order, std::optional<std::int64_t> slice,
                const Options& opt) {
  if (slice && (*slice < 0 || *slice >= m)) throw CLI::ValidationError("--slice", "must lie in [0, mod)");
  const Dissection d = dissect(evaluate(text, order), m);
  if (opt.json) {
    auto j = to_json(d);
    if (slice) j = j["slices"][static_cast<std::size_t>(*slice)];
    print_json(j);
    return 0;
  }
  for (std::int64_t l = 0; l < m; ++l) {
    if (slice && l != *slice) continue;
    const Series& s = d.slices[static_cast<std::size_t>(l)];
    std::cout << "slice " << l << " (O(q^" << s.order() << ")): " << coefficient_list(s, 0, s.order()) << '\n';
  }
  return 0;
}

void print_period(const PeriodView& v) {
  std::cout << "period " << v.modulus << ", pattern by residue: " << join(v.pattern) << '\n';
  for (const auto& [n, a] : v.leading_exceptions) std::cout << "  exception a_" << n << " = " << a << '\n';
}

int run_prodmake(const std::string& text, Exponent order, std::optional<std::int64_t> period,
                 std::optional<std::int64_t> m, bool signed_base, const Options& opt) {
  const Series f = evaluate(text, order);
  if (m) {
    const std::int64_t p = period.value_or(signed_base ? 25 : 50);
    const auto guesses = conjecture_dissection(f, *m, p, signed_base);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& g : guesses) {
      nlohmann::json j{{"residue", g.residue}, {"vanishes", g.vanishes}};
      if (!g.vanishes) {
        j["prefactor_exponent"] = g.prefactor_exponent;
        j["scalar"] = g.scalar.get_str();
        j["eta"] = to_json(g.exponents);
        j["product"] = g.product ? to_json(*g.product) : nlohmann::json(nullptr);
      }
      out.push_back(std::move(j));
      if (opt.json) continue;
      std::cout << "slice " << g.residue << ": ";
      if (g.vanishes) {
        std::cout << "0\n";
        continue;
      }
      std::cout << g.scalar.get_str() << " * q^" << g.prefactor_exponent << " * "
                << (g.product ? to_string(*g.product) : std::string("(no periodic product)")) << '\n';
    }
    if (opt.json) print_json(out);
    return std::all_of(guesses.begin(), guesses.end(), [](const auto& g) { return g.vanishes || g.product; }) ? 0 : 1;
  }

  EtaExponents e = prodmake(f, order);
  std::optional<QProduct> grouped;
  if (period) {
    if (signed_base) {
      grouped = detect_signed_product(e, *period);
      e.period_view = detect_period(e, 2 * *period);
    } else {
      e.period_view = detect_period(e, *period);
      if (e.period_view) grouped = to_qproduct(*e.period_view);
    }
  }
  if (opt.json) {
    auto j = to_json(e);
    if (grouped) j["product"] = to_json(*grouped);
    print_json(j);
  } else {
    std::cout << "exponents a_1.." << e.order - 1 << ": " << join(e.exponents, 1) << '\n';
    if (e.period_view) print_period(*e.period_view);
    if (grouped) std::cout << "product: " << to_string(*grouped) << '\n';
    if (period && !grouped) std::cout << "no pattern of period " << *period << '\n';
  }
  return period && !grouped ? 1 : 0;
}

void print_report(const VerifyReport& r) {
  if (r.pass) {
    std::cout << "PASS " << r.id << " to O(q^" << r.checked_order << ")\n";
  } else if (r.mismatch) {
    std::cout << "FAIL " << r.id << ": side " << r.side << " differs at q^" << *r.mismatch << " ("
              << r.lhs_coefficient->get_str() << " vs " << r.rhs_coefficient->get_str() << ")\n";
  } else {
    std::cout << "FAIL " << r.id << ": " << r.error.value_or("unknown error") << '\n';
  }
}

int emit_reports(std::vector<VerifyReport> reports, const Options& opt) {
  if (opt.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    print_json(j);
  } else {
    for (const auto& r : reports) print_report(r);
  }
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; }) ? 0 : 1;
}

int run_verify(const std::vector<std::string>& sides, const std::string& id, bool all, std::optional<Exponent> order,
               const Options& opt) {
  if (all) {
    const Registry reg = open_registry(opt);
    auto reports = verify_all(reg, order);
    std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return emit_reports(std::move(reports), opt);
  }
  if (!id.empty()) {
    const Registry reg = open_registry(opt);
    const IdentityRecord* rec = reg.find(id);
    if (rec == nullptr) throw RegistryError("unknown identity " + id);
    return emit_reports({verify(*rec, order.value_or(rec->suggested_order))}, opt);
  }
  if (sides.size() < 2) throw CLI::ValidationError("verify", "give --id, --all or at least two expressions");
  // Registry macros are available to ad hoc expressions when the registry loads.
  std::optional<Registry> reg;
  try {
    reg = open_registry(opt);
  } catch (const RegistryError&) {
    if (!opt.registry_path.empty()) throw;
  }
  std::vector<ExprPtr> parsed;
  for (const auto& s : sides) parsed.push_back(parse(s, reg ? &reg->macros() : nullptr));
  return emit_reports({verify_sides("adhoc", parsed, order.value_or(100))}, opt);
}

int run_pipeline(const std::string& theorem, Exponent order, const Options& opt) {
  const Registry reg = open_registry(opt);
  const auto& steps = reg.pipeline(theorem);
  const auto reports = verify_proof_pipeline(reg, theorem, order);
  if (opt.json) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < steps.size(); ++i) {
      auto r = to_json(reports[i]);
      r["step"] = steps[i].description;
      j.push_back(std::move(r));
    }
    print_json({{"theorem", theorem}, {"order", order}, {"steps", j}});
  } else {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      std::cout << "step " << i + 1 << " [" << steps[i].description << "] ";
      print_report(reports[i]);
    }
  }
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; }) ? 0 : 1;
}

int run_signs(const std::string& which, Exponent order, const std::string& csv, const Options& opt) {
  const auto seq = sequence_from_name(which);
  if (!seq) throw CLI::ValidationError("--which", "expected alpha, beta, gamma or delta");
  const SignRule rule = expected_rule(*seq);
  const Series f = evaluate(sequence_expression(*seq), order);
  const SignReport report = scan(f, rule, order, which);
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw std::runtime_error("cannot write " + csv);
    out << "n,coefficient,residue,verdict\n";
    std::size_t next = 0;
    for (Exponent n = 0; n < order; ++n) {
      bool bad = next < report.violations.size() && report.violations[next].n == n;
      if (bad) ++next;
      out << n << ',' << f.coefficient(n).get_str() << ',' << n % rule.modulus << ',' << (bad ? "violation" : "ok")
          << '\n';
    }
  }
  if (opt.json) {
    print_json(to_json(report));
  } else {
    std::cout << which << " to n < " << order << ": " << report.violations.size() << " violation(s), zeros at {"
              << join(std::vector<std::int64_t>(report.zeros.begin(), report.zeros.end())) << "}\n";
    for (const auto& v : report.violations) {
      std::cout << "  n=" << v.n << " value=" << v.value.get_str() << " expected sign " << v.expected << '\n';
    }
  }
  return report.pass() ? 0 : 1;
}

int run_list(const Options& opt) {
  const Registry reg = open_registry(opt);
  if (opt.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reg.records()) {
      j.push_back({{"id", r.id}, {"about", r.about}, {"order", r.suggested_order}, {"sides", r.sides_text}});
    }
    print_json({{"identities", j}, {"pipelines", reg.pipeline_names()}});
    return 0;
  }
  for (const auto& r : reg.records()) std::cout << r.id << " (N=" << r.suggested_order << "): " << r.about << '\n';
  std::cout << "pipelines: ";
  const auto names = reg.pipeline_names();
  for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? ", " : "") << names[i];
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact truncated q-series: expansion, dissection, product recovery and identity checks"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--registry", opt.registry_path, "Identity registry file (default: built-in path or $QSERIES_REGISTRY)");
  app.add_flag("--json", opt.json, "Machine-readable output");

  std::string expr_text;
  Exponent order = 100;
  std::optional<Exponent> opt_order;
  std::int64_t modulus = 5;
  std::optional<std::int64_t> slice, period, prod_mod;
  bool signed_base = false;

  auto* expand = app.add_subcommand("expand", "Coefficients of an expression");
  expand->add_option("expr", expr_text, "Expression")->required();
  expand->add_option("--order,-N", order, "Truncation order")->check(CLI::PositiveNumber);
  expand->add_flag("--json", opt.json);

  auto* dis = app.add_subcommand("dissect", "m-dissection slices");
  dis->add_option("expr", expr_text, "Expression")->required();
  dis->add_option("--mod,-m", modulus, "Modulus")->check(CLI::PositiveNumber);
  dis->add_option("--order,-N", order, "Truncation order")->check(CLI::PositiveNumber);
  dis->add_option("--slice", slice, "Only this slice");
  dis->add_flag("--json", opt.json);

  auto* pm = app.add_subcommand("prodmake", "Exponents a_n with f = prod (1-q^n)^{a_n}");
  pm->add_option("expr", expr_text, "Expression")->required();
  pm->add_option("--order,-N", order, "Truncation order")->check(CLI::PositiveNumber);
  pm->add_option("--period", period, "Look for a residue pattern of this period")->check(CLI::PositiveNumber);
  pm->add_option("--mod,-m", prod_mod, "Run on each slice of the m-dissection")->check(CLI::PositiveNumber);
  pm->add_flag("--signed", signed_base, "Group into (q^j;q^M) and (-q^j;q^M) factors, M = period");
  pm->add_flag("--json", opt.json);

  std::vector<std::string> sides;
  std::string id;
  bool all = false;
  auto* ver = app.add_subcommand("verify", "Check an identity to a given order");
  ver->add_option("sides", sides, "Two or more expressions that should agree");
  ver->add_option("--id", id, "Registry identity");
  ver->add_flag("--all", all, "Every registry identity");
  ver->add_option("--order,-N", opt_order, "Truncation order (default: registry suggestion)")->check(CLI::PositiveNumber);
  ver->add_option("--registry", opt.registry_path);
  ver->add_flag("--json", opt.json);

  std::string theorem;
  Exponent pipe_order = 300;
  auto* pipe = app.add_subcommand("pipeline", "Replay the identity chain behind a dissection");
  pipe->add_option("--theorem", theorem, "5-dis-1, 5-dis-2, 5-dis-3 or 5-dis-4")->required();
  pipe->add_option("--order,-N", pipe_order, "Truncation order")->check(CLI::PositiveNumber);
  pipe->add_option("--registry", opt.registry_path);
  pipe->add_flag("--json", opt.json);

  std::string which, csv;
  Exponent sign_order = 1000;
  auto* signs = app.add_subcommand("signs", "Sign pattern of alpha, beta, gamma or delta");
  signs->add_option("--which", which, "Sequence")->required();
  signs->add_option("--order,-N", sign_order, "Check n < N")->check(CLI::PositiveNumber);
  signs->add_option("--csv", csv, "Write n,coefficient,residue,verdict rows");
  signs->add_flag("--json", opt.json);

  auto* list = app.add_subcommand("list", "Registry identities and pipelines");
  list->add_option("--registry", opt.registry_path);
  list->add_flag("--json", opt.json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (expand->parsed()) return run_expand(expr_text, order, opt);
    if (dis->parsed()) return run_dissect(expr_text, modulus, order, slice, opt);
    if (pm->parsed()) return run_prodmake(expr_text, order, period, prod_mod, signed_base, opt);
    if (ver->parsed()) return run_verify(sides, id, all, opt_order, opt);
    if (pipe->parsed()) return run_pipeline(theorem, pipe_order, opt);
    if (signs->parsed()) return run_signs(which, sign_order, csv, opt);
    if (list->parsed()) return run_list(opt);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
