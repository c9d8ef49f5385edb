// Batch command-line front end: classification, isomorphism decision, orbit
// action, invariants, table generation, partition audits, verification, and
// registry inspection. JSON algebra files in; text or JSON out.
//
// Exit codes: 0 success (and iso-true); 1 iso-false, audit with findings, or
// failed verification; 2 usage or input errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "filiform/algebra.hpp"
#include "filiform/action.hpp"
#include "filiform/errors.hpp"
#include "filiform/expr.hpp"
#include "filiform/invariants.hpp"
#include "filiform/params.hpp"
#include "filiform/registry.hpp"
#include "filiform/strata.hpp"
#include "filiform/tables.hpp"

namespace {

using namespace filiform;

ParamVector load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return params_from_json(buffer.str());
}

std::string scalar_list(const std::vector<Scalar>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_scalar(values[i]);
  }
  return out + "]";
}

ThetaVariant variant_from_name(const std::string& name) {
  if (name == "no-prefactor") return ThetaVariant::no_prefactor;
  if (name == "with-prefactor") return ThetaVariant::with_prefactor;
  throw Error("unknown theta variant: " + name +
              " (expected no-prefactor or with-prefactor)");
}

std::map<std::string, Scalar> parse_lambda_options(
    const std::vector<std::string>& raw) {
  std::map<std::string, Scalar> values;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error("--lambda expects k=v, got " + item);
    }
    values[item.substr(0, eq)] = parse_scalar(item.substr(eq + 1));
  }
  return values;
}

int cmd_classify(const std::string& path) {
  const ParamVector p = load_algebra(path);
  const ClassificationReport report = classify_full(p);
  std::cout << "algebra: " << format_params(p) << "\n";
  std::cout << "stratum: " << report.stratum_id
            << (report.parametric ? " (parametric)" : " (single orbit)") << "\n";
  if (!report.invariants.empty()) {
    std::cout << "invariants: " << scalar_list(report.invariants) << "\n";
  }
  if (report.canonical) {
    std::cout << "canonical: " << format_params(*report.canonical) << "\n";
  }
  if (!report.note.empty()) std::cout << "note: " << report.note << "\n";
  return 0;
}

int cmd_iso(const std::string& path_a, const std::string& path_b) {
  const ParamVector a = load_algebra(path_a);
  const ParamVector b = load_algebra(path_b);
  const std::string id_a = classify(a);
  const std::string id_b = classify(b);
  if (is_isomorphic(a, b)) {
    std::cout << "isomorphic: " << id_a;
    const auto values = stratum_invariants(a.dim(), id_a, a);
    if (!values.empty()) std::cout << ", invariants " << scalar_list(values);
    std::cout << "\n";
    return 0;
  }
  if (id_a != id_b) {
    std::cout << "not isomorphic: " << id_a << " vs " << id_b << "\n";
  } else {
    std::cout << "not isomorphic: both " << id_a << ", invariants "
              << scalar_list(stratum_invariants(a.dim(), id_a, a)) << " vs "
              << scalar_list(stratum_invariants(b.dim(), id_b, b)) << "\n";
  }
  return 1;
}

int cmd_act(const std::string& path, const std::string& a_text,
            const std::string& b_text, bool raw, const std::string& variant) {
  const ParamVector p = load_algebra(path);
  const AdaptedPair pair{parse_scalar(a_text), parse_scalar(b_text)};
  const ParamVector image =
      raw ? rho_apply_raw(pair, p) : rho_apply(pair, p, variant_from_name(variant));
  std::cout << params_to_json(image) << "\n";
  return 0;
}

int cmd_invariants(const std::string& path) {
  const ParamVector p = load_algebra(path);
  const DeltaTheta dt = deltas(p);
  std::cout << "algebra: " << format_params(p) << "\n";
  for (int k = 4; k <= p.n; ++k) {
    std::cout << "D" << k << " = " << format_scalar(dt.d(k)) << "\n";
  }
  std::cout << "Th" << p.n << " = " << format_scalar(dt.theta_last) << "\n";
  const std::string id = classify(p);
  std::cout << "stratum: " << id << "\n";
  try {
    const auto values = stratum_invariants(p.dim(), id, p);
    if (!values.empty()) {
      std::cout << "stratum invariants: " << scalar_list(values) << "\n";
    }
  } catch (const DenominatorZero& e) {
    std::cout << "stratum invariants: undefined (" << e.what() << ")\n";
  }
  return 0;
}

int cmd_table(int dim, const std::vector<std::string>& lambda_raw,
              const std::string& format) {
  const auto lambda = parse_lambda_options(lambda_raw);
  const auto list = classification_list(dim, lambda);
  if (format == "text") {
    std::cout << classification_text(dim, list);
  } else if (format == "json") {
    std::cout << classification_json(dim, list) << "\n";
  } else if (format == "csv") {
    std::cout << classification_csv(dim, list);
  } else {
    throw Error("unknown format: " + format);
  }
  return 0;
}

int cmd_audit(int dim, long samples, std::uint64_t seed, bool deep, bool json) {
  const AuditReport report = audit_partition(dim, samples, seed, deep);
  if (json) {
    std::cout << audit_report_json(report) << "\n";
  } else {
    std::cout << audit_report_text(report);
  }
  const bool findings = report.gap_count > 0 || report.overlap_count > 0;
  return findings ? 1 : 0;
}

int cmd_verify(const std::string& path) {
  const ParamVector p = load_algebra(path);
  const StructureTensor tensor = build_table_first_class(p);
  const auto violations = check_leibniz(tensor);
  const bool filiform_ok = check_filiform(tensor);
  std::cout << "algebra: " << format_params(p) << "\n";
  std::cout << "leibniz: "
            << (violations.empty()
                    ? "ok"
                    : std::to_string(violations.size()) + " violations")
            << "\n";
  std::cout << "filiform profile: " << (filiform_ok ? "ok" : "failed") << "\n";
  return violations.empty() && filiform_ok ? 0 : 1;
}

int cmd_dump_registry(int dim) {
  const auto& reg = Registry::instance();
  std::cout << "registry version " << reg.version() << ", dimension " << dim
            << ": " << reg.strata(dim).size() << " strata\n";
  const std::string notes = reg.dim_notes(dim);
  if (!notes.empty()) std::cout << "notes: " << notes << "\n";
  for (const auto& def : reg.strata(dim)) {
    std::cout << "\n" << def.id << (def.parametric ? " (parametric)" : " (single orbit)")
              << "\n";
    std::cout << "  predicate:";
    for (const auto& clause : def.predicate) {
      std::cout << " " << format_expr(*clause.expr)
                << (clause.require_nonzero ? " != 0" : " = 0") << ";";
    }
    std::cout << "\n";
    if (!def.invariants.empty()) {
      std::cout << "  invariants:";
      for (const auto& inv : def.invariants) std::cout << " " << format_expr(*inv);
      std::cout << "\n";
    }
    std::cout << "  family: L(";
    for (std::size_t i = 0; i < def.family.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << format_expr(*def.family[i]);
    }
    std::cout << ")\n";
    if (!def.guards.empty()) {
      std::cout << "  excluded slot values:";
      for (const auto& guard : def.guards) {
        std::cout << " " << format_expr(*guard) << " != 0;";
      }
      std::cout << "\n";
    }
    if (!def.notes.empty()) std::cout << "  note: " << def.notes << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification toolkit for first-class complex filiform "
               "Leibniz algebras (dimensions 5-8)"};
  app.require_subcommand(1);

  std::string path_a, path_b;
  std::string a_text = "1", b_text = "0";
  std::string variant = "no-prefactor";
  std::string format = "text";
  std::vector<std::string> lambda_raw;
  bool raw = false, deep = false, json_out = false;
  int dim = 5;
  long samples = 100000;
  std::uint64_t seed = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Classify an algebra file");
  classify_cmd->add_option("algebra", path_a, "algebra JSON file")->required();

  auto* iso_cmd = app.add_subcommand("iso", "Decide isomorphism of two algebra files");
  iso_cmd->add_option("a", path_a, "first algebra JSON file")->required();
  iso_cmd->add_option("b", path_b, "second algebra JSON file")->required();

  auto* act_cmd = app.add_subcommand("act", "Apply an adapted base change");
  act_cmd->add_option("algebra", path_a, "algebra JSON file")->required();
  act_cmd->add_option("--A", a_text, "head coefficient A")->required();
  act_cmd->add_option("--B", b_text, "head coefficient B")->required();
  act_cmd->add_flag("--raw", raw, "use the direct closed-form route");
  act_cmd->add_option("--theta-variant", variant,
                      "theta recursion tail step: no-prefactor | with-prefactor");

  auto* inv_cmd = app.add_subcommand("invariants", "Print corrected coordinates and stratum invariants");
  inv_cmd->add_option("algebra", path_a, "algebra JSON file")->required();

  auto* table_cmd = app.add_subcommand("table", "Regenerate a classification table");
  table_cmd->add_option("--dim", dim, "algebra dimension (5-8)")->required();
  table_cmd->add_option("--lambda", lambda_raw, "slot values, e.g. l1=7/3 (default lk = k)");
  table_cmd->add_option("--format", format, "text | json | csv");

  auto* audit_cmd = app.add_subcommand("audit", "Audit the stratum partition");
  audit_cmd->add_option("--dim", dim, "algebra dimension (5-8)")->required();
  audit_cmd->add_option("--samples", samples, "sample count (default 100000)");
  audit_cmd->add_option("--seed", seed, "deterministic seed")->required();
  audit_cmd->add_flag("--deep", deep, "drive samples onto documented blind-spot corners");
  audit_cmd->add_flag("--json", json_out, "emit the JSON report");

  auto* verify_cmd = app.add_subcommand("verify", "Check the Leibniz identity and the filiform profile");
  verify_cmd->add_option("algebra", path_a, "algebra JSON file")->required();

  auto* dump_cmd = app.add_subcommand("dump-registry", "Print the stratum registry for a dimension");
  dump_cmd->add_option("--dim", dim, "algebra dimension (5-8)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(classify_cmd)) return cmd_classify(path_a);
    if (app.got_subcommand(iso_cmd)) return cmd_iso(path_a, path_b);
    if (app.got_subcommand(act_cmd)) return cmd_act(path_a, a_text, b_text, raw, variant);
    if (app.got_subcommand(inv_cmd)) return cmd_invariants(path_a);
    if (app.got_subcommand(table_cmd)) return cmd_table(dim, lambda_raw, format);
    if (app.got_subcommand(audit_cmd)) return cmd_audit(dim, samples, seed, deep, json_out);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(path_a);
    if (app.got_subcommand(dump_cmd)) return cmd_dump_registry(dim);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
