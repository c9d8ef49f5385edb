#include "filiform/tables.hpp"

#include <set>
#include <sstream>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "filiform/algebra.hpp"
#include "filiform/errors.hpp"
#include "filiform/registry.hpp"
#include "filiform/strata.hpp"

namespace filiform {

namespace {

std::vector<Scalar> lambda_values_for(const StratumDef& def,
                                      const std::map<std::string, Scalar>& overrides) {
  std::vector<Scalar> values;
  values.reserve(static_cast<std::size_t>(def.lambda_count));
  for (int j = 1; j <= def.lambda_count; ++j) {
    const std::string key = "l" + std::to_string(j);
    auto it = overrides.find(key);
    values.push_back(it != overrides.end() ? it->second : Scalar(Rational(j)));
  }
  return values;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    if (end > start) lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string scalar_list(const std::vector<Scalar>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_scalar(values[i]);
  }
  return out;
}

}  // namespace

std::vector<ClassificationEntry> classification_list(
    int dim, const std::map<std::string, Scalar>& lambda_values) {
  const auto& defs = Registry::instance().strata(dim);
  std::vector<ClassificationEntry> list;
  list.reserve(defs.size());
  int index = 1;
  for (const auto& def : defs) {
    ClassificationEntry entry;
    entry.index = index++;
    entry.stratum_id = def.id;
    entry.parametric = def.parametric;
    entry.lambda = lambda_values_for(def, lambda_values);
    entry.tuple = instantiate_family(def, entry.lambda);
    list.push_back(std::move(entry));
  }
  return list;
}

int count_classes(int dim) {
  return static_cast<int>(Registry::instance().strata(dim).size());
}

long conjecture_value(long n) { return n * n - 7 * n + 17; }

std::string classification_text(int dim, const std::vector<ClassificationEntry>& list) {
  std::ostringstream out;
  out << "dimension " << dim << ": " << list.size() << " isomorphism classes"
      << " (n^2 - 7n + 17 = " << conjecture_value(dim) << " at n = " << dim << ")\n";
  for (const auto& entry : list) {
    out << "\n" << entry.index << ") " << entry.stratum_id << "  "
        << format_params(entry.tuple);
    if (entry.parametric) out << "  at lambda = (" << scalar_list(entry.lambda) << ")";
    out << "\n";
    for (const auto& line : split_lines(render_table(build_table_first_class(entry.tuple)))) {
      out << "     " << line << "\n";
    }
  }
  return out.str();
}

std::string classification_json(int dim, const std::vector<ClassificationEntry>& list) {
  nlohmann::json j;
  j["dim"] = dim;
  j["count"] = list.size();
  j["conjecture_value"] = conjecture_value(dim);
  j["entries"] = nlohmann::json::array();
  for (const auto& entry : list) {
    nlohmann::json e;
    e["index"] = entry.index;
    e["stratum"] = entry.stratum_id;
    e["parametric"] = entry.parametric;
    auto lam = nlohmann::json::array();
    for (const auto& v : entry.lambda) lam.push_back(format_scalar(v));
    e["lambda"] = std::move(lam);
    e["tuple"] = nlohmann::json::parse(params_to_json(entry.tuple));
    auto products = nlohmann::json::array();
    for (const auto& line : split_lines(render_table(build_table_first_class(entry.tuple)))) {
      products.push_back(line);
    }
    e["products"] = std::move(products);
    j["entries"].push_back(std::move(e));
  }
  return j.dump(2);
}

std::string classification_csv(int dim, const std::vector<ClassificationEntry>& list) {
  std::ostringstream out;
  out << "dim,index,stratum,parametric,lambda,tuple\n";
  for (const auto& entry : list) {
    out << dim << "," << entry.index << "," << entry.stratum_id << ","
        << (entry.parametric ? "yes" : "no") << ",\"" << scalar_list(entry.lambda)
        << "\",\"" << format_params(entry.tuple) << "\"\n";
  }
  return out.str();
}

namespace {

SymbolTable lambda_symbols(const std::vector<Scalar>& lam) {
  SymbolTable table;
  for (std::size_t j = 0; j < lam.size(); ++j) {
    table["l" + std::to_string(j + 1)] = lam[j];
  }
  return table;
}

std::string slot_name(int dim, std::size_t slot) {
  const std::size_t theta_slot = static_cast<std::size_t>(dim) - 3;
  if (slot == theta_slot) return "th";
  return "a" + std::to_string(slot + 3);
}

}  // namespace

std::vector<TableDiscrepancy> cross_check_reference_tables(int dim) {
  const auto& defs = Registry::instance().strata(dim);
  const auto& items = reference_items(dim);
  if (defs.size() != items.size()) {
    throw RegistryError("reference transcription and registry disagree on the class count");
  }
  const int n = dim - 1;
  // Two slot assignments clear of every family guard; a disagreement must
  // show up under at least one of them (and is reported once).
  const std::vector<std::vector<Scalar>> assignments = {
      {Scalar(Rational(2)), Scalar(Rational(3)), Scalar(Rational(4)), Scalar(Rational(5))},
      {Scalar(Rational(7)), Scalar(Rational(11)), Scalar(Rational(13)), Scalar(Rational(17))},
  };

  std::vector<TableDiscrepancy> findings;
  std::set<std::string> seen;
  auto record = [&](int index, const std::string& id, const std::string& kind,
                    const std::string& location, const std::string& detail) {
    const std::string key = kind + "#" + std::to_string(index) + "#" + location;
    if (!seen.insert(key).second) return;
    findings.push_back({dim, index, id, kind, location, detail});
  };

  for (std::size_t pos = 0; pos < defs.size(); ++pos) {
    const auto& def = defs[pos];
    const auto& item = items[pos];
    if (item.tuple.size() != static_cast<std::size_t>(dim - 2)) {
      throw RegistryError("reference tuple arity mismatch at item " +
                          std::to_string(item.index));
    }
    for (const auto& assignment : assignments) {
      std::vector<Scalar> lam(assignment.begin(),
                              assignment.begin() + def.lambda_count);
      const SymbolTable symbols = lambda_symbols(lam);
      const ParamVector generated = instantiate_family(def, lam);

      for (std::size_t slot = 0; slot < item.tuple.size(); ++slot) {
        const Scalar printed = eval_expr(*item.tuple[slot], symbols);
        const Scalar actual = slot + 3 <= static_cast<std::size_t>(n)
                                  ? generated.a(static_cast<int>(slot) + 3)
                                  : generated.theta;
        if (printed != actual) {
          record(item.index, def.id, "tuple", slot_name(dim, slot),
                 "printed " + format_scalar(printed) + ", parameters give " + format_scalar(actual) +
                     " (lambda = " + scalar_list(lam) + ")");
        }
      }

      const StructureTensor tensor = build_table_first_class(generated);
      std::vector<std::vector<Scalar>> printed_rows(
          static_cast<std::size_t>(n),
          std::vector<Scalar>(static_cast<std::size_t>(n) + 1, Scalar(0)));
      for (const auto& row : item.rows) {
        for (const auto& [k, expr] : row.coeffs) {
          printed_rows[static_cast<std::size_t>(row.i)][static_cast<std::size_t>(k)] =
              eval_expr(*expr, symbols);
        }
      }
      for (int i = 0; i < n; ++i) {
        std::string diffs;
        for (int k = 0; k <= n; ++k) {
          const Scalar& printed = printed_rows[static_cast<std::size_t>(i)]
                                              [static_cast<std::size_t>(k)];
          const Scalar actual = tensor.at(i, 1, k);
          if (printed != actual) {
            if (!diffs.empty()) diffs += "; ";
            diffs += "e" + std::to_string(k) + ": printed " + format_scalar(printed) +
                     ", parameters give " + format_scalar(actual);
          }
        }
        if (!diffs.empty()) {
          record(item.index, def.id, "product", "e" + std::to_string(i) + " e1",
                 diffs + " (lambda = " + scalar_list(lam) + ")");
        }
      }
    }
  }
  return findings;
}

}  // namespace filiform
