#include "filiform/registry.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "filiform/errors.hpp"

namespace filiform {

namespace {

// Note strings in the bundled registry are wrapped for source readability;
// collapse the line breaks and indentation runs for display.
std::string normalize_note(const std::string& text) {
  std::string out;
  bool in_space = true;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      if (!in_space && !out.empty()) out += ' ';
      in_space = true;
    } else {
      out += c;
      in_space = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

}  // namespace


namespace {

// Expected stratum counts per dimension; doubles as the registered-dims set.
const std::map<int, std::size_t> kExpectedCounts = {{5, 7}, {6, 11}, {7, 17}, {8, 25}};

std::string allowed_symbols_message(int dim) {
  std::ostringstream out;
  out << "a3..a" << dim - 1 << ", th, D4..D" << dim - 1 << ", Th" << dim - 1
      << ", l1..l4";
  return out.str();
}

bool symbol_allowed(const std::string& s, int dim) {
  int n = dim - 1;
  if (s == "th") return true;
  if (s.size() == 2 && (s[0] == 'a' || s[0] == 'D' || s[0] == 'l')) {
    int k = s[1] - '0';
    if (s[0] == 'a') return k >= 3 && k <= n;
    if (s[0] == 'D') return k >= 4 && k <= n;
    return k >= 1 && k <= 4;  // l1..l4
  }
  if (s.size() == 3 && s.rfind("Th", 0) == 0) {
    int k = s[2] - '0';
    return k >= 4 && k <= n;
  }
  return false;
}

int max_lambda_index(const std::set<std::string>& symbols) {
  int m = 0;
  for (const auto& s : symbols) {
    if (s.size() == 2 && s[0] == 'l') m = std::max(m, s[1] - '0');
  }
  return m;
}

void check_symbols(const ExprPtr& e, int dim, bool allow_lambda,
                   const std::string& where) {
  std::set<std::string> syms;
  collect_symbols(*e, syms);
  for (const auto& s : syms) {
    bool is_lambda = s.size() == 2 && s[0] == 'l';
    if (!symbol_allowed(s, dim) || (is_lambda && !allow_lambda)) {
      throw RegistryError("registry: symbol '" + s + "' not allowed in " + where +
                          " (dimension " + std::to_string(dim) + "; allowed: " +
                          allowed_symbols_message(dim) + ")");
    }
  }
}

StratumDef parse_stratum(const SExpr& form, int dim) {
  if (form.size() < 3 || form.at(1).is_list || form.at(2).is_list) {
    throw ParseError("stratum form needs an id and a kind", form.pos);
  }
  StratumDef def;
  def.dim = dim;
  def.id = form.at(1).atom;
  const std::string& kind = form.at(2).atom;
  if (kind == "parametric") {
    def.parametric = true;
  } else if (kind != "singleton") {
    throw ParseError("stratum kind must be parametric or singleton", form.at(2).pos);
  }
  for (std::size_t i = 3; i < form.size(); ++i) {
    const SExpr& part = form.at(i);
    std::string_view tag = part.head();
    if (tag == "predicate") {
      for (std::size_t j = 1; j < part.size(); ++j) {
        const SExpr& clause = part.at(j);
        std::string_view sense = clause.head();
        if (clause.size() != 2 || (sense != "zero" && sense != "nonzero")) {
          throw ParseError("predicate clause must be (zero e) or (nonzero e)",
                           clause.pos);
        }
        def.predicate.push_back({expr_from_sexpr(clause.at(1)), sense == "nonzero"});
      }
    } else if (tag == "invariants") {
      for (std::size_t j = 1; j < part.size(); ++j) {
        def.invariants.push_back(expr_from_sexpr(part.at(j)));
      }
    } else if (tag == "param-invariants") {
      for (std::size_t j = 1; j < part.size(); ++j) {
        def.param_invariants.push_back(expr_from_sexpr(part.at(j)));
      }
    } else if (tag == "family") {
      for (std::size_t j = 1; j < part.size(); ++j) {
        def.family.push_back(expr_from_sexpr(part.at(j)));
      }
    } else if (tag == "guards") {
      for (std::size_t j = 1; j < part.size(); ++j) {
        def.guards.push_back(expr_from_sexpr(part.at(j)));
      }
    } else if (tag == "notes") {
      if (part.size() != 2 || !part.at(1).is_string) {
        throw ParseError("notes form takes one string", part.pos);
      }
      def.notes = normalize_note(part.at(1).atom);
    } else {
      throw ParseError("unknown stratum field '" + std::string(tag) + "'", part.pos);
    }
  }
  if (def.param_invariants.empty()) def.param_invariants = def.invariants;
  return def;
}

void validate_stratum(const StratumDef& def) {
  const std::string where = "stratum " + def.id + " (dimension " +
                            std::to_string(def.dim) + ")";
  if (def.predicate.empty()) throw RegistryError("registry: empty predicate in " + where);
  if (def.family.size() != static_cast<std::size_t>(def.dim - 2)) {
    throw RegistryError("registry: family of " + where + " must have " +
                        std::to_string(def.dim - 2) + " entries");
  }
  for (const auto& clause : def.predicate) {
    check_symbols(clause.expr, def.dim, /*allow_lambda=*/false, "predicate of " + where);
  }
  for (const auto& e : def.invariants) {
    check_symbols(e, def.dim, /*allow_lambda=*/false, "invariants of " + where);
  }
  for (const auto& e : def.param_invariants) {
    check_symbols(e, def.dim, /*allow_lambda=*/false, "param-invariants of " + where);
  }
  std::set<std::string> family_syms;
  for (const auto& e : def.family) {
    check_symbols(e, def.dim, /*allow_lambda=*/true, "family of " + where);
    collect_symbols(*e, family_syms);
  }
  for (const auto& s : family_syms) {
    if (!(s.size() == 2 && s[0] == 'l')) {
      throw RegistryError("registry: family of " + where +
                          " may only reference l1..l4, found '" + s + "'");
    }
  }
  for (const auto& e : def.guards) {
    check_symbols(e, def.dim, /*allow_lambda=*/true, "guards of " + where);
  }
  if (def.parametric) {
    if (def.invariants.empty()) {
      throw RegistryError("registry: parametric " + where + " needs invariants");
    }
    if (family_syms.empty()) {
      throw RegistryError("registry: parametric " + where + " needs free slots");
    }
    if (def.param_invariants.size() != def.invariants.size()) {
      throw RegistryError("registry: param-invariants of " + where +
                          " must match the invariant count");
    }
  } else {
    if (!family_syms.empty()) {
      throw RegistryError("registry: singleton " + where + " must be constant");
    }
    if (!def.invariants.empty()) {
      throw RegistryError("registry: singleton " + where + " carries no invariants");
    }
  }
}

}  // namespace

Registry Registry::from_text(std::string_view text) {
  Registry reg;
  reg.source_ = std::string(text);
  std::vector<SExpr> forms;
  try {
    forms = parse_sexprs(text);
  } catch (const ParseError& e) {
    throw RegistryError(std::string("registry parse failure: ") + e.what());
  }
  if (forms.empty() || forms[0].head() != "registry-version" || forms[0].size() != 2) {
    throw RegistryError("registry must start with (registry-version N)");
  }
  try {
    reg.version_ = std::stoi(forms[0].at(1).atom);
  } catch (const std::exception&) {
    throw RegistryError("registry version is not an integer");
  }
  if (reg.version_ != 1) {
    throw RegistryError("unsupported registry version " + std::to_string(reg.version_));
  }
  try {
    for (std::size_t f = 1; f < forms.size(); ++f) {
      const SExpr& form = forms[f];
      if (form.head() != "dimension" || form.size() < 2) {
        throw RegistryError("expected (dimension N ...) at top level");
      }
      int dim = std::stoi(form.at(1).atom);
      if (reg.by_dim_.count(dim)) {
        throw RegistryError("duplicate dimension " + std::to_string(dim));
      }
      auto& list = reg.by_dim_[dim];
      for (std::size_t i = 2; i < form.size(); ++i) {
        const SExpr& part = form.at(i);
        if (part.head() == "notes") {
          if (part.size() != 2 || !part.at(1).is_string) {
            throw RegistryError("dimension notes form takes one string");
          }
          reg.dim_notes_[dim] = normalize_note(part.at(1).atom);
          continue;
        }
        if (part.head() == "corner") {
          std::vector<PredicateClause> corner;
          for (std::size_t j = 1; j < part.size(); ++j) {
            const SExpr& clause = part.at(j);
            std::string_view sense = clause.head();
            if (clause.size() != 2 || (sense != "zero" && sense != "nonzero")) {
              throw RegistryError("corner clause must be (zero e) or (nonzero e)");
            }
            PredicateClause pc{expr_from_sexpr(clause.at(1)), sense == "nonzero"};
            check_symbols(pc.expr, dim, /*allow_lambda=*/false, "corner clause");
            corner.push_back(std::move(pc));
          }
          if (corner.empty()) throw RegistryError("empty corner form");
          reg.corners_[dim].push_back(std::move(corner));
          continue;
        }
        if (part.head() == "overlap") {
          std::vector<std::string> ids;
          for (std::size_t j = 1; j < part.size(); ++j) ids.push_back(part.at(j).atom);
          if (ids.size() < 2) throw RegistryError("overlap form needs two or more ids");
          reg.overlaps_[dim].push_back(std::move(ids));
          continue;
        }
        if (part.head() != "stratum") {
          throw RegistryError("expected (stratum ...) inside dimension form");
        }
        StratumDef def = parse_stratum(part, dim);
        std::set<std::string> syms;
        for (const auto& e : def.family) collect_symbols(*e, syms);
        def.lambda_count = max_lambda_index(syms);
        validate_stratum(def);
        for (const auto& prev : list) {
          if (prev.id == def.id) {
            throw RegistryError("duplicate stratum id " + def.id + " in dimension " +
                                std::to_string(dim));
          }
        }
        list.push_back(std::move(def));
      }
      reg.dims_.push_back(dim);
    }
  } catch (const ParseError& e) {
    throw RegistryError(std::string("registry parse failure: ") + e.what());
  }
  for (const auto& [dim, count] : kExpectedCounts) {
    auto it = reg.by_dim_.find(dim);
    if (it == reg.by_dim_.end()) {
      throw RegistryError("registry is missing dimension " + std::to_string(dim));
    }
    if (it->second.size() != count) {
      throw RegistryError("registry lists " + std::to_string(it->second.size()) +
                          " strata for dimension " + std::to_string(dim) +
                          ", expected " + std::to_string(count));
    }
  }
  for (const auto& [dim, blocks] : reg.overlaps_) {
    for (const auto& ids : blocks) {
      for (const auto& id : ids) reg.stratum(dim, id);  // throws when absent
    }
  }
  return reg;
}

Registry Registry::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw RegistryError("cannot open registry file " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

const Registry& Registry::instance() {
  static const Registry reg = [] {
    if (const char* path = std::getenv("FILIFORM_REGISTRY")) {
      return from_file(path);
    }
    return from_text(default_registry_text());
  }();
  return reg;
}

const std::vector<StratumDef>& Registry::strata(int dim) const {
  auto it = by_dim_.find(dim);
  if (it == by_dim_.end()) {
    throw UnsupportedDimension("no strata registered for dimension " +
                               std::to_string(dim) + "; supported: 5..8");
  }
  return it->second;
}

const StratumDef& Registry::stratum(int dim, std::string_view id) const {
  for (const auto& def : strata(dim)) {
    if (def.id == id) return def;
  }
  throw RegistryError("no stratum " + std::string(id) + " in dimension " +
                      std::to_string(dim));
}

const std::string& Registry::dim_notes(int dim) const {
  static const std::string empty;
  auto it = dim_notes_.find(dim);
  return it == dim_notes_.end() ? empty : it->second;
}

const std::vector<std::vector<PredicateClause>>& Registry::corners(int dim) const {
  static const std::vector<std::vector<PredicateClause>> empty;
  auto it = corners_.find(dim);
  return it == corners_.end() ? empty : it->second;
}

const std::vector<std::vector<std::string>>& Registry::documented_overlaps(
    int dim) const {
  static const std::vector<std::vector<std::string>> empty;
  auto it = overlaps_.find(dim);
  return it == overlaps_.end() ? empty : it->second;
}

}  // namespace filiform
