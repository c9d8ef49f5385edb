#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "filiform/scalar.hpp"

namespace filiform {

/// One node of a parsed s-expression: either an atom (number or symbol) or a
/// parenthesized list of nodes. This is the on-disk shape of the stratum
/// registry and of the bundled reference tables.
struct SExpr {
  bool is_list = false;
  bool is_string = false;    // atom came from a "..." literal
  std::string atom;          // set when !is_list
  std::vector<SExpr> items;  // set when is_list
  std::size_t pos = 0;       // byte offset in the source, for error messages

  const SExpr& at(std::size_t i) const;
  std::size_t size() const { return items.size(); }
  /// Head symbol of a list form, or "" for atoms / empty lists.
  std::string_view head() const;
};

/// Parses a whole source: a sequence of top-level forms. Line comments start
/// with ';'. Throws ParseError with a byte offset on malformed input.
std::vector<SExpr> parse_sexprs(std::string_view text);

/// Arithmetic expression tree over named symbols, in prefix notation:
///   expr := rational | symbol | (+ e...) | (- e) | (- e e) | (* e...)
///         | (/ e e) | (^ e int)
/// Rational atoms use the scalar grammar (e.g. 7/3, -2); symbols are
/// identifiers such as a3, th, D4, Th6, l1.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { kConstant, kSymbol, kSum, kNegate, kDifference, kProduct, kQuotient, kPower };
  Kind kind = Kind::kConstant;
  Scalar value;               // kConstant
  std::string symbol;         // kSymbol
  std::vector<ExprPtr> args;  // operands of composite kinds
  long exponent = 0;          // kPower
};

/// Builds an arithmetic tree from an already-parsed s-expression.
ExprPtr expr_from_sexpr(const SExpr& form);

/// Convenience: parse a single arithmetic expression from text.
ExprPtr parse_expr(std::string_view text);

/// Values for the free symbols of an expression.
using SymbolTable = std::map<std::string, Scalar, std::less<>>;

/// Exact evaluation. Throws DivisionByZero when a quotient's denominator (or
/// a negative power's base) vanishes, and RegistryError on a symbol missing
/// from the table.
Scalar eval_expr(const Expr& e, const SymbolTable& symbols);
inline Scalar eval_expr(const ExprPtr& e, const SymbolTable& symbols) {
  return eval_expr(*e, symbols);
}

/// Canonical prefix rendering; parse_expr(format_expr(e)) reproduces e.
std::string format_expr(const Expr& e);
inline std::string format_expr(const ExprPtr& e) { return format_expr(*e); }

/// Adds every symbol occurring in e to out.
void collect_symbols(const Expr& e, std::set<std::string>& out);

}  // namespace filiform
