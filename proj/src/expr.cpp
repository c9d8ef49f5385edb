#include "filiform/expr.hpp"

#include <cctype>
#include <sstream>

#include "filiform/errors.hpp"

namespace filiform {

const SExpr& SExpr::at(std::size_t i) const {
  if (!is_list || i >= items.size()) {
    throw ParseError("s-expression index out of range", pos);
  }
  return items[i];
}

std::string_view SExpr::head() const {
  if (!is_list || items.empty() || items[0].is_list) return {};
  return items[0].atom;
}

namespace {

struct Reader {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == ';') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip_space();
    return pos >= text.size();
  }

  SExpr read_form() {
    skip_space();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    SExpr node;
    node.pos = pos;
    if (text[pos] == '(') {
      ++pos;
      node.is_list = true;
      while (true) {
        skip_space();
        if (pos >= text.size()) throw ParseError("unterminated list", node.pos);
        if (text[pos] == ')') {
          ++pos;
          return node;
        }
        node.items.push_back(read_form());
      }
    }
    if (text[pos] == ')') throw ParseError("unexpected ')'", pos);
    if (text[pos] == '"') {
      ++pos;
      node.is_string = true;
      while (pos < text.size() && text[pos] != '"') {
        node.atom.push_back(text[pos]);
        ++pos;
      }
      if (pos >= text.size()) throw ParseError("unterminated string", node.pos);
      ++pos;
      return node;
    }
    std::size_t start = pos;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '(' || c == ')' || c == ';' ||
          std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      ++pos;
    }
    node.atom = std::string(text.substr(start, pos - start));
    return node;
  }
};

bool atom_is_number(const std::string& a) {
  if (a.empty()) return false;
  char c = a[0];
  if (std::isdigit(static_cast<unsigned char>(c))) return true;
  return (c == '-' || c == '+') && a.size() > 1 &&
         std::isdigit(static_cast<unsigned char>(a[1]));
}

ExprPtr make_node(Expr node) { return std::make_shared<const Expr>(std::move(node)); }

std::vector<ExprPtr> child_exprs(const SExpr& form, std::size_t first) {
  std::vector<ExprPtr> out;
  for (std::size_t i = first; i < form.size(); ++i) {
    out.push_back(expr_from_sexpr(form.at(i)));
  }
  return out;
}

}  // namespace

std::vector<SExpr> parse_sexprs(std::string_view text) {
  Reader reader{text};
  std::vector<SExpr> forms;
  while (!reader.done()) forms.push_back(reader.read_form());
  return forms;
}

ExprPtr expr_from_sexpr(const SExpr& form) {
  Expr node;
  if (!form.is_list) {
    if (form.is_string) {
      throw ParseError("string literal is not an expression", form.pos);
    }
    if (atom_is_number(form.atom)) {
      node.kind = Expr::Kind::kConstant;
      try {
        node.value = parse_scalar(form.atom);
      } catch (const ParseError& e) {
        throw ParseError("bad numeric atom '" + form.atom + "': " + e.what(), form.pos);
      }
    } else if (!form.atom.empty()) {
      node.kind = Expr::Kind::kSymbol;
      node.symbol = form.atom;
    } else {
      throw ParseError("empty atom", form.pos);
    }
    return make_node(std::move(node));
  }
  if (form.size() == 0) throw ParseError("empty list is not an expression", form.pos);
  std::string_view op = form.head();
  if (op == "+") {
    if (form.size() < 2) throw ParseError("'+' needs at least one operand", form.pos);
    node.kind = Expr::Kind::kSum;
    node.args = child_exprs(form, 1);
  } else if (op == "-") {
    if (form.size() == 2) {
      node.kind = Expr::Kind::kNegate;
    } else if (form.size() == 3) {
      node.kind = Expr::Kind::kDifference;
    } else {
      throw ParseError("'-' takes one or two operands", form.pos);
    }
    node.args = child_exprs(form, 1);
  } else if (op == "*") {
    if (form.size() < 2) throw ParseError("'*' needs at least one operand", form.pos);
    node.kind = Expr::Kind::kProduct;
    node.args = child_exprs(form, 1);
  } else if (op == "/") {
    if (form.size() != 3) throw ParseError("'/' takes exactly two operands", form.pos);
    node.kind = Expr::Kind::kQuotient;
    node.args = child_exprs(form, 1);
  } else if (op == "^") {
    if (form.size() != 3 || form.at(2).is_list || !atom_is_number(form.at(2).atom)) {
      throw ParseError("'^' takes a base and an integer exponent", form.pos);
    }
    node.kind = Expr::Kind::kPower;
    node.args.push_back(expr_from_sexpr(form.at(1)));
    try {
      node.exponent = std::stol(form.at(2).atom);
    } catch (const std::exception&) {
      throw ParseError("exponent out of range", form.at(2).pos);
    }
  } else {
    throw ParseError("unknown operator '" + std::string(op) + "'", form.pos);
  }
  return make_node(std::move(node));
}

ExprPtr parse_expr(std::string_view text) {
  std::vector<SExpr> forms = parse_sexprs(text);
  if (forms.size() != 1) {
    throw ParseError("expected exactly one expression", forms.size() > 1 ? forms[1].pos : 0);
  }
  return expr_from_sexpr(forms[0]);
}

Scalar eval_expr(const Expr& e, const SymbolTable& symbols) {
  switch (e.kind) {
    case Expr::Kind::kConstant:
      return e.value;
    case Expr::Kind::kSymbol: {
      auto it = symbols.find(e.symbol);
      if (it == symbols.end()) {
        throw RegistryError("unknown symbol '" + e.symbol + "' in expression");
      }
      return it->second;
    }
    case Expr::Kind::kSum: {
      Scalar acc;
      for (const auto& a : e.args) acc += eval_expr(*a, symbols);
      return acc;
    }
    case Expr::Kind::kNegate:
      return -eval_expr(*e.args[0], symbols);
    case Expr::Kind::kDifference:
      return eval_expr(*e.args[0], symbols) - eval_expr(*e.args[1], symbols);
    case Expr::Kind::kProduct: {
      Scalar acc{1};
      for (const auto& a : e.args) acc *= eval_expr(*a, symbols);
      return acc;
    }
    case Expr::Kind::kQuotient:
      return eval_expr(*e.args[0], symbols) / eval_expr(*e.args[1], symbols);
    case Expr::Kind::kPower:
      return pow(eval_expr(*e.args[0], symbols), e.exponent);
  }
  throw Error("corrupt expression node");
}

std::string format_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kConstant:
      return format_scalar(e.value);
    case Expr::Kind::kSymbol:
      return e.symbol;
    default:
      break;
  }
  std::ostringstream out;
  out << '(';
  switch (e.kind) {
    case Expr::Kind::kSum: out << '+'; break;
    case Expr::Kind::kNegate:
    case Expr::Kind::kDifference: out << '-'; break;
    case Expr::Kind::kProduct: out << '*'; break;
    case Expr::Kind::kQuotient: out << '/'; break;
    case Expr::Kind::kPower: out << '^'; break;
    default: break;
  }
  for (const auto& a : e.args) out << ' ' << format_expr(*a);
  if (e.kind == Expr::Kind::kPower) out << ' ' << e.exponent;
  out << ')';
  return out.str();
}

void collect_symbols(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::kSymbol) out.insert(e.symbol);
  for (const auto& a : e.args) collect_symbols(*a, out);
}

}  // namespace filiform
