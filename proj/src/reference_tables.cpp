#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "filiform/errors.hpp"
#include "filiform/expr.hpp"
#include "filiform/tables.hpp"

namespace filiform {

namespace {

// Transcribed classification tables, one block per dimension. Each item
// carries the printed representative tuple (a3..an, th) and the printed
// product rows: (row i (k coeff)...) means e_i e_1 = sum coeff * e_k; rows
// the source leaves out stay out here too. The transcription is verbatim,
// slips included -- cross_check_reference_tables() exists to surface them.

constexpr const char* kDim5 = R"TABLES(
(item 1 (tuple 1 0 l1)
  (row 0 (3 1) (4 l1))
  (row 1 (3 1))
  (row 2 (4 1)))
(item 2 (tuple 1 -2 0)
  (row 0 (3 1))
  (row 1 (3 1) (4 -2))
  (row 2 (4 1)))
(item 3 (tuple 1 -2 -2)
  (row 0 (3 1) (4 -2))
  (row 1 (3 1) (4 -2))
  (row 2 (4 1)))
(item 4 (tuple 0 1 0)
  (row 1 (4 1)))
(item 5 (tuple 0 1 1)
  (row 0 (4 1))
  (row 1 (4 1)))
(item 6 (tuple 0 0 1)
  (row 0 (4 1)))
(item 7 (tuple 0 0 0))
)TABLES";

constexpr const char* kDim6 = R"TABLES(
(item 1 (tuple 1 0 l1 l2)
  (row 0 (3 1) (5 l2))
  (row 1 (3 1) (5 l1))
  (row 2 (4 1))
  (row 3 (5 1)))
(item 2 (tuple 1 -2 l1 (- (* 2 l1) 5))
  (row 0 (3 1) (4 -2) (5 (- (* 2 l1) 5)))
  (row 1 (3 1) (4 -2) (5 l1))
  (row 2 (4 1) (5 -2))
  (row 3 (5 1)))
(item 3 (tuple 0 1 1 l1)
  (row 0 (4 1) (5 l1))
  (row 1 (4 1) (5 1))
  (row 2 (5 1)))
(item 4 (tuple 1 -2 0 0)
  (row 0 (3 1) (4 -2))
  (row 1 (3 1) (4 -2))
  (row 2 (4 1) (5 -2))
  (row 3 (5 1)))
(item 5 (tuple 1 -2 5 0)
  (row 0 (3 1) (4 -2))
  (row 1 (3 1) (4 -2) (5 5))
  (row 2 (4 1) (5 -2))
  (row 3 (5 1)))
(item 6 (tuple 0 1 0 1)
  (row 0 (4 1) (5 1))
  (row 1 (4 1))
  (row 2 (5 1)))
(item 7 (tuple 0 1 0 0)
  (row 0 (4 1))
  (row 1 (4 1))
  (row 2 (5 1)))
(item 8 (tuple 0 0 1 0)
  (row 1 (5 1)))
(item 9 (tuple 0 0 1 1)
  (row 0 (5 1))
  (row 1 (5 1)))
(item 10 (tuple 0 0 0 1)
  (row 0 (5 1)))
(item 11 (tuple 0 0 0 0))
)TABLES";

constexpr const char* kDim7 = R"TABLES(
(item 1 (tuple 1 0 l1 l2 l3)
  (row 0 (3 1) (5 l1) (6 l3))
  (row 1 (3 1) (5 l1) (6 l2))
  (row 2 (4 1) (6 l1))
  (row 3 (5 1))
  (row 4 (6 1)))
(item 2 (tuple 1 -2 l1 (- (* -5 l1) 14) l2)
  (row 0 (3 1) (4 -2) (5 l1) (6 l2))
  (row 1 (3 1) (4 -2) (5 l1) (6 (- (* -5 l1) 14)))
  (row 2 (4 1) (5 -2) (6 l1))
  (row 3 (5 1) (6 -2))
  (row 4 (6 1)))
(item 3 (tuple 1 -2 0 16 l1)
  (row 0 (3 1) (4 -2) (6 l1))
  (row 1 (3 1) (4 -2) (6 16))
  (row 2 (4 1) (5 -2))
  (row 3 (5 1) (6 -2))
  (row 4 (6 1)))
(item 4 (tuple 1 -2 5 l1 (- (* 2 l1) 14))
  (row 0 (3 1) (4 -2) (5 5) (6 (- (* 2 l1) 14)))
  (row 1 (3 1) (4 -2) (5 5) (6 l1))
  (row 2 (4 1) (5 -2) (6 5))
  (row 3 (5 1) (6 -2))
  (row 4 (6 1)))
(item 5 (tuple 0 1 1 l1 l2)
  (row 0 (4 1) (5 1) (6 l2))
  (row 1 (4 1) (5 1) (6 l1))
  (row 2 (5 1) (6 1))
  (row 3 (6 1)))
(item 6 (tuple 0 1 0 l1 (- (* 2 l1) 3))
  (row 0 (4 1) (6 (- (* 2 l1) 3)))
  (row 1 (4 1) (6 l1))
  (row 2 (4 1))
  (row 3 (6 1)))
(item 7 (tuple 0 0 1 1 l1)
  (row 0 (5 1) (6 l1))
  (row 1 (5 1) (6 1))
  (row 2 (6 1)))
(item 8 (tuple 1 -2 5 0 0)
  (row 0 (3 1) (4 -2) (5 5))
  (row 1 (3 1) (4 -2) (5 5))
  (row 2 (4 1) (5 -2) (6 5))
  (row 3 (5 1) (6 -2))
  (row 4 (6 1)))
(item 9 (tuple 1 -2 5 14 0)
  (row 0 (3 1) (4 -2) (5 5))
  (row 1 (3 1) (4 -2) (5 5) (6 -14))
  (row 2 (4 1) (5 -2) (6 5))
  (row 3 (5 1) (6 -2))
  (row 4 (6 1)))
(item 10 (tuple 0 1 0 0 0)
  (row 0 (4 1))
  (row 1 (4 1))
  (row 2 (5 1))
  (row 3 (6 1)))
(item 11 (tuple 0 1 0 -3 0)
  (row 0 (4 1))
  (row 1 (4 1) (6 -3))
  (row 2 (5 1))
  (row 3 (6 1)))
(item 12 (tuple 0 0 1 0 1)
  (row 0 (5 1) (6 1))
  (row 2 (6 1)))
(item 13 (tuple 0 0 1 0 0)
  (row 0 (5 1))
  (row 2 (6 1)))
(item 14 (tuple 0 0 0 1 0)
  (row 1 (6 1)))
(item 15 (tuple 0 0 0 1 1)
  (row 0 (6 1))
  (row 1 (6 1)))
(item 16 (tuple 0 0 0 0 1)
  (row 0 (6 1)))
(item 17 (tuple 0 0 0 0 0))
)TABLES";

constexpr const char* kDim8 = R"TABLES(
(item 1 (tuple 1 0 l1 l2 l3 l4)
  (row 0 (3 1) (5 l1) (6 l2) (7 l4))
  (row 1 (3 1) (5 l1) (6 l2) (7 l3))
  (row 2 (4 1) (6 l1) (7 l3))
  (row 3 (5 1) (7 l1))
  (row 4 (6 1))
  (row 5 (7 1)))
(item 2 (tuple 1 -2 l1 (- (* -5 l1) 14) l2 l3)
  (row 0 (3 1) (4 -2) (5 l1) (6 l2) (7 l3))
  (row 1 (3 1) (4 -2) (5 l1) (6 (- (* -5 l1) 14)) (7 l2))
  (row 2 (4 1) (5 -2) (6 l1) (7 (- (* -5 l1) 14)))
  (row 3 (5 1) (6 -2) (7 l1))
  (row 4 (6 1) (7 -2))
  (row 5 (7 1)))
(item 3 (tuple 1 -2 l1 (- (* -6 l1) 14) l2 (^ l1 2))
  (row 0 (3 1) (4 -2) (5 l1) (6 l2) (7 (^ l1 2)))
  (row 1 (3 1) (4 -2) (5 l1) (6 (- (* -6 l1) 14)) (7 l2))
  (row 2 (4 1) (5 -2) (6 l1) (7 (- (* -6 l1) 14)))
  (row 3 (5 1) (6 -2) (7 l1))
  (row 4 (6 1) (7 -2))
  (row 5 (7 1)))
(item 4 (tuple 1 -2 0 16 l1 l1)
  (row 0 (3 1) (4 -2) (6 16) (7 l1))
  (row 1 (3 1) (4 -2) (6 16) (7 l1))
  (row 2 (4 1) (5 -2) (7 16))
  (row 3 (5 1) (6 -2))
  (row 4 (6 1) (7 -2))
  (row 5 (7 1)))
(item 5 (tuple 1 -2 5 l1 (* -6 (- l1 7)) l2)
  (row 0 (3 1) (4 -2) (5 5) (6 l1) (7 l2))
  (row 1 (3 1) (4 -2) (5 5) (6 l1) (7 (* -6 (- l1 7))))
  (row 2 (4 1) (5 -2) (6 5) (7 l1))
  (row 3 (5 1) (6 -2) (7 5))
  (row 4 (6 1) (7 -2))
  (row 5 (7 1)))
(item 6 (tuple 1 -2 5 l1 (* -7 (- l1 6)) (^ l1 2))
  (row 0 (3 1) (4 -2) (5 5) (6 l1) (7 (^ l1 2)))
  (row 1 (3 1) (4 -2) (5 5) (6 l1) (7 (* -7 (- l1 6))))
  (row 2 (4 1) (5 -2) (6 5) (7 l1))
  (row 3 (5 1) (6 -2) (7 5))
  (row 4 (6 1) (7 -2))
  (row 5 (7 1)))
(item 7 (tuple 1 -2 5 -14 l1 (* 2 (+ l1 21)))
  (row 0 (3 1) (4 -2) (5 5) (6 -14) (7 (* 2 (+ l1 21))))
  (row 1 (3 1) (4 -2) (5 5) (6 -14) (7 l1))
  (row 2 (4 1) (5 -2) (6 5) (7 -14))
  (row 3 (5 1) (6 -2) (7 5))
  (row 4 (6 1) (7 -2))
  (row 5 (7 1)))
(item 8 (tuple 0 1 1 l1 l2 l3)
  (row 0 (4 1) (5 1) (6 l1) (7 l3))
  (row 1 (4 1) (5 1) (6 l1) (7 l2))
  (row 2 (5 1) (6 1) (7 l1))
  (row 3 (6 1) (7 1))
  (row 4 (7 1)))
(item 9 (tuple 0 1 0 l1 (+ l1 3) l2)
  (row 0 (4 1) (6 l1) (7 l2))
  (row 1 (4 1) (6 l1) (7 (+ l1 3)))
  (row 2 (5 1) (7 l1))
  (row 3 (6 1))
  (row 4 (7 1)))
(item 10 (tuple 0 1 0 l1 0 (^ l1 2))
  (row 0 (4 1) (6 l1) (7 (^ l1 2)))
  (row 1 (4 1) (6 l1))
  (row 2 (5 1) (7 l1))
  (row 3 (6 1))
  (row 4 (7 1)))
(item 11 (tuple 0 1 0 -3 l1 (+ (^ l1 2) l1))
  (row 0 (4 1) (6 -3) (7 (+ (^ l1 2) l1)))
  (row 1 (4 1) (6 -3) (7 l1))
  (row 2 (5 1) (7 -3))
  (row 3 (6 1))
  (row 4 (7 1)))
(item 12 (tuple 0 0 1 1 l1 l2)
  (row 0 (5 1) (6 1) (7 l2))
  (row 1 (5 1) (6 1) (7 l1))
  (row 2 (6 1) (7 1))
  (row 3 (7 1)))
(item 13 (tuple 0 0 1 0 l1 (+ (^ l1 2) l1))
  (row 0 (5 1) (7 (+ (^ l1 2) l1)))
  (row 1 (5 1) (7 l1))
  (row 2 (6 1))
  (row 3 (7 1)))
(item 14 (tuple 0 0 0 1 1 l1)
  (row 0 (6 1) (7 l1))
  (row 1 (6 1) (7 1))
  (row 2 (7 1)))
(item 15 (tuple 0 1 0 0 0 0)
  (row 0 (4 1))
  (row 1 (4 1))
  (row 2 (5 1))
  (row 3 (6 1))
  (row 4 (7 1)))
(item 16 (tuple 0 1 0 -3 1 1)
  (row 0 (4 1) (6 -3) (7 1))
  (row 1 (4 1) (6 -3) (7 1))
  (row 2 (5 1) (7 -3))
  (row 3 (6 1))
  (row 4 (7 1)))
(item 17 (tuple 0 1 0 -3 0 1)
  (row 0 (4 1) (6 -3) (7 1))
  (row 1 (4 1) (6 -3))
  (row 2 (5 1) (7 -3))
  (row 3 (6 1))
  (row 4 (7 1)))
(item 18 (tuple 0 0 1 0 1 1)
  (row 0 (5 1) (7 1))
  (row 1 (5 1) (7 1))
  (row 2 (6 1))
  (row 3 (7 1)))
(item 19 (tuple 0 0 1 0 0 1)
  (row 0 (5 1) (7 1))
  (row 1 (5 1))
  (row 2 (6 1))
  (row 3 (7 1)))
(item 20 (tuple 0 0 0 1 0 1)
  (row 0 (6 1) (7 1))
  (row 1 (6 1))
  (row 2 (7 1)))
(item 21 (tuple 0 0 0 1 0 0)
  (row 0 (6 1))
  (row 1 (6 1))
  (row 2 (7 1)))
(item 22 (tuple 0 0 0 0 1 0)
  (row 1 (7 1)))
(item 23 (tuple 0 0 0 0 1 1)
  (row 0 (7 1))
  (row 1 (7 1)))
(item 24 (tuple 0 0 0 0 0 1)
  (row 0 (7 1)))
(item 25 (tuple 0 0 0 0 0 0))
)TABLES";

long sexpr_int(const SExpr& node, const char* what) {
  if (node.is_list) throw RegistryError(std::string("expected an integer for ") + what);
  try {
    return std::stol(node.atom);
  } catch (const std::exception&) {
    throw RegistryError(std::string("expected an integer for ") + what + ", got " +
                        node.atom);
  }
}

std::vector<ReferenceItem> parse_reference_block(int dim, const char* text) {
  const int n = dim - 1;
  std::vector<ReferenceItem> items;
  for (const auto& form : parse_sexprs(text)) {
    if (!form.is_list || form.size() < 2 || form.head() != "item") {
      throw RegistryError("reference table block: expected (item ...)");
    }
    ReferenceItem item;
    item.index = static_cast<int>(sexpr_int(form.at(1), "item index"));
    bool saw_tuple = false;
    for (std::size_t pos = 2; pos < form.size(); ++pos) {
      const SExpr& part = form.at(pos);
      if (!part.is_list || part.size() < 1) {
        throw RegistryError("reference item: expected (tuple ...) or (row ...)");
      }
      if (part.head() == "tuple") {
        saw_tuple = true;
        for (std::size_t s = 1; s < part.size(); ++s) {
          item.tuple.push_back(expr_from_sexpr(part.at(s)));
        }
        if (item.tuple.size() != static_cast<std::size_t>(dim - 2)) {
          throw RegistryError("reference tuple arity mismatch at item " +
                              std::to_string(item.index));
        }
      } else if (part.head() == "row") {
        ReferenceRow row;
        row.i = static_cast<int>(sexpr_int(part.at(1), "row index"));
        if (row.i < 0 || row.i >= n) {
          throw RegistryError("reference row index out of range at item " +
                              std::to_string(item.index));
        }
        for (std::size_t c = 2; c < part.size(); ++c) {
          const SExpr& coeff = part.at(c);
          if (!coeff.is_list || coeff.size() != 2) {
            throw RegistryError("reference row entry: expected (k coeff)");
          }
          const int k = static_cast<int>(sexpr_int(coeff.at(0), "basis index"));
          if (k < 2 || k > n) {
            throw RegistryError("reference basis index out of range at item " +
                                std::to_string(item.index));
          }
          row.coeffs.emplace_back(k, expr_from_sexpr(coeff.at(1)));
        }
        item.rows.push_back(std::move(row));
      } else {
        throw RegistryError("reference item: unknown form " + std::string(part.head()));
      }
    }
    if (!saw_tuple) {
      throw RegistryError("reference item without a tuple: " +
                          std::to_string(item.index));
    }
    items.push_back(std::move(item));
  }
  for (std::size_t pos = 0; pos < items.size(); ++pos) {
    if (items[pos].index != static_cast<int>(pos) + 1) {
      throw RegistryError("reference items out of order in dimension " +
                          std::to_string(dim));
    }
  }
  return items;
}

}  // namespace

const std::vector<ReferenceItem>& reference_items(int dim) {
  static const std::map<int, std::vector<ReferenceItem>> all = [] {
    std::map<int, std::vector<ReferenceItem>> m;
    m.emplace(5, parse_reference_block(5, kDim5));
    m.emplace(6, parse_reference_block(6, kDim6));
    m.emplace(7, parse_reference_block(7, kDim7));
    m.emplace(8, parse_reference_block(8, kDim8));
    return m;
  }();
  auto it = all.find(dim);
  if (it == all.end()) {
    throw UnsupportedDimension("reference tables cover dimensions 5 through 8");
  }
  return it->second;
}

}  // namespace filiform
