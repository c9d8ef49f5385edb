#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "filiform/errors.hpp"
#include "filiform/expr.hpp"
#include "filiform/registry.hpp"
#include "filiform/strata.hpp"

using namespace filiform;

TEST_CASE("expression parser round-trips through the canonical form") {
  const char* samples[] = {
      "(+ a3 (* 2 (^ D4 2)))",
      "(/ (^ (+ D6 (* 3 (^ D4 2))) 3) (* D4 (^ D7 2)))",
      "(- (* -5 l1) 14)",
      "-7/3",
      "th",
  };
  for (const char* text : samples) {
    ExprPtr e = parse_expr(text);
    const std::string rendered = format_expr(*e);
    CHECK(rendered == text);
    CHECK(format_expr(*parse_expr(rendered)) == rendered);
  }
}

TEST_CASE("expression evaluation follows exact field arithmetic") {
  SymbolTable symbols;
  symbols["a3"] = parse_scalar("2");
  symbols["D4"] = parse_scalar("-1/2");
  symbols["l1"] = parse_scalar("0+1i");

  CHECK(eval_expr(*parse_expr("(+ a3 (* 4 D4))"), symbols) == Scalar(0));
  CHECK(eval_expr(*parse_expr("(^ D4 3)"), symbols) == parse_scalar("-1/8"));
  CHECK(eval_expr(*parse_expr("(^ l1 2)"), symbols) == parse_scalar("-1"));
  CHECK(eval_expr(*parse_expr("(/ a3 (^ l1 2))"), symbols) == parse_scalar("-2"));
  CHECK(eval_expr(*parse_expr("(- a3)"), symbols) == parse_scalar("-2"));

  CHECK_THROWS_AS(eval_expr(*parse_expr("(/ 1 (+ a3 (* 4 D4)))"), symbols),
                  DivisionByZero);
  CHECK_THROWS_AS(eval_expr(*parse_expr("missing"), symbols), RegistryError);
  CHECK_THROWS_AS((void)parse_expr("(+ 1"), ParseError);
  CHECK_THROWS_AS((void)parse_expr("(% 1 2)"), ParseError);
}

TEST_CASE("bundled registry loads with the advertised stratum counts") {
  const auto& reg = Registry::instance();
  REQUIRE(reg.dims() == std::vector<int>{5, 6, 7, 8});
  CHECK(reg.strata(5).size() == 7);
  CHECK(reg.strata(6).size() == 11);
  CHECK(reg.strata(7).size() == 17);
  CHECK(reg.strata(8).size() == 25);
  CHECK_THROWS_AS((void)reg.strata(9), UnsupportedDimension);
  CHECK_THROWS_AS((void)reg.stratum(5, "U99"), RegistryError);

  // Ids are U1..Uk in order for every dimension.
  for (int dim : reg.dims()) {
    int expected = 1;
    for (const auto& def : reg.strata(dim)) {
      CHECK(def.dim == dim);
      CHECK(def.id == "U" + std::to_string(expected++));
    }
  }
}

TEST_CASE("parametric strata carry matching invariant and slot counts") {
  for (int dim : Registry::instance().dims()) {
    for (const auto& def : Registry::instance().strata(dim)) {
      CHECK(def.family.size() == static_cast<std::size_t>(dim) - 2);
      if (def.parametric) {
        CHECK(def.lambda_count >= 1);
        CHECK(def.invariants.size() == static_cast<std::size_t>(def.lambda_count));
        CHECK(def.param_invariants.size() == def.invariants.size());
      } else {
        CHECK(def.lambda_count == 0);
        CHECK(def.invariants.empty());
      }
    }
  }
}

TEST_CASE("every family instantiation satisfies its own stratum predicate") {
  // Slot values chosen clear of every documented guard.
  const std::vector<Scalar> lam = {parse_scalar("2"), parse_scalar("3"),
                                   parse_scalar("4"), parse_scalar("6")};
  for (int dim : Registry::instance().dims()) {
    for (const auto& def : Registry::instance().strata(dim)) {
      std::vector<Scalar> slots(lam.begin(), lam.begin() + def.lambda_count);
      const ParamVector p = instantiate_family(def, slots);
      CHECK(predicate_matches(def, p));
      CHECK(classify(p) == def.id);
    }
  }
}

TEST_CASE("guard-excluded slot values are rejected") {
  const auto& u2 = Registry::instance().stratum(6, "U2");
  CHECK_THROWS_AS((void)instantiate_family(u2, {parse_scalar("5")}),
                  GuardViolation);
  const auto& u10 = Registry::instance().stratum(8, "U10");
  CHECK_THROWS_AS((void)instantiate_family(u10, {parse_scalar("0")}),
                  GuardViolation);
  CHECK_THROWS_AS((void)instantiate_family(u10, {parse_scalar("-3")}),
                  GuardViolation);
  // Arity is checked before guards.
  CHECK_THROWS_AS((void)instantiate_family(u2, {}), DimensionMismatch);
}

TEST_CASE("registry text validation rejects malformed inputs") {
  CHECK_THROWS_AS((void)Registry::from_text("(registry-version 2)"), RegistryError);
  CHECK_THROWS_AS((void)Registry::from_text("(registry-version 1) (dimension 5)"),
                  RegistryError);  // wrong stratum count (zero)
  const char* unknown_symbol = R"(
    (registry-version 1)
    (dimension 5
      (stratum U1 parametric (predicate (nonzero q9))
        (invariants q9) (family 1 0 l1)))
  )";
  CHECK_THROWS_AS((void)Registry::from_text(unknown_symbol), RegistryError);
}

namespace {

// The bundled registry text with its dimension-5 block swapped for an
// all-singleton variant, so an override is observably different from the
// bundled data (whose dimension-5 U1 is parametric).
std::string singleton_dim5_override_text() {
  std::string text(default_registry_text());
  const std::string block = R"((dimension 5
  (stratum U1 singleton (predicate (nonzero a3)) (family 1 0 0))
  (stratum U2 singleton (predicate (zero a3) (nonzero a4) (zero th)) (family 0 1 0))
  (stratum U3 singleton (predicate (zero a3) (nonzero a4) (nonzero th)) (family 0 1 1))
  (stratum U4 singleton (predicate (zero a3) (zero a4) (nonzero th)) (family 0 0 1))
  (stratum U5 singleton (predicate (zero a3) (zero a4) (zero th)) (family 0 0 0))
  (stratum U6 singleton (predicate (nonzero a3) (nonzero th)) (family 1 0 1))
  (stratum U7 singleton (predicate (nonzero a3) (zero th)) (family 1 -2 0))
)
)";
  const auto p5 = text.find("(dimension 5");
  const auto p6 = text.find("(dimension 6");
  REQUIRE(p5 != std::string::npos);
  REQUIRE(p6 != std::string::npos);
  REQUIRE(p5 < p6);
  text.replace(p5, p6 - p5, block);
  return text;
}

}  // namespace

TEST_CASE("alternative registry files pass through the same validator") {
  // A registry must cover every supported dimension; partial files are
  // rejected outright.
  const char* partial = R"(
(registry-version 1)
(dimension 5
  (stratum U1 singleton (predicate (nonzero a3)) (family 1 0 0))
  (stratum U2 singleton (predicate (zero a3) (nonzero a4) (zero th)) (family 0 1 0))
  (stratum U3 singleton (predicate (zero a3) (nonzero a4) (nonzero th)) (family 0 1 1))
  (stratum U4 singleton (predicate (zero a3) (zero a4) (nonzero th)) (family 0 0 1))
  (stratum U5 singleton (predicate (zero a3) (zero a4) (zero th)) (family 0 0 0))
  (stratum U6 singleton (predicate (nonzero a3) (nonzero th)) (family 1 0 1))
  (stratum U7 singleton (predicate (nonzero a3) (zero th)) (family 1 -2 0))
)
)";
  CHECK_THROWS_AS((void)Registry::from_text(partial), RegistryError);

  // A complete override loads, and its content wins over the bundled data.
  const std::string text = singleton_dim5_override_text();
  const Registry reg = Registry::from_text(text);
  CHECK(reg.dims() == std::vector<int>{5, 6, 7, 8});
  CHECK(reg.strata(5).size() == 7);
  CHECK_FALSE(reg.stratum(5, "U1").parametric);
  CHECK(Registry::instance().stratum(5, "U1").parametric);

  // The same text round-trips through a file — the path the
  // FILIFORM_REGISTRY environment variable feeds into.
  const std::string path = "registry_override_check.sexpr";
  {
    std::ofstream out(path);
    out << text;
  }
  const Registry from_file = Registry::from_file(path);
  CHECK_FALSE(from_file.stratum(5, "U1").parametric);
  CHECK(from_file.strata(8).size() == 25);
  std::remove(path.c_str());
}
