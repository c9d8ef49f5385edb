#include <doctest.h>

#include "filiform/algebra.hpp"
#include "filiform/errors.hpp"
#include "filiform/params.hpp"
#include "filiform/rng.hpp"

using namespace filiform;

namespace {

ParamVector make_params(int n, std::vector<const char*> texts) {
  std::vector<Scalar> alpha;
  for (std::size_t i = 0; i + 1 < texts.size(); ++i)
    alpha.push_back(parse_scalar(texts[i]));
  return ParamVector(n, std::move(alpha), parse_scalar(texts.back()));
}

Vector basis(int dim, int i) {
  Vector e(static_cast<std::size_t>(dim));
  e[static_cast<std::size_t>(i)] = Scalar(1);
  return e;
}

}  // namespace

TEST_CASE("null-parameter table has only the backbone products") {
  StructureTensor T = build_table_first_class(make_params(4, {"0", "0", "0"}));
  int nonzero = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k)
        if (!T.at(i, j, k).is_zero()) ++nonzero;
  CHECK(nonzero == 4);  // e0e0=e2, e1e0=e2, e2e0=e3, e3e0=e4
  CHECK(T.at(0, 0, 2) == Scalar(1));
  CHECK(T.at(1, 0, 2) == Scalar(1));
  CHECK(T.at(2, 0, 3) == Scalar(1));
  CHECK(T.at(3, 0, 4) == Scalar(1));
}

TEST_CASE("generic dim-5 table places theta and the e_j e_1 rows") {
  // L(1,0,lambda): e0e1 = e3 + lambda e4, e1e1 = e3, e2e1 = e4.
  Scalar lambda = "7/3"_q;
  ParamVector p(4, {Scalar(1), Scalar(0)}, lambda);
  StructureTensor T = build_table_first_class(p);
  CHECK(T.at(0, 1, 3) == Scalar(1));
  CHECK(T.at(0, 1, 4) == lambda);
  CHECK(T.at(1, 1, 3) == Scalar(1));
  CHECK(T.at(1, 1, 4) == Scalar(0));
  CHECK(T.at(2, 1, 4) == Scalar(1));
  CHECK(T.at(3, 1, 4) == Scalar(0));
}

TEST_CASE("dim-8 family table includes the printed e2 e1 row") {
  // Family (1,-2,5,-14,l,2(l+21)) at l = 3 lives in dimension 8 (the e2 e1
  // row reaches e7): e2e1 = e4 - 2e5 + 5e6 - 14e7.
  ParamVector p = make_params(
      7, {"1", "-2", "5", "-14", "3", "48"});
  StructureTensor T = build_table_first_class(p);
  CHECK(T.at(2, 1, 4) == Scalar(1));
  CHECK(T.at(2, 1, 5) == Scalar(-2));
  CHECK(T.at(2, 1, 6) == Scalar(5));
  CHECK(T.at(2, 1, 7) == Scalar(-14));
}

TEST_CASE("product is the bilinear extension") {
  ParamVector p(4, {Scalar(1), Scalar(0)}, Scalar(0));  // L(1,0,0), dim 5
  StructureTensor T = build_table_first_class(p);
  SUBCASE("basis products read the table") {
    CHECK(product(T, basis(5, 1), basis(5, 0)) == T.basis_product(1, 0));
  }
  SUBCASE("(e0+e1)^2 = 2e2 + 2e3") {
    Vector v = basis(5, 0);
    v[1] = Scalar(1);
    Vector sq = product(T, v, v);
    Vector expected(5);
    expected[2] = Scalar(2);
    expected[3] = Scalar(2);
    CHECK(sq == expected);
  }
  SUBCASE("zero argument annihilates") {
    Vector zero(5);
    CHECK(product(T, zero, basis(5, 0)) == zero);
  }
  SUBCASE("dimension mismatch throws") {
    Vector bad(4);
    CHECK_THROWS_AS(product(T, bad, basis(5, 0)), DimensionMismatch);
  }
  SUBCASE("bilinearity on random vectors") {
    Splitmix64 g(42);
    for (int trial = 0; trial < 20; ++trial) {
      Vector x(5), y(5), z(5);
      for (int i = 0; i < 5; ++i) {
        x[i] = rand_scalar(g);
        y[i] = rand_scalar(g);
        z[i] = rand_scalar(g);
      }
      Scalar a = rand_scalar(g), b = rand_scalar(g);
      Vector ax_by(5);
      for (int i = 0; i < 5; ++i) ax_by[i] = a * x[i] + b * y[i];
      Vector lhs = product(T, ax_by, z);
      Vector px = product(T, x, z), py = product(T, y, z);
      Vector rhs(5);
      for (int i = 0; i < 5; ++i) rhs[i] = a * px[i] + b * py[i];
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("check_leibniz accepts random first-class tables") {
  Splitmix64 g(7);
  for (int n = 4; n <= 7; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      ParamVector p = rand_params(g, n);
      CHECK(check_leibniz(build_table_first_class(p)).empty());
    }
}

TEST_CASE("check_leibniz accepts a generic dim-8 instance") {
  ParamVector p = make_params(7, {"1", "0", "1", "1", "1", "1"});
  CHECK(check_leibniz(build_table_first_class(p)).empty());
}

TEST_CASE("check_leibniz reports a broken table") {
  // Zeroing e0 e0 = e2 in the null table happens to leave a Leibniz algebra
  // (every identity instance degenerates), so break it where a nonzero
  // parameter makes the damage visible: on L(1,0,0) the triple (0,0,1) gives
  // e0(e0 e1) = e0 e3 = 0 versus (e0 e0)e1 - (e0 e1)e0 = -e4 after the break.
  ParamVector p = make_params(4, {"1", "0", "0"});
  StructureTensor T = build_table_first_class(p);
  T.at(0, 0, 2) = Scalar(0);  // break e0 e0 = e2
  auto violations = check_leibniz(T);
  REQUIRE(!violations.empty());
  bool found = false;
  for (const auto& v : violations)
    if (v.i == 0 && v.j == 0 && v.k == 1) found = true;
  CHECK(found);
}

TEST_CASE("the null table with e0 e0 removed still satisfies the identity") {
  // Documented counterpoint to the broken-table case above: with all
  // parameters zero the pruned table is a (different) Leibniz algebra.
  ParamVector p = make_params(4, {"0", "0", "0"});
  StructureTensor T = build_table_first_class(p);
  T.at(0, 0, 2) = Scalar(0);
  CHECK(check_leibniz(T).empty());
}

TEST_CASE("lower central series and filiform profile") {
  SUBCASE("dim-5 null parameters") {
    auto dims = lower_central_series(
        build_table_first_class(make_params(4, {"0", "0", "0"})));
    CHECK(dims == std::vector<int>{5, 3, 2, 1, 0});
  }
  SUBCASE("dim-5 L(1,0,lambda)") {
    auto dims = lower_central_series(
        build_table_first_class(make_params(4, {"1", "0", "5"})));
    CHECK(dims == std::vector<int>{5, 3, 2, 1, 0});
  }
  SUBCASE("dim-8 null parameters") {
    auto dims = lower_central_series(
        build_table_first_class(make_params(7, {"0", "0", "0", "0", "0", "0"})));
    CHECK(dims == std::vector<int>{8, 6, 5, 4, 3, 2, 1, 0});
  }
  SUBCASE("abelian table is not filiform") {
    StructureTensor zero(5);
    CHECK_FALSE(check_filiform(zero));
    CHECK(lower_central_series(zero) == std::vector<int>{5, 0});
  }
  SUBCASE("random parameters are filiform in all supported dimensions") {
    Splitmix64 g(11);
    for (int n = 4; n <= 7; ++n)
      for (int trial = 0; trial < 5; ++trial)
        CHECK(check_filiform(build_table_first_class(rand_params(g, n))));
  }
  SUBCASE("non-nilpotent table throws") {
    StructureTensor T(3);
    T.at(0, 0, 0) = Scalar(1);  // idempotent direction
    CHECK_THROWS_AS(lower_central_series(T), NotNilpotent);
  }
}

TEST_CASE("render_table output style") {
  StructureTensor T = build_table_first_class(make_params(4, {"1", "0", "-2"}));
  std::string text = render_table(T);
  CHECK(text.find("e_0 e_0 = e_2") != std::string::npos);
  CHECK(text.find("e_0 e_1 = e_3 + (-2)*e_4") != std::string::npos);
  CHECK(text.find("e_2 e_1 = e_4") != std::string::npos);
}

TEST_CASE("params JSON round trip") {
  ParamVector p = make_params(6, {"1", "-2", "5", "-14", "1/3"});
  ParamVector q = params_from_json(params_to_json(p));
  CHECK(p == q);
  CHECK_THROWS_AS(params_from_json("{\"n\": 5}"), ParseError);
  CHECK_THROWS_AS(params_from_json("not json"), ParseError);
  CHECK_THROWS_AS(params_from_json(
                      "{\"n\": 5, \"alpha\": [\"1\"], \"theta\": \"0\"}"),
                  DimensionMismatch);
}
