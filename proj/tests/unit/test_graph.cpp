#include <doctest.h>

#include <algorithm>

#include "gdalex/error.hpp"
#include "gdalex/graph.hpp"

using namespace gdalex;

namespace {
ProductSpec make(FactorKind a, int n, FactorKind b, int m) { return ProductSpec({a, n}, {b, m}); }
constexpr FactorKind P = FactorKind::path;
constexpr FactorKind C = FactorKind::cycle;
}  // namespace

TEST_CASE("first factor neighbours") {
  CHECK(g1_neighbors(make(P, 5, C, 3), 1) == std::vector<int>{2});
  CHECK(g1_neighbors(make(C, 5, C, 3), 1) == std::vector<int>{2, 5});
  CHECK(g1_neighbors(make(P, 5, C, 3), 3) == std::vector<int>{2, 4});
  CHECK(g1_neighbors(make(C, 3, P, 3), 2) == std::vector<int>{1, 3});
  CHECK_THROWS_AS(g1_neighbors(make(P, 5, C, 3), 0), InputError);
  CHECK_THROWS_AS(g1_neighbors(make(P, 5, C, 3), 6), InputError);
}

TEST_CASE("closed neighbourhood sizes") {
  auto a = make(P, 3, C, 4);
  CHECK(closed_neighborhood(a, {2, 0}).size() == 11);
  CHECK(degree(a, {2, 0}) == 10);
  // an end row of the path has in-column degree 1, an inner row 2
  CHECK(degree(make(P, 3, P, 4), {2, 0}) == 9);
  CHECK(degree(make(P, 3, P, 4), {2, 1}) == 10);
  CHECK(degree(make(P, 2, C, 3), {1, 0}) == 5);
  CHECK_THROWS_AS(closed_neighborhood(a, {4, 0}), InputError);
  CHECK_THROWS_AS(closed_neighborhood(a, {1, 4}), InputError);
}

TEST_CASE("factor validation") {
  CHECK_THROWS_AS(ProductSpec({P, 5}, {P, 2}), InputError);
  CHECK_THROWS_AS(ProductSpec({C, 2}, {C, 5}), InputError);
  CHECK_THROWS_AS(ProductSpec({P, 1}, {C, 5}), InputError);
  CHECK_THROWS_AS(ProductSpec({P, 4}, {C, 65}), UnsupportedError);
  CHECK_NOTHROW(ProductSpec({P, 2}, {C, 3}));
  CHECK(parse_factor_kind("cycle") == C);
  CHECK(parse_factor_kind("P") == P);
  CHECK_THROWS_AS(parse_factor_kind("star"), InputError);
  CHECK(describe(make(P, 20, C, 15)) == "P20 o C15");
}

TEST_CASE("exhaustive symmetry and degree formula for n, m <= 8") {
  for (auto a : {P, C})
    for (auto b : {P, C})
      for (int n = (a == C ? 3 : 2); n <= 8; ++n)
        for (int m = 3; m <= 8; ++m) {
          auto spec = make(a, n, b, m);
          CHECK(spec.vertex_count() == n * m);
          for (int i = 1; i <= n; ++i)
            for (int j = 0; j < m; ++j) {
              VertexId v{i, j};
              auto nv = closed_neighborhood(spec, v);
              REQUIRE(std::find(nv.begin(), nv.end(), v) != nv.end());
              int a_cols = static_cast<int>(g1_neighbors(spec, i).size());
              CHECK(degree(spec, v) == a_cols * m + factor_degree(spec.g2(), j));
              CHECK(static_cast<int>(nv.size()) == degree(spec, v) + 1);
              for (const auto& u : nv) {
                auto nu = closed_neighborhood(spec, u);
                CHECK(std::binary_search(nu.begin(), nu.end(), v));
              }
            }
        }
}
