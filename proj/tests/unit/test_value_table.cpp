#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gdalex/error.hpp"
#include "gdalex/oracle.hpp"

using namespace gdalex;

namespace {
constexpr FactorKind P = FactorKind::path;
constexpr FactorKind C = FactorKind::cycle;
}  // namespace

TEST_CASE("section costs for the worked example factors") {
  auto c15 = compute_value_table({C, 15}, 7);
  CHECK(c15.internal(5) == 29);
  auto p15 = compute_value_table({P, 15}, 7);
  CHECK(p15.internal(4) == 29);
  CHECK(p15.internal(5) == 29);
  CHECK(p15.internal(6) == 32);
  auto c3 = compute_value_table({C, 3}, 7);
  CHECK(c3.internal(4) == 5);
  CHECK_THROWS_AS(c3.internal(8), InputError);
  CHECK_THROWS_AS(c3.external(1), InputError);
}

TEST_CASE("section costs agree with the pinned oracle") {
  for (auto b : {P, C}) {
    auto t = compute_value_table({b, 5}, 8);
    for (int k = 4; k <= 8; ++k) {
      CHECK(t.internal(k) == min_gda_pinned(ProductSpec({P, k}, {b, 5}), true, true)->value);
      CHECK(t.external(k) == min_gda_pinned(ProductSpec({P, k}, {b, 5}), true, false)->value);
    }
  }
}

TEST_CASE("clamps and monotonicity") {
  for (auto b : {P, C})
    for (int m = 3; m <= 10; ++m) {
      auto t = compute_value_table({b, m}, 9);
      CAPTURE(m);
      CHECK(t.internal(2) == t.internal(4));
      CHECK(t.internal(3) == t.internal(4));
      CHECK(t.external(2) == t.external(3));
      for (int k = 2; k <= 9; ++k) CHECK(t.external(k) <= t.internal(k));
      for (int k = 5; k <= 9; ++k) {
        CHECK(t.internal(k - 1) <= t.internal(k));
        CHECK(t.external(k - 1) <= t.external(k));
      }
    }
  CHECK_THROWS_AS(compute_value_table({C, 5}, 3), InputError);
}

TEST_CASE("json cache round trip") {
  auto t = compute_value_table({P, 6}, 8);
  auto back = value_table_from_json(value_table_to_json(t));
  CHECK(back.g2 == t.g2);
  CHECK(back.k_max == t.k_max);
  CHECK(back.val_internal == t.val_internal);
  CHECK(back.val_external == t.val_external);

  auto dir = std::filesystem::temp_directory_path() / "gdalex_unit_cache";
  std::filesystem::create_directories(dir);
  auto path = (dir / "table.json").string();
  save_value_table(t, path);
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  auto loaded = load_value_table(path);
  CHECK(loaded.val_internal == t.val_internal);
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed cache files are rejected") {
  CHECK_THROWS_AS(value_table_from_json("not json"), IoError);
  CHECK_THROWS_AS(value_table_from_json(R"({"g2_kind":"path","m":5})"), IoError);
  CHECK_THROWS_AS(value_table_from_json(
                      R"({"g2_kind":"path","m":5,"k_max":5,"val_I":[1,2],"val_E":[1,2,3,4],"tool_version":"1.0.0"})"),
                  IoError);
  CHECK_THROWS_AS(value_table_from_json(
                      R"({"g2_kind":"star","m":5,"k_max":4,"val_I":[1,2,3],"val_E":[1,2,3],"tool_version":"1.0.0"})"),
                  IoError);
  CHECK_THROWS_AS(load_value_table("/nonexistent/dir/table.json"), IoError);
}
