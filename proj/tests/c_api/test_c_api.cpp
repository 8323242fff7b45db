#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "gdalex/gda_lex.h"

TEST_CASE("compute through the shared library") {
  gdalex_result* r = nullptr;
  REQUIRE(gdalex_compute(GDALEX_PATH, 20, GDALEX_CYCLE, 15, GDALEX_METHOD_CLOSED_FORM, 0, nullptr,
                         &r) == GDALEX_OK);
  CHECK(gdalex_result_value(r) == 116);
  CHECK(gdalex_result_method(r) == GDALEX_METHOD_CLOSED_FORM);
  CHECK(gdalex_result_family(r) >= 1);
  int parts[8] = {};
  CHECK(gdalex_result_sequence(r, parts, 8) == 4);
  CHECK(parts[0] == 5);
  CHECK(gdalex_result_witness_profile(r, nullptr, 0) == -1);
  gdalex_result_free(r);

  REQUIRE(gdalex_compute(GDALEX_CYCLE, 6, GDALEX_CYCLE, 3, GDALEX_METHOD_SUBSETS, 0, nullptr, &r) ==
          GDALEX_OK);
  CHECK(gdalex_result_value(r) == 10);
  int profile[6] = {};
  CHECK(gdalex_result_witness_profile(r, profile, 6) == 6);
  int total = 0;
  for (int s : profile) total += s;
  CHECK(total == 10);
  uint64_t masks[2] = {};
  CHECK(gdalex_result_witness_masks(r, masks, 2) == 6);
  gdalex_result_free(r);
}

TEST_CASE("status codes and error text") {
  gdalex_result* r = nullptr;
  CHECK(gdalex_compute(GDALEX_PATH, 2, GDALEX_PATH, 2, GDALEX_METHOD_COLUMN_DP, 0, nullptr, &r) ==
        GDALEX_ERR_INPUT);
  CHECK(r == nullptr);
  CHECK(std::string(gdalex_last_error()).size() > 0);
  CHECK(gdalex_compute(GDALEX_PATH, 9, GDALEX_CYCLE, 3, GDALEX_METHOD_SUBSETS, 0, nullptr, &r) ==
        GDALEX_ERR_UNSUPPORTED);
  CHECK(gdalex_compute(GDALEX_PATH, 9, GDALEX_CYCLE, 3, GDALEX_METHOD_SUBSETS, 0, nullptr, nullptr) ==
        GDALEX_ERR_INPUT);
  CHECK(gdalex_compute(GDALEX_PATH, 9, GDALEX_CYCLE, 3, static_cast<gdalex_method>(9), 0, nullptr,
                       &r) == GDALEX_ERR_INPUT);
  CHECK(std::string(gdalex_version()) == "1.0.0");
  CHECK(std::string(gdalex_method_name(GDALEX_METHOD_COLUMN_DP)) == "column-dp");
}

TEST_CASE("value tables through the shared library") {
  gdalex_value_table* t = nullptr;
  REQUIRE(gdalex_value_table_compute(GDALEX_PATH, 15, 7, &t) == GDALEX_OK);
  long v = 0;
  CHECK(gdalex_value_table_get(t, 6, 1, &v) == GDALEX_OK);
  CHECK(v == 32);
  CHECK(gdalex_value_table_get(t, 8, 1, &v) == GDALEX_ERR_INPUT);
  CHECK(gdalex_value_table_k_max(t) == 7);

  auto path = (std::filesystem::temp_directory_path() / "gdalex_capi_table.json").string();
  CHECK(gdalex_value_table_save(t, path.c_str()) == GDALEX_OK);
  gdalex_value_table* back = nullptr;
  REQUIRE(gdalex_value_table_load(path.c_str(), &back) == GDALEX_OK);
  CHECK(gdalex_value_table_get(back, 5, 1, &v) == GDALEX_OK);
  CHECK(v == 29);

  gdalex_result* r = nullptr;
  REQUIRE(gdalex_compute(GDALEX_CYCLE, 20, GDALEX_PATH, 15, GDALEX_METHOD_SEQUENCE_DP, 0, back, &r) ==
          GDALEX_OK);
  CHECK(gdalex_result_value(r) <= 122);
  gdalex_result_free(r);
  CHECK(gdalex_compute(GDALEX_CYCLE, 20, GDALEX_CYCLE, 15, GDALEX_METHOD_SEQUENCE_DP, 0, back, &r) ==
        GDALEX_ERR_INPUT);

  gdalex_value_table_free(back);
  gdalex_value_table_free(t);
  std::filesystem::remove(path);
  CHECK(gdalex_value_table_load("/nonexistent/t.json", &back) == GDALEX_ERR_IO);
}
