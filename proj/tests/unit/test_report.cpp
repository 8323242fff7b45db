#include <doctest.h>

#include <stdexcept>

#include "report.hpp"

using namespace gdalex::report;

TEST_CASE("json round trip") {
  ResultRecord full{{"path", 20}, {"cycle", 15}, 116, "closed-form", std::vector<int>{5, 5, 5, 5},
                    std::vector<int>{0, 14, 15, 0}};
  CHECK(parse_json(render_json(full)) == full);
  ResultRecord bare{{"cycle", 6}, {"path", 3}, 8, "column-dp", std::nullopt, std::nullopt};
  CHECK(parse_json(render_json(bare)) == bare);
  CHECK(render_json(bare).find("\"sequence\":null") != std::string::npos);
}

TEST_CASE("malformed results") {
  CHECK_THROWS_AS(parse_json("{"), std::runtime_error);
  CHECK_THROWS_AS(parse_json(R"({"g1":{"kind":"path","order":3}})"), std::runtime_error);
  CHECK_THROWS_AS(
      parse_json(R"({"g1":{"kind":"tree","order":3},"g2":{"kind":"path","order":3},"gamma":4,"method":"x","sequence":null,"witness_profile":null})"),
      std::runtime_error);
}

TEST_CASE("csv and run-length text") {
  CHECK(csv_header() == "n,m,g1_kind,g2_kind,gamma,method\n");
  ResultRecord r{{"path", 7}, {"cycle", 3}, 10, "column-dp", std::nullopt, std::nullopt};
  CHECK(render_csv_row(r) == "7,3,path,cycle,10,column-dp\n");
  CHECK(run_length({3, 5, 5, 6}) == "(3,[2]5,6)");
  CHECK(run_length({6}) == "(6)");
}
