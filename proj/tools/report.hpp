#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gdalex::report {

struct Factor {
  std::string kind;  // "path" | "cycle"
  int order = 0;
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct ResultRecord {
  Factor g1;
  Factor g2;
  long gamma = 0;
  std::string method;
  std::optional<std::vector<int>> sequence;
  std::optional<std::vector<int>> witness_profile;
  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

std::string render_json(const ResultRecord& r);
/// Throws std::runtime_error on malformed input.
ResultRecord parse_json(const std::string& text);

std::string csv_header();
std::string render_csv_row(const ResultRecord& r);

/// "(3,[2]5,6)"-style run-length form.
std::string run_length(const std::vector<int>& parts);

}  // namespace gdalex::report
