#include "report.hpp"

#include <stdexcept>

#include <json.hpp>

namespace gdalex::report {

using nlohmann::json;

namespace {

json factor_json(const Factor& f) { return {{"kind", f.kind}, {"order", f.order}}; }

Factor factor_from(const json& j) {
  Factor f{j.at("kind").get<std::string>(), j.at("order").get<int>()};
  if (f.kind != "path" && f.kind != "cycle") throw std::runtime_error("bad factor kind " + f.kind);
  return f;
}

json optional_list(const std::optional<std::vector<int>>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<std::vector<int>> list_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::vector<int>>();
}

}  // namespace

std::string render_json(const ResultRecord& r) {
  json j;
  j["g1"] = factor_json(r.g1);
  j["g2"] = factor_json(r.g2);
  j["gamma"] = r.gamma;
  j["method"] = r.method;
  j["sequence"] = optional_list(r.sequence);
  j["witness_profile"] = optional_list(r.witness_profile);
  return j.dump();
}

ResultRecord parse_json(const std::string& text) {
  try {
    json j = json::parse(text);
    ResultRecord r;
    r.g1 = factor_from(j.at("g1"));
    r.g2 = factor_from(j.at("g2"));
    r.gamma = j.at("gamma").get<long>();
    r.method = j.at("method").get<std::string>();
    r.sequence = list_from(j.at("sequence"));
    r.witness_profile = list_from(j.at("witness_profile"));
    return r;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed result: ") + e.what());
  }
}

std::string csv_header() { return "n,m,g1_kind,g2_kind,gamma,method\n"; }

std::string render_csv_row(const ResultRecord& r) {
  return std::to_string(r.g1.order) + "," + std::to_string(r.g2.order) + "," + r.g1.kind + "," +
         r.g2.kind + "," + std::to_string(r.gamma) + "," + r.method + "\n";
}

std::string run_length(const std::vector<int>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (i) out += ",";
    if (j - i > 1) out += "[" + std::to_string(j - i) + "]";
    out += std::to_string(parts[i]);
    i = j;
  }
  return out + ")";
}

}  // namespace gdalex::report
