#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gdalex/error.hpp"
#include "gdalex/oracle.hpp"

namespace gdalex {

using nlohmann::json;

std::string value_table_to_json(const ValueTable& t) {
  json j;
  j["g2_kind"] = std::string(to_string(t.g2.kind));
  j["m"] = t.g2.order;
  j["k_max"] = t.k_max;
  j["val_I"] = t.val_internal;
  j["val_E"] = t.val_external;
  j["tool_version"] = std::string(tool_version());
  return j.dump(2) + "\n";
}

ValueTable value_table_from_json(const std::string& text) {
  ValueTable t;
  try {
    json j = json::parse(text);
    t.g2.kind = parse_factor_kind(j.at("g2_kind").get<std::string>());
    t.g2.order = j.at("m").get<int>();
    t.k_max = j.at("k_max").get<int>();
    t.val_internal = j.at("val_I").get<std::vector<long>>();
    t.val_external = j.at("val_E").get<std::vector<long>>();
    validate_factor(t.g2);
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed value table: ") + e.what());
  } catch (const InputError& e) {
    throw IoError(std::string("malformed value table: ") + e.what());
  }
  auto expected = static_cast<std::size_t>(t.k_max - 1);
  if (t.k_max < 4 || t.val_internal.size() != expected || t.val_external.size() != expected)
    throw IoError("value table arrays must hold k_max - 1 entries (k = 2..k_max)");
  return t;
}

ValueTable load_value_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open value table '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return value_table_from_json(buf.str());
}

void save_value_table(const ValueTable& table, const std::string& path) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out << value_table_to_json(table);
    out.flush();
    if (!out) throw IoError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move value table into '" + path + "'");
  }
}

}  // namespace gdalex
