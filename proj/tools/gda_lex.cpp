// gda-lex: command-line front end over the libgdalex C interface.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gdalex/gda_lex.h"
#include "report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResultDeleter {
  void operator()(gdalex_result* r) const { gdalex_result_free(r); }
};
struct TableDeleter {
  void operator()(gdalex_value_table* t) const { gdalex_value_table_free(t); }
};
using ResultPtr = std::unique_ptr<gdalex_result, ResultDeleter>;
using TablePtr = std::shared_ptr<gdalex_value_table>;

void check(gdalex_status st, const std::string& what) {
  if (st != GDALEX_OK) throw UsageError(what + ": " + gdalex_last_error());
}

struct Factor {
  gdalex_kind kind = GDALEX_PATH;
  int order = 0;
};

const char* kind_name(gdalex_kind k) { return k == GDALEX_PATH ? "path" : "cycle"; }
char kind_letter(gdalex_kind k) { return k == GDALEX_PATH ? 'P' : 'C'; }

gdalex_kind parse_kind(const std::string& s) {
  if (s == "path" || s == "P") return GDALEX_PATH;
  if (s == "cycle" || s == "C") return GDALEX_CYCLE;
  throw UsageError("unknown factor kind '" + s + "' (expected path or cycle)");
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("bad " + what + " '" + s + "'");
  return v;
}

// "kind:order", or "kind" alone when `order_optional`.
Factor parse_factor(const std::string& s, bool order_optional) {
  auto colon = s.find(':');
  if (colon == std::string::npos) {
    if (!order_optional) throw UsageError("expected <path|cycle>:<order>, got '" + s + "'");
    return {parse_kind(s), 0};
  }
  return {parse_kind(s.substr(0, colon)), parse_int(s.substr(colon + 1), "order")};
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = parse_int(s, "range");
    return {v, v};
  }
  int a = parse_int(s.substr(0, dots), "range start");
  int b = parse_int(s.substr(dots + 2), "range end");
  if (a > b) throw UsageError("empty range '" + s + "'");
  return {a, b};
}

gdalex_method parse_method(const std::string& s) {
  if (s == "closed" || s == "closed-form") return GDALEX_METHOD_CLOSED_FORM;
  if (s == "sequence-dp") return GDALEX_METHOD_SEQUENCE_DP;
  if (s == "column-dp") return GDALEX_METHOD_COLUMN_DP;
  if (s == "subsets") return GDALEX_METHOD_SUBSETS;
  throw UsageError("unknown method '" + s + "'");
}

std::string describe(Factor g1, Factor g2) {
  return std::string(1, kind_letter(g1.kind)) + std::to_string(g1.order) + " o " +
         kind_letter(g2.kind) + std::to_string(g2.order);
}

// Value tables: a single cache file, or a directory of per-factor files.
class TableCache {
 public:
  explicit TableCache(std::string path) : path_(std::move(path)) {}

  // Returns nullptr when no cache was requested.
  TablePtr get(gdalex_kind kind, int m) {
    if (path_.empty()) return nullptr;
    std::lock_guard lock(mu_);
    auto key = std::make_pair(kind, m);
    if (auto it = tables_.find(key); it != tables_.end()) return it->second;
    namespace fs = std::filesystem;
    TablePtr t;
    if (fs::is_directory(path_)) {
      fs::path file = fs::path(path_) / (std::string("valtable-") + kind_name(kind) + "-" +
                                         std::to_string(m) + ".json");
      t = load(file.string());
      if (!t) {
        t = compute(kind, m);
        check(gdalex_value_table_save(t.get(), file.string().c_str()), "saving value table");
      }
    } else if (!single_loaded_) {
      single_loaded_ = true;
      single_ = load(path_);
      if (!single_) {
        // first use of a missing cache file: fill it for this factor
        single_ = compute(kind, m);
        check(gdalex_value_table_save(single_.get(), path_.c_str()), "saving value table");
      }
    }
    if (!t && single_ && matches(single_, kind, m)) t = single_;
    tables_[key] = t;
    return t;
  }

  static TablePtr compute(gdalex_kind kind, int m, int k_max = 9) {
    gdalex_value_table* raw = nullptr;
    check(gdalex_value_table_compute(kind, m, k_max, &raw), "computing value table");
    return TablePtr(raw, TableDeleter{});
  }

 private:
  static TablePtr load(const std::string& file) {
    if (!std::filesystem::exists(file)) return nullptr;
    gdalex_value_table* raw = nullptr;
    check(gdalex_value_table_load(file.c_str(), &raw), "loading '" + file + "'");
    return TablePtr(raw, TableDeleter{});
  }

  // The C interface does not expose the factor, so read it from the file.
  bool matches(const TablePtr&, gdalex_kind kind, int m) const {
    std::ifstream in(path_);
    auto j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) return false;
    return j.value("g2_kind", "") == kind_name(kind) && j.value("m", -1) == m;
  }

  std::string path_;
  std::mutex mu_;
  bool single_loaded_ = false;
  TablePtr single_;
  std::map<std::pair<gdalex_kind, int>, TablePtr> tables_;
};

struct Computed {
  ResultPtr result;
  gdalex_status status = GDALEX_OK;
  std::string error;
};

Computed run(Factor g1, Factor g2, gdalex_method method, unsigned flags,
             const gdalex_value_table* table) {
  gdalex_result* raw = nullptr;
  Computed c;
  c.status = gdalex_compute(g1.kind, g1.order, g2.kind, g2.order, method, flags, table, &raw);
  c.result.reset(raw);
  if (c.status != GDALEX_OK) c.error = gdalex_last_error();
  return c;
}

std::optional<std::vector<int>> int_list(int (*get)(const gdalex_result*, int*, size_t),
                                         const gdalex_result* r) {
  int len = get(r, nullptr, 0);
  if (len < 0) return std::nullopt;
  std::vector<int> v(len);
  get(r, v.data(), v.size());
  return v;
}

std::vector<std::uint64_t> masks_of(const gdalex_result* r) {
  int len = gdalex_result_witness_masks(r, nullptr, 0);
  if (len < 0) return {};
  std::vector<std::uint64_t> v(len);
  gdalex_result_witness_masks(r, v.data(), v.size());
  return v;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::trunc | std::ios::binary);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

// ---------------------------------------------------------------- compute

struct ComputeOpts {
  std::string g1, g2, method = "auto", cache, out;
  bool witness = false, json = false, thresholds = false;
};

int cmd_compute(const ComputeOpts& o) {
  Factor g1 = parse_factor(o.g1, false);
  Factor g2 = parse_factor(o.g2, false);
  TableCache cache(o.cache);
  TablePtr table = cache.get(g2.kind, g2.order);
  const bool is_auto = o.method == "auto";
  gdalex_method method = is_auto ? GDALEX_METHOD_CLOSED_FORM : parse_method(o.method);
  unsigned flags = o.thresholds ? GDALEX_FLAG_THRESHOLDS : 0U;

  Computed c = run(g1, g2, method, flags, table.get());
  if (c.status != GDALEX_OK) throw UsageError(c.error);
  const gdalex_result* r = c.result.get();

  if (is_auto) {
    // cheap cross-check; disagreement is reported, not fatal
    Computed s = run(g1, g2, GDALEX_METHOD_SEQUENCE_DP, 0, table.get());
    if (s.status == GDALEX_OK && gdalex_result_value(s.result.get()) != gdalex_result_value(r))
      std::cerr << "warning: closed-form gives " << gdalex_result_value(r)
                << " but sequence-dp gives " << gdalex_result_value(s.result.get()) << " for "
                << describe(g1, g2) << "\n";
  }

  // witness from the column DP when the chosen method has none
  Computed wit;
  const gdalex_result* wsrc = r;
  if (o.witness && gdalex_result_witness_masks(r, nullptr, 0) < 0) {
    wit = run(g1, g2, GDALEX_METHOD_COLUMN_DP, 0, nullptr);
    if (wit.status != GDALEX_OK)
      throw UsageError("no witness available: " + wit.error);
    if (gdalex_result_value(wit.result.get()) != gdalex_result_value(r))
      std::cerr << "warning: witness from column-dp has size "
                << gdalex_result_value(wit.result.get()) << "\n";
    wsrc = wit.result.get();
  }

  gdalex::report::ResultRecord rec;
  rec.g1 = {kind_name(g1.kind), g1.order};
  rec.g2 = {kind_name(g2.kind), g2.order};
  rec.gamma = gdalex_result_value(r);
  rec.method = gdalex_method_name(gdalex_result_method(r));
  rec.sequence = int_list(gdalex_result_sequence, r);
  if (o.witness) rec.witness_profile = int_list(gdalex_result_witness_profile, wsrc);

  Output out(o.out);
  if (o.json) {
    out.out() << gdalex::report::render_json(rec) << "\n";
    return kExitOk;
  }
  out.out() << "gamma(" << describe(g1, g2) << ") = " << rec.gamma << "  [" << rec.method << "]\n";
  if (rec.sequence) out.out() << "sequence: " << gdalex::report::run_length(*rec.sequence) << "\n";
  if (int fam = gdalex_result_family(r)) out.out() << "family: f" << fam << "\n";
  if (gdalex_result_threshold_fallback(r))
    out.out() << "note: threshold case split undecided, used the minimum of the four families\n";
  if (o.witness) {
    out.out() << "witness profile:";
    for (int s : *rec.witness_profile) out.out() << " " << s;
    out.out() << "\n";
    auto masks = masks_of(wsrc);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      std::string bits;
      for (int row = 0; row < g2.order; ++row) bits += ((masks[i] >> row) & 1U) ? '1' : '0';
      out.out() << "  column " << i + 1 << ": " << bits << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- table

struct TableOpts {
  int table = 0;
  std::string g1, g2, n_range, m_range = "3", format = "md", out;
};

int cmd_table(const TableOpts& o) {
  gdalex_kind k1, k2;
  if (o.table) {
    static const gdalex_kind g1s[] = {GDALEX_PATH, GDALEX_CYCLE, GDALEX_PATH, GDALEX_CYCLE};
    static const gdalex_kind g2s[] = {GDALEX_CYCLE, GDALEX_CYCLE, GDALEX_PATH, GDALEX_PATH};
    if (o.table < 1 || o.table > 4) throw UsageError("--table must be 1..4");
    k1 = g1s[o.table - 1];
    k2 = g2s[o.table - 1];
  } else {
    if (o.g1.empty() || o.g2.empty()) throw UsageError("table needs --table or --g1/--g2 kinds");
    k1 = parse_factor(o.g1, true).kind;
    k2 = parse_factor(o.g2, true).kind;
  }
  const int lo = k1 == GDALEX_PATH ? 2 : 3;
  auto [n0, n1] = o.n_range.empty() ? std::make_pair(lo, 7) : parse_range(o.n_range);
  auto [m0, m1] = parse_range(o.m_range);
  if (n0 < lo || n1 > 7)
    throw UsageError("table rows cover n in " + std::to_string(lo) + "..7");
  if (m0 < 3) throw UsageError("m must be at least 3");

  std::vector<gdalex::report::ResultRecord> cells;
  std::map<std::pair<int, int>, long> value;
  for (int n = n0; n <= n1; ++n)
    for (int m = m0; m <= m1; ++m) {
      Computed c = run({k1, n}, {k2, m}, GDALEX_METHOD_CLOSED_FORM, 0, nullptr);
      if (c.status != GDALEX_OK) throw UsageError(c.error);
      gdalex::report::ResultRecord rec;
      rec.g1 = {kind_name(k1), n};
      rec.g2 = {kind_name(k2), m};
      rec.gamma = gdalex_result_value(c.result.get());
      rec.method = "closed-form";
      value[{n, m}] = rec.gamma;
      cells.push_back(rec);
    }

  Output out(o.out);
  auto& os = out.out();
  if (o.format == "csv") {
    os << gdalex::report::csv_header();
    for (const auto& c : cells) os << gdalex::report::render_csv_row(c);
  } else if (o.format == "json") {
    os << "[";
    for (std::size_t i = 0; i < cells.size(); ++i)
      os << (i ? ",\n " : "") << gdalex::report::render_json(cells[i]);
    os << "]\n";
  } else if (o.format == "md" || o.format == "text") {
    os << "| n |";
    for (int m = m0; m <= m1; ++m) os << " m=" << m << " |";
    os << "\n|---|";
    for (int m = m0; m <= m1; ++m) os << "---|";
    os << "\n";
    for (int n = n0; n <= n1; ++n) {
      os << "| " << n << " |";
      for (int m = m0; m <= m1; ++m) os << " " << value[{n, m}] << " |";
      os << "\n";
    }
  } else {
    throw UsageError("unknown format '" + o.format + "'");
  }
  return kExitOk;
}

// ---------------------------------------------------------------- crosscheck

struct CrossOpts {
  std::string n_range = "8..24", m_range = "3..8", methods = "closed,column-dp",
              combos = "PC,CC,PP,CP", cache, format = "text", out;
  long max_nm = 0;
  int jobs = 1;
  bool thresholds = false;
};

struct Cell {
  Factor g1, g2;
  std::vector<long> values;
  std::string error;
  gdalex_status status = GDALEX_OK;
};

int cmd_crosscheck(const CrossOpts& o) {
  std::vector<gdalex_method> methods;
  std::vector<std::string> method_names;
  {
    std::stringstream ss(o.methods);
    for (std::string tok; std::getline(ss, tok, ',');) {
      methods.push_back(parse_method(tok));
      method_names.push_back(gdalex_method_name(methods.back()));
    }
  }
  if (methods.size() < 2) throw UsageError("crosscheck needs at least two methods");
  std::vector<std::pair<gdalex_kind, gdalex_kind>> combos;
  {
    std::stringstream ss(o.combos);
    for (std::string tok; std::getline(ss, tok, ',');) {
      if (tok.size() != 2) throw UsageError("combo codes look like PC, CC, PP, CP");
      combos.emplace_back(parse_kind(tok.substr(0, 1)), parse_kind(tok.substr(1, 1)));
    }
  }
  auto [n0, n1] = parse_range(o.n_range);
  auto [m0, m1] = parse_range(o.m_range);
  if (n0 < 2 || m0 < 3) throw UsageError("ranges need n >= 2 and m >= 3");

  std::vector<Cell> cells;
  for (auto [k1, k2] : combos)
    for (int n = n0; n <= n1; ++n)
      for (int m = m0; m <= m1; ++m) {
        if (k1 == GDALEX_CYCLE && n < 3) continue;
        if (o.max_nm > 0 && static_cast<long>(n) * m > o.max_nm) continue;
        cells.push_back({{k1, n}, {k2, m}, {}, {}, GDALEX_OK});
      }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return std::make_tuple(a.g1.kind, a.g2.kind, a.g1.order, a.g2.order) <
           std::make_tuple(b.g1.kind, b.g2.kind, b.g1.order, b.g2.order);
  });

  TableCache cache(o.cache);
  const unsigned flags = o.thresholds ? GDALEX_FLAG_THRESHOLDS : 0U;
  auto started = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cells.size();) {
      Cell& c = cells[i];
      try {
        TablePtr table = cache.get(c.g2.kind, c.g2.order);
        for (auto mth : methods) {
          Computed r = run(c.g1, c.g2, mth, flags, table.get());
          if (r.status != GDALEX_OK) {
            c.status = r.status;
            c.error = std::string(gdalex_method_name(mth)) + ": " + r.error;
            break;
          }
          c.values.push_back(gdalex_result_value(r.result.get()));
        }
      } catch (const std::exception& e) {
        c.status = GDALEX_ERR_IO;
        c.error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(1, o.jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  std::vector<const Cell*> mismatches, failures;
  for (const auto& c : cells) {
    if (c.status != GDALEX_OK)
      failures.push_back(&c);
    else if (std::adjacent_find(c.values.begin(), c.values.end(), std::not_equal_to<>()) !=
             c.values.end())
      mismatches.push_back(&c);
  }

  Output out(o.out);
  auto& os = out.out();
  if (o.format == "json") {
    nlohmann::json j;
    j["cells"] = cells.size();
    j["wall_seconds"] = secs;
    j["mismatches"] = nlohmann::json::array();
    for (const Cell* c : mismatches) {
      nlohmann::json e;
      e["g1"] = {{"kind", kind_name(c->g1.kind)}, {"order", c->g1.order}};
      e["g2"] = {{"kind", kind_name(c->g2.kind)}, {"order", c->g2.order}};
      for (std::size_t k = 0; k < method_names.size(); ++k) e["values"][method_names[k]] = c->values[k];
      j["mismatches"].push_back(e);
    }
    j["errors"] = nlohmann::json::array();
    for (const Cell* c : failures) j["errors"].push_back(describe(c->g1, c->g2) + ": " + c->error);
    os << j.dump(2) << "\n";
  } else {
    for (const Cell* c : mismatches) {
      os << "MISMATCH " << describe(c->g1, c->g2) << ":";
      for (std::size_t k = 0; k < method_names.size(); ++k)
        os << " " << method_names[k] << "=" << c->values[k];
      os << "\n";
    }
    for (const Cell* c : failures) os << "ERROR " << describe(c->g1, c->g2) << ": " << c->error << "\n";
    char buf[160];
    std::snprintf(buf, sizeof buf, "cells=%zu mismatches=%zu errors=%zu time=%.2fs\n", cells.size(),
                  mismatches.size(), failures.size(), secs);
    os << buf;
  }
  if (!failures.empty()) return kExitUsage;
  return mismatches.empty() ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- valtable

struct ValOpts {
  std::string g2, out, format = "text";
  int k_max = 9;
};

int cmd_valtable(const ValOpts& o) {
  Factor g2 = parse_factor(o.g2, false);
  TablePtr t = TableCache::compute(g2.kind, g2.order, o.k_max);
  if (!o.out.empty()) check(gdalex_value_table_save(t.get(), o.out.c_str()), "saving value table");
  auto get = [&](int k, int internal) {
    long v = 0;
    check(gdalex_value_table_get(t.get(), k, internal, &v), "reading value table");
    return v;
  };
  if (o.format == "json") {
    nlohmann::json j;
    j["g2_kind"] = kind_name(g2.kind);
    j["m"] = g2.order;
    j["k_max"] = o.k_max;
    for (int k = 2; k <= o.k_max; ++k) {
      j["val_I"].push_back(get(k, 1));
      j["val_E"].push_back(get(k, 0));
    }
    j["tool_version"] = gdalex_version();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "k   internal  external   (" << kind_letter(g2.kind) << g2.order << ")\n";
    for (int k = 2; k <= o.k_max; ++k) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%-3d %8ld  %8ld\n", k, get(k, 1), get(k, 0));
      std::cout << buf;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global defensive alliance numbers of lexicographic products of paths and cycles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gdalex_version()));

  ComputeOpts co;
  auto* compute = app.add_subcommand("compute", "compute one value");
  compute->add_option("--g1", co.g1, "first factor, <path|cycle>:<n>")->required();
  compute->add_option("--g2", co.g2, "second factor, <path|cycle>:<m>")->required();
  compute->add_option("--method", co.method, "auto|closed|sequence-dp|column-dp|subsets");
  compute->add_flag("--thresholds", co.thresholds, "closed form via the threshold case split");
  compute->add_flag("--witness", co.witness, "print a minimum alliance");
  compute->add_flag("--json", co.json, "emit JSON");
  compute->add_option("--cache", co.cache, "value table cache file or directory");
  compute->add_option("--out", co.out, "write output to FILE");

  TableOpts to;
  auto* table = app.add_subcommand("table", "regenerate the small-order tables (n <= 7)");
  table->add_option("--table", to.table, "1=PC 2=CC 3=PP 4=CP");
  table->add_option("--g1", to.g1, "first factor kind");
  table->add_option("--g2", to.g2, "second factor kind");
  table->add_option("--n-range", to.n_range, "A..B");
  table->add_option("--m-range", to.m_range, "A..B (default 3)");
  table->add_option("--format", to.format, "md|csv|json");
  table->add_option("--out", to.out, "write output to FILE");

  CrossOpts xo;
  auto* cross = app.add_subcommand("crosscheck", "compare methods over ranges");
  cross->add_option("--n-range", xo.n_range, "A..B (default 8..24)");
  cross->add_option("--m-range", xo.m_range, "A..B (default 3..8)");
  cross->add_option("--methods", xo.methods, "comma list, at least two");
  cross->add_option("--combos", xo.combos, "comma list of PC,CC,PP,CP");
  cross->add_option("--max-nm", xo.max_nm, "skip cells with n*m above this");
  cross->add_option("--jobs", xo.jobs, "worker threads");
  cross->add_option("--cache", xo.cache, "value table cache file or directory");
  cross->add_flag("--thresholds", xo.thresholds, "closed form via the threshold case split");
  cross->add_option("--format", xo.format, "text|json");
  cross->add_option("--out", xo.out, "write output to FILE");

  ValOpts vo;
  auto* val = app.add_subcommand("valtable", "compute a section value table");
  val->add_option("--g2", vo.g2, "<path|cycle>:<m>")->required();
  val->add_option("--k-max", vo.k_max, "largest section length (default 9)");
  val->add_option("--out", vo.out, "cache file to write (atomic)");
  val->add_option("--format", vo.format, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(co);
    if (*table) return cmd_table(to);
    if (*cross) return cmd_crosscheck(xo);
    if (*val) return cmd_valtable(vo);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
