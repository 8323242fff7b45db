#include "gdalex/closed_form.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "gdalex/error.hpp"
#include "gdalex/sequence.hpp"

namespace gdalex {

std::string ComboKind::code() const {
  std::string s;
  s += g1 == FactorKind::path ? 'P' : 'C';
  s += g2 == FactorKind::path ? 'P' : 'C';
  return s;
}

std::string Threshold::to_string() const {
  switch (state) {
    case defined:
      return std::to_string(value);
    case never:
      return "never";
    case undefined:
      break;
  }
  return "undefined";
}

namespace {

std::vector<int> repeat(int count, int part) { return std::vector<int>(std::max(count, 0), part); }

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::optional<PartSequence> seq(std::vector<int> parts) {
  if (parts.empty()) return std::nullopt;
  return PartSequence(std::move(parts));
}

int combo_index(ComboKind c) {
  // column order of the threshold tables: PC, CC, PP, CP
  if (c.g2 == FactorKind::cycle) return c.g1 == FactorKind::path ? 0 : 1;
  return c.g1 == FactorKind::path ? 2 : 3;
}

}  // namespace

CandidateSet candidate_sequences(int n) {
  if (n < 8) throw UnsupportedError("candidate families are defined for n >= 8");
  const int p = n / 5, r = n % 5, q = n / 6, s = n % 6;
  CandidateSet f;

  if (r == 0)
    f[0] = seq(repeat(p, 5));
  else if (r == 1)
    f[0] = seq(cat(repeat(p - 1, 5), {6}));
  else
    f[0] = seq(cat({r}, repeat(p, 5)));

  // 5/6 compositions: a fives, b sixes
  std::optional<std::pair<int, int>> most_fives, most_sixes;
  for (int a = 0; 5 * a <= n; ++a) {
    if ((n - 5 * a) % 6) continue;
    std::pair<int, int> ab{a, (n - 5 * a) / 6};
    if (!most_sixes) most_sixes = ab;
    most_fives = ab;
  }
  if (most_fives) f[1] = seq(cat(repeat(most_fives->first, 5), repeat(most_fives->second, 6)));
  if (n == 19) f[1] = PartSequence{3, 5, 5, 6};
  if (most_sixes) f[2] = seq(cat(repeat(most_sixes->first, 5), repeat(most_sixes->second, 6)));

  switch (s) {
    case 0:
      f[3] = seq(repeat(q, 6));
      break;
    case 1:
      f[3] = seq(cat(repeat(q - 1, 6), {7}));
      break;
    case 2:
      f[3] = seq(cat({3, 5}, repeat(q - 1, 6)));
      break;
    case 3:
    case 5:
      f[3] = seq(cat({s}, repeat(q, 6)));
      break;
    case 4:
      f[3] = seq(cat({5, 5}, repeat(q - 1, 6)));
      break;
  }
  return f;
}

std::array<Threshold, 3> thresholds(int n, ComboKind combo) {
  auto fam = candidate_sequences(n);
  const int col = combo_index(combo);
  std::array<Threshold, 3> t{Threshold::none(), Threshold::none(), Threshold::none()};

  if (fam[0] && fam[1] && *fam[0] != *fam[1]) {
    static constexpr int by_residue[5][4] = {
        {13, 13, 8, 8}, {0, 0, 0, 0}, {8, 6, 5, 4}, {9, 8, 7, 5}, {11, 11, 7, 7}};
    if (n == 19) {
      static constexpr int special[4] = {9, -1, 5, -1};
      t[0] = special[col] < 0 ? Threshold::unreachable() : Threshold::at(special[col]);
    } else if (n % 5 != 1) {
      t[0] = Threshold::at(by_residue[n % 5][col]);
    }
  }

  if (fam[1] && fam[2] && *fam[1] != *fam[2])
    t[1] = Threshold::at(combo.g2 == FactorKind::cycle ? 13 : 8);

  if (fam[2] && fam[3] && *fam[2] != *fam[3]) {
    switch (n % 6) {
      case 1: {
        static constexpr int row[4] = {18, 18, 11, 11};
        t[2] = Threshold::at(row[col]);
        break;
      }
      case 2:
      case 3: {
        static constexpr int row[4] = {19, -1, 6, -1};
        t[2] = row[col] < 0 ? Threshold::unreachable() : Threshold::at(row[col]);
        break;
      }
      default:
        break;
    }
  }
  return t;
}

long gamma_small(const ProductSpec& spec) {
  const int n = spec.n(), m = spec.m();
  const bool g1_path = spec.g1().kind == FactorKind::path;
  const bool g2_cycle = spec.g2().kind == FactorKind::cycle;
  if (n > 7 || n < (g1_path ? 2 : 3))
    throw UnsupportedError("small-order values cover n <= 7, got n=" + std::to_string(n));

  if (m == 3) {
    static const std::map<std::string, std::vector<long>> m3 = {
        {"PC", {3, 5, 5, 7, 8, 10}},  // n = 2..7
        {"CC", {5, 5, 7, 10, 10}},    // n = 3..7
        {"PP", {3, 4, 5, 5, 8, 9}},
        {"CP", {5, 5, 5, 8, 9}},
    };
    return m3.at(ComboKind::of(spec).code()).at(n - (g1_path ? 2 : 3));
  }

  switch (n) {
    case 2:
      return 2 * (m / 2);
    case 3:
      if (!g1_path) return m + (m + 1) / 2;
      return g2_cycle ? m + std::max(2, (m - 2) / 2) : m + (m - 1) / 2;
    case 4:
      return 2L * m - 1;
    case 5:
      return (g2_cycle && m == 4) ? 8 : 2L * m - 1;
    case 6:
      return g2_cycle ? 2L * m + 4 : 2L * m + 2;
    default:
      return g2_cycle ? 3L * m + 1 : 3L * m;
  }
}

long gamma_m3(int n, FactorKind g2_kind) {
  if (n < 8) throw UnsupportedError("m = 3 closed forms need n >= 8");
  if (g2_kind == FactorKind::cycle) {
    switch (n % 4) {
      case 0:
        return 5L * n / 4;
      case 1:
        return 5L * (n - 5) / 4 + 7;
      case 2:
        return 5L * (n - 6) / 4 + 8;
      default:
        return 5L * (n - 3) / 4 + 5;
    }
  }
  switch (n % 5) {
    case 0:
      return n;
    case 1:
      return (n - 6) + 8L;
    case 2:
    case 3:
      return (n - n % 5) + 4L;
    default:
      return (n - 4) + 5L;
  }
}

namespace {

SequenceValueContext family_context(const ProductSpec& spec, const ValueTable& table) {
  if (spec.n() < 8 || spec.m() < 4)
    throw UnsupportedError("candidate families apply to n >= 8 and m >= 4");
  if (!(table.g2 == spec.g2())) throw InputError("value table is for a different second factor");
  if (table.k_max < 7) throw InputError("value table must cover parts up to 7");
  // every family has at least two parts here, so no single-section override
  return SequenceValueContext{spec.g1().kind, spec.n(), table, std::nullopt};
}

GammaResult evaluate(const SequenceValueContext& ctx, const PartSequence& w, int family) {
  GammaResult r;
  r.value = sequence_value(ctx, w);
  r.method = Method::closed_form;
  r.sequence = w;
  r.family = family;
  return r;
}

}  // namespace

GammaResult gamma_min_of_four(const ProductSpec& spec, const ValueTable& table) {
  auto ctx = family_context(spec, table);
  auto fam = candidate_sequences(spec.n());
  std::optional<GammaResult> best;
  for (int i = 0; i < 4; ++i) {
    if (!fam[i]) continue;
    auto r = evaluate(ctx, *fam[i], i + 1);
    if (!best || r.value < best->value) best = std::move(r);
  }
  if (!best) throw std::logic_error("no candidate family resolved");
  return *best;
}

GammaResult gamma_via_thresholds(const ProductSpec& spec, const ValueTable& table) {
  auto ctx = family_context(spec, table);
  auto fam = candidate_sequences(spec.n());
  auto t = thresholds(spec.n(), ComboKind::of(spec));
  const int m = spec.m();
  constexpr long kInf = 1L << 30;

  auto bound = [&](const Threshold& th) -> std::optional<long> {
    if (th.state == Threshold::defined) return th.value;
    if (th.state == Threshold::never) return kInf;
    return std::nullopt;  // skipped
  };
  auto t1 = bound(t[0]), t2 = bound(t[1]), t3 = bound(t[2]);

  std::vector<int> hits;
  long lo = kInf;
  if (t1) lo = std::min(lo, *t1);
  if (t2) lo = std::min(lo, *t2);
  if (m < lo) hits.push_back(1);
  if (t1 && *t1 <= m && (!t2 || m <= *t2)) hits.push_back(2);
  if (t3 && (!t2 || *t2 <= m) && m < *t3) hits.push_back(3);
  long hi = -kInf;
  if (t3) hi = std::max(hi, *t3);
  if (t2) hi = std::max(hi, *t2);
  if (m >= hi) hits.push_back(4);

  std::optional<int> chosen;
  bool conflict = false;
  for (int i : hits) {
    if (!fam[i - 1]) continue;
    if (!chosen)
      chosen = i;
    else if (*fam[*chosen - 1] != *fam[i - 1])
      conflict = true;
  }
  if (!chosen || conflict) {
    auto r = gamma_min_of_four(spec, table);
    r.threshold_fallback = true;
    return r;
  }
  return evaluate(ctx, *fam[*chosen - 1], *chosen);
}

const ValueTable& cached_value_table(FactorSpec g2) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, ValueTable> tables;
  std::pair<int, int> key{static_cast<int>(g2.kind), g2.order};
  {
    std::lock_guard lock(mu);
    auto it = tables.find(key);
    if (it != tables.end()) return it->second;
  }
  ValueTable t = compute_value_table(g2, 9);
  std::lock_guard lock(mu);
  return tables.emplace(key, std::move(t)).first->second;
}

GammaResult gamma(const ProductSpec& spec, const ClosedFormOptions& options) {
  GammaResult r;
  r.method = Method::closed_form;
  if (spec.n() <= 7) {
    r.value = gamma_small(spec);
    return r;
  }
  if (spec.m() == 3) {
    r.value = gamma_m3(spec.n(), spec.g2().kind);
    return r;
  }
  const ValueTable& table = options.table ? *options.table : cached_value_table(spec.g2());
  return options.use_thresholds ? gamma_via_thresholds(spec, table)
                                : gamma_min_of_four(spec, table);
}

}  // namespace gdalex
