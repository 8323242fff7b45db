#include "gdalex/oracle.hpp"

#include <bit>

#include "column_model.hpp"
#include "gdalex/error.hpp"
#include "gdalex/verify.hpp"

namespace gdalex {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::subsets:
      return "subsets";
    case Method::column_dp:
      return "column-dp";
    case Method::sequence_dp:
      return "sequence-dp";
    case Method::closed_form:
      return "closed-form";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "subsets") return Method::subsets;
  if (text == "column-dp") return Method::column_dp;
  if (text == "sequence-dp") return Method::sequence_dp;
  if (text == "closed-form" || text == "closed") return Method::closed_form;
  throw InputError("unknown method '" + std::string(text) + "'");
}

std::string_view tool_version() { return "1.0.0"; }

long ValueTable::internal(int k) const {
  if (k < 2 || k > k_max) throw InputError("section length " + std::to_string(k) +
                                           " outside value table range 2.." +
                                           std::to_string(k_max));
  return val_internal.at(k - 2);
}

long ValueTable::external(int k) const {
  if (k < 2 || k > k_max) throw InputError("section length " + std::to_string(k) +
                                           " outside value table range 2.." +
                                           std::to_string(k_max));
  return val_external.at(k - 2);
}

GammaResult min_gda_subsets(const ProductSpec& spec) {
  const long total = spec.vertex_count();
  if (total > kSubsetsMaxVertices)
    throw UnsupportedError("subset enumeration is capped at n*m <= " +
                           std::to_string(kSubsetsMaxVertices) + ", got " +
                           std::to_string(total));
  const int n = spec.n();
  const int m = spec.m();
  const RowMask col = full_mask(m);
  ColumnSet set(spec);
  // a member's closed neighbourhood has at least m+2 vertices
  const int start = (m + 2) / 2;
  for (int k = start; k <= total; ++k) {
    // Gosper's hack: all total-bit words with k ones, ascending.
    std::uint64_t word = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << total;
    while (word < limit) {
      for (int c = 0; c < n; ++c) set.set_mask(c + 1, (word >> (c * m)) & col);
      if (is_gda(set)) {
        GammaResult r;
        r.value = k;
        r.method = Method::subsets;
        r.witness = set;
        return r;
      }
      std::uint64_t low = word & -word;
      std::uint64_t ripple = word + low;
      word = (((ripple ^ word) >> 2) / low) | ripple;
    }
  }
  throw std::logic_error("the full vertex set is always a GDA");
}

namespace {

ColumnSet realize(const ProductSpec& spec, const std::vector<int>& adjacent,
                  const std::vector<int>& sizes) {
  ColumnSet set(spec);
  for (int i = 0; i < spec.n(); ++i)
    set.set_mask(i + 1, detail::column_needs(spec.g2(), adjacent[i]).best_mask[sizes[i]]);
  return set;
}

std::vector<int> adjacency_counts(const ProductSpec& spec) {
  std::vector<int> adj(spec.n());
  for (int c = 1; c <= spec.n(); ++c)
    adj[c - 1] = static_cast<int>(g1_neighbors(spec, c).size());
  return adj;
}

void check_column_caps(const ProductSpec& spec, bool strict = true) {
  int cap = spec.g1().kind == FactorKind::cycle && strict ? kColumnsMaxRowsCycle : kColumnsMaxRows;
  if (spec.m() > cap)
    throw UnsupportedError("column DP is capped at m <= " + std::to_string(cap) + " for a " +
                           std::string(to_string(spec.g1().kind)) + " first factor, got m=" +
                           std::to_string(spec.m()));
}

}  // namespace

GammaResult min_gda_columns(const ProductSpec& spec, bool enforce_caps) {
  check_column_caps(spec, enforce_caps);
  auto adj = adjacency_counts(spec);
  detail::ProfileSolution sol;
  bool cyclic = spec.g1().kind == FactorKind::cycle;
  if (!detail::solve_profile(spec.g2(), adj, std::vector<int>(spec.n(), 0),
                             std::vector<int>(spec.n(), spec.m()), cyclic, sol))
    throw std::logic_error("the full vertex set is always a GDA");
  GammaResult r;
  r.value = sol.cost;
  r.method = Method::column_dp;
  r.witness = realize(spec, adj, sol.sizes);
  return r;
}

std::optional<GammaResult> min_gda_constrained(const ProductSpec& spec,
                                               const std::vector<int>& min_size,
                                               const std::vector<int>& max_size) {
  check_column_caps(spec);
  if (static_cast<int>(min_size.size()) != spec.n() ||
      static_cast<int>(max_size.size()) != spec.n())
    throw InputError("column bounds must have one entry per column");
  auto adj = adjacency_counts(spec);
  detail::ProfileSolution sol;
  if (!detail::solve_profile(spec.g2(), adj, min_size, max_size,
                             spec.g1().kind == FactorKind::cycle, sol))
    return std::nullopt;
  GammaResult r;
  r.value = sol.cost;
  r.method = Method::column_dp;
  r.witness = realize(spec, adj, sol.sizes);
  return r;
}

std::optional<GammaResult> min_gda_pinned(const ProductSpec& spec, bool first_empty,
                                          bool last_empty) {
  if (spec.g1().kind != FactorKind::path)
    throw InputError("pinned boundaries are defined on a path first factor");
  std::vector<int> lo(spec.n(), 0), hi(spec.n(), spec.m());
  if (first_empty) hi.front() = 0;
  if (last_empty) hi.back() = 0;
  return min_gda_constrained(spec, lo, hi);
}

ValueTable compute_value_table(FactorSpec g2, int k_max) {
  validate_factor(g2);
  if (g2.order < 3) throw InputError("second factor must have order at least 3");
  if (k_max < 4) throw InputError("value tables need k_max >= 4");
  if (g2.order > kColumnsMaxRows)
    throw UnsupportedError("value tables are capped at m <= " + std::to_string(kColumnsMaxRows));
  ValueTable t;
  t.g2 = g2;
  t.k_max = k_max;
  t.val_internal.assign(k_max - 1, 0);
  t.val_external.assign(k_max - 1, 0);
  for (int k = 3; k <= k_max; ++k) {
    ProductSpec section({FactorKind::path, k}, g2);
    t.val_external[k - 2] = min_gda_pinned(section, true, false).value().value;
    if (k >= 4) t.val_internal[k - 2] = min_gda_pinned(section, true, true).value().value;
  }
  t.val_internal[0] = t.val_internal[1] = t.val_internal[2];
  t.val_external[0] = t.val_external[1];
  return t;
}

}  // namespace gdalex
