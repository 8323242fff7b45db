#include "gdalex/sequence.hpp"

#include <algorithm>
#include <limits>

#include "gdalex/error.hpp"
#include "gdalex/verify.hpp"

namespace gdalex {

int default_max_part(int m) { return m == 3 ? 6 : 7; }

SequenceValueContext make_sequence_context(FactorKind g1_kind, int n, ValueTable table) {
  SequenceValueContext ctx{g1_kind, n, std::move(table), std::nullopt};
  if (g1_kind == FactorKind::path && n >= 2 && n <= ctx.table.k_max &&
      ctx.table.g2.order <= kColumnsMaxRows)
    ctx.single_section = min_gda_columns(ProductSpec({FactorKind::path, n}, ctx.table.g2)).value;
  return ctx;
}

long sequence_value(const SequenceValueContext& ctx, const PartSequence& w) {
  if (!is_feasible(w, ctx.n))
    throw InputError("sequence " + w.to_string() + " is not feasible for n=" +
                     std::to_string(ctx.n));
  if (w.max_part() > ctx.table.k_max)
    throw InputError("part " + std::to_string(w.max_part()) + " exceeds the value table (k_max=" +
                     std::to_string(ctx.table.k_max) + ")");
  const auto& p = w.parts();
  const auto& t = ctx.table;
  if (ctx.g1_kind == FactorKind::cycle) {
    long v = 0;
    for (int k : p) v += t.internal(k);
    return v;
  }
  if (p.size() == 1) {
    long v = t.external(p[0]);
    return ctx.single_section ? std::min(v, *ctx.single_section) : v;
  }
  long v = t.external(p.front()) + t.external(p.back());
  for (std::size_t i = 1; i + 1 < p.size(); ++i) v += t.internal(p[i]);
  return v;
}

namespace {

struct Prefix {
  long value = std::numeric_limits<long>::max();
  std::vector<int> parts;

  bool reached() const { return !parts.empty(); }
  // value, then fewer parts, then lexicographic
  bool better_than(const Prefix& o) const {
    if (!o.reached()) return reached();
    if (!reached()) return false;
    if (value != o.value) return value < o.value;
    if (parts.size() != o.parts.size()) return parts.size() < o.parts.size();
    return parts < o.parts;
  }
};

void offer(Prefix& slot, long value, std::vector<int> parts) {
  Prefix cand{value, std::move(parts)};
  if (cand.better_than(slot)) slot = std::move(cand);
}

}  // namespace

GammaResult min_sequence_value(const SequenceValueContext& ctx, int max_part) {
  const int n = ctx.n;
  const auto& t = ctx.table;
  if (max_part > t.k_max)
    throw InputError("max part " + std::to_string(max_part) + " exceeds k_max " +
                     std::to_string(t.k_max));
  const bool cyclic = ctx.g1_kind == FactorKind::cycle;
  if (n < (cyclic ? 3 : 2)) throw InputError("first factor too short");

  // prefix[s]: best leading parts summing to s, all but the first costed as internal
  std::vector<Prefix> prefix(n + 1);
  for (int k = 2; k <= std::min(max_part, n); ++k)
    offer(prefix[k], cyclic ? t.internal(k) : t.external(k), {k});
  for (int s = 2; s <= n; ++s) {
    if (!prefix[s].reached()) continue;
    for (int k = 3; k <= max_part && s + k <= n; ++k) {
      auto parts = prefix[s].parts;
      parts.push_back(k);
      offer(prefix[s + k], prefix[s].value + t.internal(k), std::move(parts));
    }
  }

  Prefix best;
  if (cyclic) {
    best = prefix[n];
  } else {
    if (n <= max_part) {
      long v = t.external(n);
      if (ctx.single_section) v = std::min(v, *ctx.single_section);
      offer(best, v, {n});
    }
    for (int k = 3; k <= max_part && k < n; ++k) {
      int s = n - k;
      if (!prefix[s].reached()) continue;
      // the last part was costed as internal only when it is not the final one
      auto parts = prefix[s].parts;
      parts.push_back(k);
      offer(best, prefix[s].value + t.external(k), std::move(parts));
    }
  }
  if (!best.reached())
    throw InfeasibleError("no feasible sequence for n=" + std::to_string(n) +
                          " with parts <= " + std::to_string(max_part));
  GammaResult r;
  r.value = best.value;
  r.method = Method::sequence_dp;
  r.sequence = PartSequence(best.parts);
  return r;
}

}  // namespace gdalex
