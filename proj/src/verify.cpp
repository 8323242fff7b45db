#include "gdalex/verify.hpp"

#include <bit>

#include "gdalex/error.hpp"

namespace gdalex {

namespace {

// Members of `mk` adjacent to `row` inside one copy of G2.
int in_column_hits(FactorSpec g2, RowMask mk, int row) {
  int hits = 0;
  for (int r : factor_neighbors(g2, row)) hits += (mk >> r) & 1U;
  return hits;
}

// Sum of s_j over the G1-neighbours of `column`.
int neighbor_total(const ColumnSet& set, int column) {
  int t = 0;
  for (int c : g1_neighbors(set.spec(), column)) t += set.column_size(c);
  return t;
}

bool defended_given(const ColumnSet& set, VertexId v, int neighbor_sum) {
  const ProductSpec& spec = set.spec();
  int inside = 1 + neighbor_sum + in_column_hits(spec.g2(), set.mask(v.column), v.row);
  int closed = 1 + degree(spec, v);
  return 2 * inside >= closed;
}

}  // namespace

bool is_defended(const ColumnSet& set, VertexId v) {
  if (!set.contains(v)) throw InputError("defense is only defined for members of the set");
  return defended_given(set, v, neighbor_total(set, v.column));
}

bool is_gda(const ColumnSet& set) {
  if (set.empty()) return false;
  const ProductSpec& spec = set.spec();
  for (int c = 1; c <= spec.n(); ++c) {
    int t = neighbor_total(set, c);
    RowMask mk = set.mask(c);
    for (int r = 0; r < spec.m(); ++r) {
      if ((mk >> r) & 1U) {
        if (!defended_given(set, {c, r}, t)) return false;
      } else if (t == 0 && in_column_hits(spec.g2(), mk, r) == 0) {
        return false;
      }
    }
  }
  return true;
}

std::vector<int> column_profile(const ColumnSet& set) {
  std::vector<int> out;
  out.reserve(set.spec().n());
  for (RowMask mk : set.masks()) out.push_back(std::popcount(mk));
  return out;
}

namespace {

// Section lengths with column 1 opening the first section. A later section
// opens at an empty column followed by a nonempty one; the first cut is
// searched from column 3 on.
std::vector<int> cut_sections(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> starts{0};
  for (int i = 2; i + 1 < n; ++i)
    if (s[i] == 0 && s[i + 1] != 0) starts.push_back(i);
  std::vector<int> parts;
  for (std::size_t j = 0; j < starts.size(); ++j) {
    int end = j + 1 < starts.size() ? starts[j + 1] : n;
    parts.push_back(end - starts[j]);
  }
  return parts;
}

}  // namespace

PartSequence spectrum(const ColumnSet& set) {
  if (!is_gda(set)) throw PreconditionError("spectrum requires a global defensive alliance");
  auto s = column_profile(set);
  const int n = static_cast<int>(s.size());
  PartSequence w(cut_sections(s));
  if (set.spec().g1().kind == FactorKind::path) return w;
  // the labelled seam can leave a short trailing section; relabel the cycle
  // from the first rotation that cuts cleanly
  for (int shift = 1; shift < n && !is_feasible(w, n); ++shift) {
    std::vector<int> r(s.begin() + shift, s.end());
    r.insert(r.end(), s.begin(), s.begin() + shift);
    PartSequence candidate(cut_sections(r));
    if (is_feasible(candidate, n)) w = candidate;
  }
  return w.canonical_rotation();
}

bool is_feasible(const PartSequence& w, int n) {
  if (w.length() == 0 || w.sum() != n) return false;
  if (w[0] < 2) return false;
  for (std::size_t i = 1; i < w.length(); ++i)
    if (w[i] < 3) return false;
  return true;
}

ColumnSet witness_from_sequence(const ProductSpec& spec, const PartSequence& w) {
  if (!is_feasible(w, spec.n()))
    throw InputError("sequence " + w.to_string() + " is not feasible for n=" +
                     std::to_string(spec.n()));
  ColumnSet set(spec);
  const RowMask full = full_mask(spec.m());
  int first = 1;  // first column of the current section
  for (std::size_t i = 0; i < w.length(); ++i) {
    int k = w[i];
    if (k >= 4) {
      for (int c = first + 1; c <= first + k - 2; ++c) set.set_mask(c, full);
    } else if (k == 3) {
      set.set_mask(first + 1, full);
      set.set_mask(first + 2, full);
    } else {  // k == 2, only possible as the leading part
      set.set_mask(first, full);
      set.set_mask(first + 1, full);
    }
    first += k;
  }
  return set;
}

}  // namespace gdalex
