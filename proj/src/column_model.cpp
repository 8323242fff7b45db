#include "column_model.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <utility>

#include "gdalex/error.hpp"

namespace gdalex::detail {

namespace {

struct Key {
  int kind;
  int order;
  int adjacent;
  auto operator<=>(const Key&) const = default;
};

std::mutex cache_mutex;
std::map<Key, ColumnNeeds>& cache() {
  static std::map<Key, ColumnNeeds> c;
  return c;
}

// For each row, the in-column neighbour mask.
std::vector<RowMask> neighbor_masks(FactorSpec g2) {
  std::vector<RowMask> out(g2.order, 0);
  for (int r = 0; r < g2.order; ++r)
    for (int q : factor_neighbors(g2, r)) out[r] |= RowMask{1} << q;
  return out;
}

int need_with(const std::vector<RowMask>& nb, int m, int adjacent, RowMask mask) {
  int need = 0;
  for (int r = 0; r < m; ++r) {
    int hits = std::popcount(mask & nb[r]);
    if ((mask >> r) & 1U) {
      // 2(1 + t + hits) >= 1 + adjacent*m + deg  <=>  t >= ceil(closed/2) - 1 - hits
      int closed = 1 + adjacent * m + std::popcount(nb[r]);
      need = std::max(need, (closed + 1) / 2 - 1 - hits);
    } else if (hits == 0) {
      need = std::max(need, 1);
    }
  }
  return need > adjacent * m ? kUnreachable : need;
}

}  // namespace

int mask_need(FactorSpec g2, int adjacent_columns, RowMask mask) {
  return need_with(neighbor_masks(g2), g2.order, adjacent_columns, mask);
}

const ColumnNeeds& column_needs(FactorSpec g2, int adjacent_columns) {
  Key key{static_cast<int>(g2.kind), g2.order, adjacent_columns};
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  const int m = g2.order;
  if (m > 30) throw UnsupportedError("column tables are limited to 30 rows");
  auto nb = neighbor_masks(g2);
  ColumnNeeds t;
  t.need.assign(m + 1, kUnreachable);
  t.best_mask.assign(m + 1, 0);
  const RowMask end = RowMask{1} << m;
  for (RowMask mask = 0; mask < end; ++mask) {
    int k = std::popcount(mask);
    int need = need_with(nb, m, adjacent_columns, mask);
    if (need < t.need[k]) {
      t.need[k] = need;
      t.best_mask[k] = mask;
    }
  }
  std::lock_guard lock(cache_mutex);
  // std::map nodes are stable, so the reference survives later inserts.
  return cache().emplace(key, std::move(t)).first->second;
}

namespace {

constexpr long kInf = 1L << 40;

struct Chain {
  // cost[i][x*(m+1)+y]: best total over columns 0..i with s_{i-1}=x, s_i=y.
  std::vector<std::vector<long>> cost;
  std::vector<std::vector<int>> parent;  // s_{i-2} of the best predecessor
};

}  // namespace

bool solve_profile(FactorSpec g2, const std::vector<int>& adjacent,
                   const std::vector<int>& min_size, const std::vector<int>& max_size,
                   bool cyclic, ProfileSolution& out) {
  const int n = static_cast<int>(adjacent.size());
  const int m = g2.order;
  const int w = m + 1;
  if (n < 2 || (cyclic && n < 3)) throw InputError("profile needs at least 2 columns");

  std::vector<const std::vector<int>*> need(n);
  for (int i = 0; i < n; ++i) need[i] = &column_needs(g2, adjacent[i]).need;
  auto allowed = [&](int i, int k) {
    if (k < min_size[i] || k > max_size[i]) return false;
    return (*need[i])[k] < kUnreachable;
  };

  // Runs columns 2..n-1 from the given column-1 states.
  auto run = [&](std::vector<long> first) {
    Chain ch;
    ch.cost.assign(n, {});
    ch.parent.assign(n, {});
    ch.cost[1] = std::move(first);
    for (int i = 2; i < n; ++i) {
      auto& cur = ch.cost[i];
      auto& par = ch.parent[i];
      cur.assign(w * w, kInf);
      par.assign(w * w, -1);
      const auto& prev = ch.cost[i - 1];
      const auto& nd = *need[i - 1];
      for (int x = 0; x < w; ++x)
        for (int y = 0; y < w; ++y) {
          long c = prev[x * w + y];
          if (c >= kInf) continue;
          for (int z = 0; z < w; ++z) {
            if (!allowed(i, z) || nd[y] > x + z) continue;
            long v = c + z;
            if (v < cur[y * w + z]) {
              cur[y * w + z] = v;
              par[y * w + z] = x;
            }
          }
        }
    }
    return ch;
  };

  auto unwind = [&](const Chain& ch, int x, int y, long total) {
    out.cost = total;
    out.sizes.assign(n, 0);
    out.sizes[n - 2] = x;
    out.sizes[n - 1] = y;
    for (int i = n - 1; i >= 2; --i)
      out.sizes[i - 2] = ch.parent[i][out.sizes[i - 1] * w + out.sizes[i]];
  };

  long best = kInf;
  if (!cyclic) {
    std::vector<long> first(w * w, kInf);
    for (int x = 0; x < w; ++x)
      for (int y = 0; y < w; ++y)
        if (allowed(0, x) && allowed(1, y) && (*need[0])[x] <= y) first[x * w + y] = x + y;
    Chain ch = run(std::move(first));
    const auto& last = ch.cost[n - 1];
    int bx = -1, by = -1;
    for (int x = 0; x < w; ++x)
      for (int y = 0; y < w; ++y) {
        long c = last[x * w + y];
        if (c < best && (*need[n - 1])[y] <= x) {
          best = c;
          bx = x;
          by = y;
        }
      }
    if (best >= kInf) return false;
    unwind(ch, bx, by, best);
    return true;
  }

  for (int x0 = 0; x0 < w; ++x0) {
    if (!allowed(0, x0)) continue;
    for (int x1 = 0; x1 < w; ++x1) {
      if (!allowed(1, x1)) continue;
      std::vector<long> first(w * w, kInf);
      first[x0 * w + x1] = x0 + x1;
      Chain ch = run(std::move(first));
      const auto& last = ch.cost[n - 1];
      int bx = -1, by = -1;
      long local = kInf;
      for (int x = 0; x < w; ++x)
        for (int y = 0; y < w; ++y) {
          long c = last[x * w + y];
          if (c >= local) continue;
          // close the seam: column n sees n-1 and 1, column 1 sees n and 2
          if ((*need[n - 1])[y] > x + x0) continue;
          if ((*need[0])[x0] > y + x1) continue;
          local = c;
          bx = x;
          by = y;
        }
      if (local < best) {
        best = local;
        unwind(ch, bx, by, local);
      }
    }
  }
  return best < kInf;
}

}  // namespace gdalex::detail
