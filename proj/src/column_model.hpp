#pragma once

// Per-column feasibility summary shared by the column DP and value tables.
//
// A column's members and non-members see the neighbouring columns only through
// t = (sum of s_j over G1-neighbour columns), since every vertex of an adjacent
// column is a neighbour. For a mask M of one column, need(M) is the smallest t
// that makes every member defended and every non-member dominated. Collapsing
// masks of equal popcount to the minimum need gives the table below.

#include <cstdint>
#include <vector>

#include "gdalex/column_set.hpp"
#include "gdalex/graph.hpp"

namespace gdalex::detail {

inline constexpr int kUnreachable = 1 << 28;

struct ColumnNeeds {
  // need[k]: min over masks with popcount k of the required neighbour total,
  // or kUnreachable. best_mask[k]: numerically smallest mask attaining it.
  std::vector<int> need;
  std::vector<RowMask> best_mask;
};

/// `adjacent_columns` is the number of G1-neighbours of the column (1 or 2).
/// Results are cached per (g2, adjacent_columns); thread-safe.
const ColumnNeeds& column_needs(FactorSpec g2, int adjacent_columns);

/// need(M) for a single mask; kUnreachable if no t <= adjacent_columns*m works.
int mask_need(FactorSpec g2, int adjacent_columns, RowMask mask);

struct ProfileSolution {
  long cost = 0;
  std::vector<int> sizes;  // s_1..s_n
};

/// Min-cost column-size profile. `adjacent[i]` is the neighbour count of
/// column i; column i may only take sizes in [min_size[i], max_size[i]]. The
/// path form links i to i+1; the cycle form also links column n to column 1.
/// Returns false when nothing is feasible.
bool solve_profile(FactorSpec g2, const std::vector<int>& adjacent,
                   const std::vector<int>& min_size, const std::vector<int>& max_size,
                   bool cyclic, ProfileSolution& out);

}  // namespace gdalex::detail
