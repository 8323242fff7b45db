#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdalex/column_set.hpp"
#include "gdalex/graph.hpp"

namespace gdalex {

enum class Method { subsets, column_dp, sequence_dp, closed_form };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

struct GammaResult {
  long value = 0;
  Method method = Method::closed_form;
  std::optional<ColumnSet> witness;
  std::optional<PartSequence> sequence;
  int family = 0;                   // winning candidate family 1..4, 0 if not applicable
  bool threshold_fallback = false;  // threshold case split could not decide
};

/// Section base costs for a fixed second factor: `internal(k)` is the minimum
/// GDA size of P_k o G2 with both end columns forced empty, `external(k)` with
/// only the first end forced empty. Entries for k = 2, 3 are clamped.
struct ValueTable {
  FactorSpec g2;
  int k_max = 0;
  std::vector<long> val_internal;  // index k - 2
  std::vector<long> val_external;  // index k - 2

  long internal(int k) const;
  long external(int k) const;
};

inline constexpr long kSubsetsMaxVertices = 20;
inline constexpr int kColumnsMaxRows = 20;
inline constexpr int kColumnsMaxRowsCycle = 12;

/// Exhaustive search by increasing cardinality. Requires n*m <= 20.
GammaResult min_gda_subsets(const ProductSpec& spec);

/// Exact minimum by dynamic programming over columns. Requires m <= 20, and
/// m <= 12 when the first factor is a cycle. `enforce_caps = false` lifts the
/// cycle cap (up to the path cap) for diagnostics; the cost grows as m^5 * n.
GammaResult min_gda_columns(const ProductSpec& spec, bool enforce_caps = true);

/// Minimum over GDAs with min_size[i] <= s_{i+1} <= max_size[i] for every
/// column, or nullopt when none exists. Same caps as min_gda_columns.
std::optional<GammaResult> min_gda_constrained(const ProductSpec& spec,
                                               const std::vector<int>& min_size,
                                               const std::vector<int>& max_size);

/// Column DP on P_n o G2 with the first and/or last column forced empty.
/// Returns nullopt when no such GDA exists.
std::optional<GammaResult> min_gda_pinned(const ProductSpec& path_spec, bool first_empty,
                                          bool last_empty);

ValueTable compute_value_table(FactorSpec g2, int k_max);

/// JSON cache: {"g2_kind","m","k_max","val_I","val_E","tool_version"}.
ValueTable load_value_table(const std::string& path);
/// Writes to a temporary sibling and renames over `path`.
void save_value_table(const ValueTable& table, const std::string& path);

std::string value_table_to_json(const ValueTable& table);
ValueTable value_table_from_json(const std::string& text);

std::string_view tool_version();

}  // namespace gdalex
