#pragma once

#include <optional>

#include "gdalex/column_set.hpp"
#include "gdalex/graph.hpp"
#include "gdalex/oracle.hpp"

namespace gdalex {

struct SequenceValueContext {
  FactorKind g1_kind = FactorKind::path;
  int n = 0;
  ValueTable table;
  // Path first factor with a single section: the external base cost alone can
  // overshoot for short paths, so when this is set the single-section value is
  // min(external(n), *single_section).
  std::optional<long> single_section;
};

/// Context with `single_section` filled from the column DP when the first
/// factor is a path short enough to be one section.
SequenceValueContext make_sequence_context(FactorKind g1_kind, int n, ValueTable table);

/// Cycle: sum of internal costs. Path: external cost of both end sections plus
/// internal costs of the middle ones. Throws InputError if w is infeasible for
/// ctx.n or a part exceeds the table.
long sequence_value(const SequenceValueContext& ctx, const PartSequence& w);

/// Minimum of sequence_value over feasible sequences with parts <= max_part.
/// Ties prefer fewer parts, then the lexicographically smallest sequence.
/// Throws InfeasibleError when no such sequence exists.
GammaResult min_sequence_value(const SequenceValueContext& ctx, int max_part);

/// 6 when m = 3, otherwise 7.
int default_max_part(int m);

}  // namespace gdalex
