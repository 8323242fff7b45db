#pragma once

#include <array>
#include <optional>
#include <string>

#include "gdalex/column_set.hpp"
#include "gdalex/graph.hpp"
#include "gdalex/oracle.hpp"

namespace gdalex {

struct ComboKind {
  FactorKind g1 = FactorKind::path;
  FactorKind g2 = FactorKind::cycle;

  static ComboKind of(const ProductSpec& spec) { return {spec.g1().kind, spec.g2().kind}; }
  /// "PC", "CC", "PP" or "CP" (first letter = first factor).
  std::string code() const;
  friend bool operator==(const ComboKind&, const ComboKind&) = default;
};

/// Threshold between consecutive candidate families. `undefined` covers the
/// case where the two families coincide or one is absent; `never` means the
/// later family is strictly worse for every m.
struct Threshold {
  enum State { defined, undefined, never } state = undefined;
  int value = 0;

  static Threshold at(int v) { return {defined, v}; }
  static Threshold none() { return {undefined, 0}; }
  static Threshold unreachable() { return {never, 0}; }
  std::string to_string() const;
  friend bool operator==(const Threshold&, const Threshold&) = default;
};

using CandidateSet = std::array<std::optional<PartSequence>, 4>;  // index i -> family i+1

/// The four candidate families for n >= 8. Throws UnsupportedError for n < 8.
CandidateSet candidate_sequences(int n);

/// {t1, t2, t3} for n >= 8.
std::array<Threshold, 3> thresholds(int n, ComboKind combo);

/// Values for n <= 7: stored constants at m = 3, per-row formulas for m >= 4.
long gamma_small(const ProductSpec& spec);

/// Closed forms for m = 3 and n >= 8, independent of the first factor kind.
long gamma_m3(int n, FactorKind g2_kind);

/// Cheapest of the four candidate families (n >= 8, m >= 4). `table` must
/// match the second factor and cover parts up to 7.
GammaResult gamma_min_of_four(const ProductSpec& spec, const ValueTable& table);

/// Picks the family by the threshold case split. Falls back to
/// gamma_min_of_four, with threshold_fallback set, when no case applies or
/// the applicable cases name different sequences.
GammaResult gamma_via_thresholds(const ProductSpec& spec, const ValueTable& table);

struct ClosedFormOptions {
  bool use_thresholds = false;
  const ValueTable* table = nullptr;  // computed on demand when null
};

/// n <= 7: gamma_small; n >= 8 and m = 3: gamma_m3; otherwise min-of-four
/// (or the threshold dispatch when requested).
GammaResult gamma(const ProductSpec& spec, const ClosedFormOptions& options = {});

/// Shared, lazily built value table with k_max = 9 for a second factor.
const ValueTable& cached_value_table(FactorSpec g2);

}  // namespace gdalex
