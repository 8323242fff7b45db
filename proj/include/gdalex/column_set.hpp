#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gdalex/graph.hpp"

namespace gdalex {

using RowMask = std::uint64_t;

inline RowMask full_mask(int m) {
  return m >= 64 ? ~RowMask{0} : ((RowMask{1} << m) - 1);
}

/// A vertex subset stored as one row bitmask per column.
class ColumnSet {
 public:
  explicit ColumnSet(ProductSpec spec);
  ColumnSet(ProductSpec spec, std::vector<RowMask> masks);

  const ProductSpec& spec() const noexcept { return spec_; }
  const std::vector<RowMask>& masks() const noexcept { return masks_; }

  /// Mask of column `column` (1-based).
  RowMask mask(int column) const;
  void set_mask(int column, RowMask mask);

  bool contains(VertexId v) const;
  void insert(VertexId v);
  void erase(VertexId v);

  int column_size(int column) const;
  long size() const;
  bool empty() const;

  friend bool operator==(const ColumnSet&, const ColumnSet&) = default;

 private:
  void check_column(int column) const;

  ProductSpec spec_;
  std::vector<RowMask> masks_;
};

/// A nonempty list of positive section lengths.
class PartSequence {
 public:
  PartSequence() = default;
  PartSequence(std::initializer_list<int> parts);
  explicit PartSequence(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_.at(i); }

  int sum() const;
  int max_part() const;

  /// Run-length form, e.g. (3,5,5,6) -> "(3,[2]5,6)".
  std::string to_string() const;

  /// Lexicographically smallest rotation.
  PartSequence canonical_rotation() const;

  friend bool operator==(const PartSequence&, const PartSequence&) = default;
  friend auto operator<=>(const PartSequence&, const PartSequence&) = default;

 private:
  std::vector<int> parts_;
};

}  // namespace gdalex
