#include "gdalex/column_set.hpp"

#include <algorithm>
#include <bit>

#include "gdalex/error.hpp"

namespace gdalex {

ColumnSet::ColumnSet(ProductSpec spec) : spec_(spec), masks_(spec.n(), 0) {}

ColumnSet::ColumnSet(ProductSpec spec, std::vector<RowMask> masks)
    : spec_(spec), masks_(std::move(masks)) {
  if (static_cast<int>(masks_.size()) != spec_.n())
    throw InputError("expected " + std::to_string(spec_.n()) + " column masks, got " +
                     std::to_string(masks_.size()));
  for (RowMask mk : masks_)
    if (mk & ~full_mask(spec_.m())) throw InputError("column mask uses rows beyond m");
}

void ColumnSet::check_column(int column) const {
  if (column < 1 || column > spec_.n())
    throw InputError("column " + std::to_string(column) + " outside 1.." +
                     std::to_string(spec_.n()));
}

RowMask ColumnSet::mask(int column) const {
  check_column(column);
  return masks_[column - 1];
}

void ColumnSet::set_mask(int column, RowMask mk) {
  check_column(column);
  if (mk & ~full_mask(spec_.m())) throw InputError("column mask uses rows beyond m");
  masks_[column - 1] = mk;
}

bool ColumnSet::contains(VertexId v) const {
  if (!spec_.contains(v)) throw InputError("vertex outside the product");
  return (masks_[v.column - 1] >> v.row) & 1U;
}

void ColumnSet::insert(VertexId v) {
  if (!spec_.contains(v)) throw InputError("vertex outside the product");
  masks_[v.column - 1] |= RowMask{1} << v.row;
}

void ColumnSet::erase(VertexId v) {
  if (!spec_.contains(v)) throw InputError("vertex outside the product");
  masks_[v.column - 1] &= ~(RowMask{1} << v.row);
}

int ColumnSet::column_size(int column) const { return std::popcount(mask(column)); }

long ColumnSet::size() const {
  long total = 0;
  for (RowMask mk : masks_) total += std::popcount(mk);
  return total;
}

bool ColumnSet::empty() const {
  return std::all_of(masks_.begin(), masks_.end(), [](RowMask mk) { return mk == 0; });
}

PartSequence::PartSequence(std::initializer_list<int> parts)
    : PartSequence(std::vector<int>(parts)) {}

PartSequence::PartSequence(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("part sequence must be nonempty");
  for (int k : parts_)
    if (k <= 0) throw InputError("parts must be positive");
}

int PartSequence::sum() const {
  int s = 0;
  for (int k : parts_) s += k;
  return s;
}

int PartSequence::max_part() const {
  return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

std::string PartSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i) out += ",";
    if (j - i > 1) out += "[" + std::to_string(j - i) + "]";
    out += std::to_string(parts_[i]);
    i = j;
  }
  return out + ")";
}

PartSequence PartSequence::canonical_rotation() const {
  std::vector<int> best = parts_;
  std::vector<int> cur = parts_;
  for (std::size_t r = 1; r < parts_.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return PartSequence(best);
}

}  // namespace gdalex
