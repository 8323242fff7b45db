#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gdalex {

enum class FactorKind { path, cycle };

std::string_view to_string(FactorKind kind);
FactorKind parse_factor_kind(std::string_view text);

/// One factor of the product: a path or a cycle of the given order.
struct FactorSpec {
  FactorKind kind = FactorKind::path;
  int order = 0;

  friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

/// Throws InputError unless the factor is a valid path (order >= 2) or
/// cycle (order >= 3).
void validate_factor(FactorSpec factor);

/// Neighbours of `row` inside one copy of G2, in increasing row order.
std::vector<int> factor_neighbors(FactorSpec factor, int index);
int factor_degree(FactorSpec factor, int index);

/// Vertex (column, row): column is 1-based (copy G2_column), row is 0-based.
struct VertexId {
  int column = 1;
  int row = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// The lexicographic product G1 o G2. Adjacency is derived on demand:
/// (i, j) ~ (k, l) iff i ~ k in G1, or i == k and j ~ l in G2.
class ProductSpec {
 public:
  /// Largest G2 order representable by the 64-bit column masks.
  static constexpr int kMaxRows = 64;

  ProductSpec(FactorSpec g1, FactorSpec g2);

  const FactorSpec& g1() const noexcept { return g1_; }
  const FactorSpec& g2() const noexcept { return g2_; }
  int n() const noexcept { return g1_.order; }
  int m() const noexcept { return g2_.order; }
  long vertex_count() const noexcept { return static_cast<long>(n()) * m(); }

  bool contains(VertexId v) const noexcept {
    return v.column >= 1 && v.column <= n() && v.row >= 0 && v.row < m();
  }

  friend bool operator==(const ProductSpec&, const ProductSpec&) = default;

 private:
  FactorSpec g1_;
  FactorSpec g2_;
};

std::string describe(const ProductSpec& spec);

/// Columns adjacent to `column` in G1 (ascending, no duplicates).
std::vector<int> g1_neighbors(const ProductSpec& spec, int column);

/// N[v]: v itself, every vertex of the G1-adjacent columns, and the
/// G2-neighbours of v inside its own column. Sorted.
std::vector<VertexId> closed_neighborhood(const ProductSpec& spec, VertexId v);

/// d(v) = |N[v]| - 1 = (#adjacent columns) * m + in-column degree.
int degree(const ProductSpec& spec, VertexId v);

}  // namespace gdalex
