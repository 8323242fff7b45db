#include "gdalex/graph.hpp"

#include <algorithm>
#include <string>

#include "gdalex/error.hpp"

namespace gdalex {

std::string_view to_string(FactorKind kind) {
  return kind == FactorKind::path ? "path" : "cycle";
}

FactorKind parse_factor_kind(std::string_view text) {
  if (text == "path" || text == "P") return FactorKind::path;
  if (text == "cycle" || text == "C") return FactorKind::cycle;
  throw InputError("unknown factor kind '" + std::string(text) + "'");
}

void validate_factor(FactorSpec factor) {
  if (factor.kind == FactorKind::path && factor.order < 2)
    throw InputError("path order must be at least 2, got " + std::to_string(factor.order));
  if (factor.kind == FactorKind::cycle && factor.order < 3)
    throw InputError("cycle order must be at least 3, got " + std::to_string(factor.order));
}

std::vector<int> factor_neighbors(FactorSpec f, int index) {
  if (index < 0 || index >= f.order)
    throw InputError("index " + std::to_string(index) + " outside factor of order " +
                     std::to_string(f.order));
  std::vector<int> out;
  if (f.kind == FactorKind::cycle) {
    out = {(index + f.order - 1) % f.order, (index + 1) % f.order};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  if (index > 0) out.push_back(index - 1);
  if (index + 1 < f.order) out.push_back(index + 1);
  return out;
}

int factor_degree(FactorSpec f, int index) {
  return static_cast<int>(factor_neighbors(f, index).size());
}

ProductSpec::ProductSpec(FactorSpec g1, FactorSpec g2) : g1_(g1), g2_(g2) {
  validate_factor(g1);
  validate_factor(g2);
  // P2 would make every copy complete; the section machinery needs m >= 3.
  if (g2.order < 3)
    throw InputError("second factor must have order at least 3, got " +
                     std::to_string(g2.order));
  if (g2.order > kMaxRows)
    throw UnsupportedError("second factor order " + std::to_string(g2.order) +
                           " exceeds " + std::to_string(kMaxRows));
}

std::string describe(const ProductSpec& spec) {
  auto letter = [](FactorKind k) { return k == FactorKind::path ? "P" : "C"; };
  return std::string(letter(spec.g1().kind)) + std::to_string(spec.n()) + " o " +
         letter(spec.g2().kind) + std::to_string(spec.m());
}

std::vector<int> g1_neighbors(const ProductSpec& spec, int column) {
  if (column < 1 || column > spec.n())
    throw InputError("column " + std::to_string(column) + " outside 1.." +
                     std::to_string(spec.n()));
  auto zero_based = factor_neighbors(spec.g1(), column - 1);
  for (int& c : zero_based) ++c;
  return zero_based;
}

std::vector<VertexId> closed_neighborhood(const ProductSpec& spec, VertexId v) {
  if (!spec.contains(v))
    throw InputError("vertex (" + std::to_string(v.column) + "," + std::to_string(v.row) +
                     ") outside the product");
  std::vector<VertexId> out;
  out.push_back(v);
  for (int c : g1_neighbors(spec, v.column))
    for (int r = 0; r < spec.m(); ++r) out.push_back({c, r});
  for (int r : factor_neighbors(spec.g2(), v.row)) out.push_back({v.column, r});
  std::sort(out.begin(), out.end());
  return out;
}

int degree(const ProductSpec& spec, VertexId v) {
  if (!spec.contains(v))
    throw InputError("vertex (" + std::to_string(v.column) + "," + std::to_string(v.row) +
                     ") outside the product");
  return static_cast<int>(g1_neighbors(spec, v.column).size()) * spec.m() +
         factor_degree(spec.g2(), v.row);
}

}  // namespace gdalex
