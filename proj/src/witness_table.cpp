#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gdalex/error.hpp"
#include "gdalex/verify.hpp"

namespace gdalex {

namespace {

// What one column of a construction contains.
struct Shape {
  enum Kind { empty, full, block, all_but_one } kind = empty;
  int length = 0;  // block only
  int offset = 0;  // canonical first row of a block, or the removed row
};

Shape full_col() { return {Shape::full, 0, 0}; }
Shape block(int length, int offset = 0) {
  if (length <= 0) return {};
  return {Shape::block, length, offset};
}
Shape all_but_last(int m) { return {Shape::all_but_one, 0, m - 1}; }

RowMask place(const Shape& sh, FactorSpec g2, int offset) {
  const int m = g2.order;
  switch (sh.kind) {
    case Shape::empty:
      return 0;
    case Shape::full:
      return full_mask(m);
    case Shape::all_but_one:
      return full_mask(m) & ~(RowMask{1} << offset);
    case Shape::block: {
      RowMask mk = 0;
      for (int i = 0; i < sh.length; ++i) mk |= RowMask{1} << ((offset + i) % m);
      return mk;
    }
  }
  return 0;
}

// Offsets under which the shape stays the same kind of subgraph of G2.
std::vector<int> placements(const Shape& sh, FactorSpec g2) {
  std::vector<int> out;
  const int m = g2.order;
  if (sh.kind == Shape::block) {
    int last = g2.kind == FactorKind::cycle ? m - 1 : m - sh.length;
    if (sh.length >= m) last = 0;
    for (int o = 0; o <= last; ++o) out.push_back(o);
  } else if (sh.kind == Shape::all_but_one) {
    for (int o = 0; o < m; ++o) out.push_back(o);
  } else {
    out.push_back(0);
  }
  return out;
}

// Column shapes (index 0 = column 1) with the second factor a cycle.
std::vector<Shape> cycle_rows(int n, int m) {
  std::vector<Shape> c(n);
  switch (n) {
    case 2:
      if (m == 3) {
        c[0] = full_col();
      } else {
        c[0] = block(m / 2);
        c[1] = block(m / 2);
      }
      break;
    case 3:
      c[2] = full_col();
      c[1] = block(std::max(2, (m - 2) / 2));
      break;
    case 4:
      c[2] = full_col();
      c[1] = all_but_last(m);
      break;
    case 5:
      c[2] = full_col();
      c[1] = block(2);
      c[3] = block(std::max(2, m - 3));
      break;
    case 6:
      if (m == 3) {
        c[0] = full_col();
        c[4] = full_col();
        c[3] = block(2);
      } else {
        c[2] = c[3] = full_col();
        c[1] = c[4] = block(2);
      }
      break;
    case 7:
      c[2] = c[4] = full_col();
      c[1] = c[5] = block(2);
      c[3] = block(m - 3);
      break;
  }
  return c;
}

// Same with the second factor a path.
std::vector<Shape> path_rows(int n, int m) {
  std::vector<Shape> c(n);
  switch (n) {
    case 2:
      if (m == 3) {
        c[0] = block(2);
        c[1] = block(1, 1);  // the middle vertex
      } else {
        c[0] = block(m / 2);
        c[1] = block(m / 2);
      }
      break;
    case 3:
      if (m <= 4) {
        c[2] = full_col();
        c[1] = block(1);
      } else if (m == 5) {
        c[2] = all_but_last(m);
        c[1] = block(2);
      } else {
        c[2] = full_col();
        c[1] = block((m - 2) / 2);
      }
      break;
    case 4:
      return cycle_rows(4, m);
    case 5:
      if (m == 3) {
        // the singletons sit in columns 2 and 4; one in column 1 is undefended
        c[2] = full_col();
        c[1] = block(1);
        c[3] = block(1);
      } else if (m == 4) {
        c[2] = full_col();
        c[1] = block(1);
        c[3] = block(2);
      } else {
        return cycle_rows(5, m);
      }
      break;
    case 6:
      c[2] = c[3] = full_col();
      c[1] = block(1);  // row 0 is an end of the path
      c[4] = block(1);
      break;
    case 7:
      c[2] = c[4] = full_col();
      c[1] = block(1);
      c[3] = block(m - 2);
      c[5] = block(1);
      break;
  }
  return c;
}

}  // namespace

namespace {

// Tries the canonical rows, then every placement of the partial columns.
std::optional<ColumnSet> place_all(const ProductSpec& spec, const std::vector<Shape>& shapes) {
  const int n = spec.n();
  ColumnSet set(spec);
  for (int c = 0; c < n; ++c) set.set_mask(c + 1, place(shapes[c], spec.g2(), shapes[c].offset));
  if (is_gda(set)) return set;

  std::vector<int> partial;
  std::vector<std::vector<int>> options;
  for (int c = 0; c < n; ++c) {
    auto opts = placements(shapes[c], spec.g2());
    if (opts.size() > 1) {
      partial.push_back(c);
      options.push_back(std::move(opts));
    }
  }
  std::vector<std::size_t> pick(partial.size(), 0);
  while (true) {
    for (std::size_t j = 0; j < partial.size(); ++j) {
      int c = partial[j];
      set.set_mask(c + 1, place(shapes[c], spec.g2(), options[j][pick[j]]));
    }
    if (is_gda(set)) return set;
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == options[j].size()) pick[j++] = 0;
    if (j == pick.size()) break;
  }
  return std::nullopt;
}

}  // namespace

ColumnSet witness_table(const ProductSpec& spec) {
  const int n = spec.n();
  const int m = spec.m();
  const bool cyclic = spec.g1().kind == FactorKind::cycle;
  const int lo = cyclic ? 3 : 2;
  if (n < lo || n > 7)
    throw UnsupportedError("explicit constructions cover n in " + std::to_string(lo) +
                           "..7, got n=" + std::to_string(n));

  auto shapes = spec.g2().kind == FactorKind::cycle ? cycle_rows(n, m) : path_rows(n, m);
  if (auto s = place_all(spec, shapes)) return *s;

  // On a cycle the path construction is also laid out along every rotation
  // and reflection of the columns.
  if (cyclic) {
    for (int reflect = 0; reflect < 2; ++reflect)
      for (int shift = 0; shift < n; ++shift) {
        if (!reflect && !shift) continue;
        std::vector<Shape> moved(n);
        for (int c = 0; c < n; ++c) moved[((reflect ? n - 1 - c : c) + shift) % n] = shapes[c];
        if (auto s = place_all(spec, moved)) return *s;
      }
  }
  throw UnsupportedError("no placement of the explicit construction is a GDA of " +
                         describe(spec));
}

}  // namespace gdalex
