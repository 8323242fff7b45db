#pragma once

#include <vector>

#include "gdalex/column_set.hpp"
#include "gdalex/graph.hpp"

namespace gdalex {

/// Majority condition 2|N[v] & S| >= |N[v]| for a member v of S.
/// Throws InputError if v is not in S.
bool is_defended(const ColumnSet& set, VertexId v);

/// Nonempty, every member defended, every vertex in S or adjacent to S.
bool is_gda(const ColumnSet& set);

/// (s_1, ..., s_n).
std::vector<int> column_profile(const ColumnSet& set);

/// Section lengths of a GDA. Column 1 opens the first section; after that a
/// section opens at every empty column followed by a nonempty one, searching
/// from column 3 on, so two adjacent empty columns end one section and open
/// the next. A cycle is read from its labelled seam when that gives a
/// feasible sequence, otherwise from the first column rotation that does,
/// and is reported in its lexicographically smallest rotation. With a
/// complete second factor (C3) the result need not be feasible.
/// Throws PreconditionError if `set` is not a GDA.
PartSequence spectrum(const ColumnSet& set);

/// k_1 >= 2, k_i >= 3 for i >= 2, and the parts sum to n.
bool is_feasible(const PartSequence& w, int n);

/// Builds a GDA whose spectrum is w: each section of length k >= 4 gets its
/// interior columns filled, a section of length 3 its last two columns, and a
/// leading section of length 2 both columns. Throws InputError if w is not
/// feasible for spec.n().
ColumnSet witness_from_sequence(const ProductSpec& spec, const PartSequence& w);

/// Explicit minimum-size constructions for n <= 7 (second factor a cycle or a
/// path). Canonical placements are tried first; when they fail the builder
/// searches all placements of the same column shapes. Throws
/// UnsupportedError for n outside 2..7 (3..7 for a cycle first factor) or when
/// no placement of the shapes is a GDA.
ColumnSet witness_table(const ProductSpec& spec);

}  // namespace gdalex
