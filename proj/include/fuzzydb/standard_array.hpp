#pragma once

#include <set>

#include "fuzzydb/basic_array.hpp"
#include "fuzzydb/cell_value.hpp"
#include "fuzzydb/keys.hpp"
#include "fuzzydb/row.hpp"

namespace fuzzydb {

/// The database's standard associative array: typed keys, CellValue cells,
/// Null as the sparse zero.
using StandardArray = BasicArray<RowKey, ColumnKey, CellValue>;

Row row_of(const StandardArray& a, const RowKey& i);

/// All distinct row contents of a (zero rows included when present).
std::set<Row> row_set(const StandardArray& a);

/// Removes duplicate rows; the least row key of each group survives.
inline StandardArray regularize(const StandardArray& a) { return regularized(a); }

/// Extends the supports with extra row and column keys; new cells are Null.
StandardArray pad(const StandardArray& a, const std::set<RowKey>& rows,
                  const std::set<ColumnKey>& cols);

/// Re-keys every row as (key, tag); cells are untouched.
StandardArray tag_rows(const StandardArray& a, int tag);

/// Union of standard arrays: overlays the two operands on disjoint tagged
/// key spaces, then removes duplicate rows. The result holds each row of
/// either operand exactly once.
StandardArray standard_union(const StandardArray& a, const StandardArray& b);

}  // namespace fuzzydb
