#pragma once

#include <map>
#include <set>
#include <string>

#include "fuzzydb/cell_value.hpp"
#include "fuzzydb/keys.hpp"

namespace fuzzydb {

/// A row read sparsely: only non-Null cells are stored, so rows that differ
/// only in zero-padded columns are the same row. This identity is what makes
/// padding invisible to every equivalence in the engine.
class Row {
public:
    using Cells = std::map<ColumnKey, CellValue>;

    Row() = default;
    explicit Row(Cells cells);

    /// Value under j; Null when unset, whatever the column support.
    const CellValue& at(const ColumnKey& j) const;

    /// Null erases.
    void set(ColumnKey j, CellValue v);

    bool is_zero() const { return cells_.empty(); }
    std::size_t size() const { return cells_.size(); }
    const Cells& cells() const { return cells_; }

    /// r restricted to the domain J (intersected with the stored columns).
    Row restricted_to(const std::set<ColumnKey>& js) const;

    bool operator==(const Row&) const = default;
    bool operator<(const Row& other) const { return compare(other) < 0; }
    int compare(const Row& other) const;

    /// Diagnostic form, e.g. "{Age=30, Name=John}".
    std::string to_string() const;

private:
    Cells cells_;
};

}  // namespace fuzzydb
