#include "fuzzydb/standard_array.hpp"

namespace fuzzydb {

Row row_of(const StandardArray& a, const RowKey& i) {
    return Row(a.row(i));
}

std::set<Row> row_set(const StandardArray& a) {
    std::set<Row> out;
    for (const RowKey& k : a.row_keys()) {
        out.insert(Row(a.row_or_empty(k)));
    }
    return out;
}

StandardArray pad(const StandardArray& a, const std::set<RowKey>& rows,
                  const std::set<ColumnKey>& cols) {
    StandardArray out = a;
    out.add_rows(rows);
    out.add_cols(cols);
    return out;
}

StandardArray tag_rows(const StandardArray& a, int tag) {
    StandardArray out;
    out.add_cols(a.col_keys());
    for (const RowKey& k : a.row_keys()) {
        RowKey t = RowKey::tagged(k, tag);
        out.add_row(t);
        for (const auto& [c, v] : a.row_or_empty(k)) {
            out.set(t, c, v);
        }
    }
    return out;
}

StandardArray standard_union(const StandardArray& a, const StandardArray& b) {
    // Tagged key spaces never collide, so the element-wise sum is a plain
    // overlay here.
    auto overlay = oplus(tag_rows(a, 1), tag_rows(b, 2),
                         [](const CellValue&, const CellValue&) -> CellValue {
                             throw std::logic_error("tagged key collision in standard union");
                         });
    return regularized(overlay);
}

}  // namespace fuzzydb
