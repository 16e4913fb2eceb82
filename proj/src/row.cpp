#include "fuzzydb/row.hpp"

namespace fuzzydb {

namespace {
const CellValue kNull{};
}

Row::Row(Cells cells) : cells_(std::move(cells)) {
    std::erase_if(cells_, [](const auto& kv) { return kv.second.is_null(); });
}

const CellValue& Row::at(const ColumnKey& j) const {
    auto it = cells_.find(j);
    return it == cells_.end() ? kNull : it->second;
}

void Row::set(ColumnKey j, CellValue v) {
    if (v.is_null()) {
        cells_.erase(j);
    } else {
        cells_.insert_or_assign(std::move(j), std::move(v));
    }
}

Row Row::restricted_to(const std::set<ColumnKey>& js) const {
    Row out;
    for (const auto& [j, v] : cells_) {
        if (js.contains(j)) {
            out.cells_.emplace(j, v);
        }
    }
    return out;
}

int Row::compare(const Row& other) const {
    auto a = cells_.begin();
    auto b = other.cells_.begin();
    for (; a != cells_.end() && b != other.cells_.end(); ++a, ++b) {
        if (a->first != b->first) {
            return a->first < b->first ? -1 : 1;
        }
        if (a->second != b->second) {
            return a->second < b->second ? -1 : 1;
        }
    }
    if (a != cells_.end()) return 1;
    if (b != other.cells_.end()) return -1;
    return 0;
}

std::string Row::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [j, v] : cells_) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += j.to_string() + "=" + v.to_string();
    }
    return out + "}";
}

}  // namespace fuzzydb
