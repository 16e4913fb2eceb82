#include "fuzzydb/keys.hpp"

#include "fuzzydb/util.hpp"

namespace fuzzydb {

std::string ColumnKey::to_string() const {
    if (!tag_) {
        return name_;
    }
    return name_ + ":" + std::to_string(*tag_);
}

ColumnKey ColumnKey::from_string(std::string_view s) {
    auto colon = s.rfind(':');
    if (colon != std::string_view::npos && colon + 1 < s.size()) {
        if (auto tag = try_parse_int(s.substr(colon + 1))) {
            return ColumnKey(std::string(s.substr(0, colon)), static_cast<int>(*tag));
        }
    }
    return ColumnKey(std::string(s));
}

int RowKey::compare(const RowKey& other) const {
    if (rep_.index() != other.rep_.index()) {
        return rep_.index() < other.rep_.index() ? -1 : 1;
    }
    switch (rep_.index()) {
        case 0: {
            const auto& a = std::get<0>(rep_);
            const auto& b = std::get<0>(other.rep_);
            return a < b ? -1 : (b < a ? 1 : 0);
        }
        case 1: {
            const auto& a = std::get<1>(rep_);
            const auto& b = std::get<1>(other.rep_);
            if (int c = a.inner->compare(*b.inner); c != 0) {
                return c;
            }
            return a.tag < b.tag ? -1 : (b.tag < a.tag ? 1 : 0);
        }
        default: {
            const auto& a = std::get<2>(rep_);
            const auto& b = std::get<2>(other.rep_);
            if (int c = a.left->compare(*b.left); c != 0) {
                return c;
            }
            return a.right->compare(*b.right);
        }
    }
}

std::string RowKey::to_string() const {
    switch (rep_.index()) {
        case 0:
            return std::get<0>(rep_);
        case 1: {
            const auto& t = std::get<1>(rep_);
            return "(" + t.inner->to_string() + "," + std::to_string(t.tag) + ")";
        }
        default: {
            const auto& p = std::get<2>(rep_);
            return "(" + p.left->to_string() + "|" + p.right->to_string() + ")";
        }
    }
}

}  // namespace fuzzydb
