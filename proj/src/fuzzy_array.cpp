#include "fuzzydb/fuzzy_array.hpp"

#include <stdexcept>

namespace fuzzydb {

namespace {
const FuzzyMultiset kEmptyMultiset{};

void normalize_component(FuzzyArray::Component& phi) {
    // Empty multisets are never stored, and the all-Null row is a zero row
    // by convention, whatever was attached to it.
    std::erase_if(phi, [](const auto& kv) { return kv.second.empty() || kv.first.is_zero(); });
}
}  // namespace

FuzzyArray FuzzyArray::make_regular(const StandardArray& base,
                                    const std::map<RowKey, FuzzyMultiset>& fuzzy) {
    for (const auto& [k, m] : fuzzy) {
        if (!base.has_row(k)) {
            throw std::invalid_argument("fuzzy multiset attached to unknown row key " +
                                        k.to_string());
        }
    }
    FuzzyArray out;
    out.base_ = regularized(base);
    for (const RowKey& k : base.row_keys()) {
        auto it = fuzzy.find(k);
        if (it == fuzzy.end() || it->second.empty()) {
            continue;
        }
        Row content(base.row_or_empty(k));
        auto [slot, inserted] = out.phi_.try_emplace(std::move(content), it->second);
        if (!inserted) {
            slot->second = disjoint_union(slot->second, it->second);
        }
    }
    normalize_component(out.phi_);
    return out;
}

FuzzyArray FuzzyArray::from_content(StandardArray base, Component phi) {
    auto reg = regularized(base);
    if (reg.row_keys().size() != base.row_keys().size()) {
        throw std::invalid_argument("fuzzy array base has duplicate rows");
    }
    normalize_component(phi);
    std::set<Row> rows = row_set(base);
    for (const auto& [r, m] : phi) {
        if (!rows.contains(r)) {
            throw std::invalid_argument("fuzzy component mentions a row not in the base: " +
                                        r.to_string());
        }
    }
    FuzzyArray out;
    out.base_ = std::move(base);
    out.phi_ = std::move(phi);
    return out;
}

const FuzzyMultiset& FuzzyArray::phi(const Row& r) const {
    auto it = phi_.find(r);
    return it == phi_.end() ? kEmptyMultiset : it->second;
}

std::vector<std::pair<RowKey, Row>> FuzzyArray::nonzero_rows() const {
    std::vector<std::pair<RowKey, Row>> out;
    for (const RowKey& k : base_.row_keys()) {
        Row r(base_.row_or_empty(k));
        if (phi_.contains(r)) {
            out.emplace_back(k, std::move(r));
        }
    }
    return out;
}

bool sub_array(const FuzzyArray& a, const FuzzyArray& b) {
    // Rows absent from a's component have the empty multiset and pass
    // against anything.
    for (const auto& [r, m] : a.component()) {
        if (!subset(m, b.phi(r))) {
            return false;
        }
    }
    return true;
}

FuzzyArray pad_fuzzy(const FuzzyArray& a, const std::set<RowKey>& rows,
                     const std::set<ColumnKey>& cols) {
    // Fresh rows are all-Null, hence zero rows; several of them collapse to
    // one representative under regularization.
    return FuzzyArray::from_content(regularized(pad(a.base(), rows, cols)), a.component());
}

bool strong_equiv(const FuzzyArray& a, const FuzzyArray& b) {
    return a.component() == b.component();
}

bool weak_equiv(const FuzzyArray& a, const FuzzyArray& b) {
    const auto& pa = a.component();
    const auto& pb = b.component();
    auto i = pa.begin();
    auto j = pb.begin();
    for (; i != pa.end() && j != pb.end(); ++i, ++j) {
        if (i->first != j->first || max_value(i->second) != max_value(j->second)) {
            return false;
        }
    }
    return i == pa.end() && j == pb.end();
}

}  // namespace fuzzydb
