#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace fuzzydb {

/// A sparse associative array over arbitrary ordered row keys RK, column
/// keys CK and cell values V. The value-initialized V{} is the zero of the
/// cell domain: it is never stored, and reads of unset in-support positions
/// return it. The database instantiates this with typed keys and CellValue;
/// the law oracle instantiates it with its own key/value domains to rebuild
/// the semiring formulas.
template <class RK, class CK, class V>
class BasicArray {
public:
    using SparseRow = std::map<CK, V>;

    BasicArray() = default;

    void add_row(RK k) { rows_.insert(std::move(k)); }
    void add_col(CK k) { cols_.insert(std::move(k)); }
    void add_rows(const std::set<RK>& ks) { rows_.insert(ks.begin(), ks.end()); }
    void add_cols(const std::set<CK>& ks) { cols_.insert(ks.begin(), ks.end()); }

    /// Stores v at (r, c), extending the supports as needed. Zero erases.
    void set(const RK& r, const CK& c, V v) {
        rows_.insert(r);
        cols_.insert(c);
        if (v == V{}) {
            auto it = cells_.find(r);
            if (it != cells_.end()) {
                it->second.erase(c);
                if (it->second.empty()) {
                    cells_.erase(it);
                }
            }
        } else {
            cells_[r].insert_or_assign(c, std::move(v));
        }
    }

    const std::set<RK>& row_keys() const { return rows_; }
    const std::set<CK>& col_keys() const { return cols_; }
    bool has_row(const RK& r) const { return rows_.contains(r); }
    bool has_col(const CK& c) const { return cols_.contains(c); }
    bool empty() const { return rows_.empty() && cols_.empty(); }

    const V& get(const RK& r, const CK& c) const {
        if (!rows_.contains(r) || !cols_.contains(c)) {
            throw std::out_of_range("array lookup outside the declared supports");
        }
        auto it = cells_.find(r);
        if (it == cells_.end()) {
            return zero();
        }
        auto jt = it->second.find(c);
        return jt == it->second.end() ? zero() : jt->second;
    }

    const SparseRow& row(const RK& r) const {
        if (!rows_.contains(r)) {
            throw std::out_of_range("unknown row key");
        }
        auto it = cells_.find(r);
        return it == cells_.end() ? empty_row() : it->second;
    }

    /// Sparse cells of r, or the empty row for keys without cells. Unlike
    /// row(), does not insist the key is in support (probing convenience).
    const SparseRow& row_or_empty(const RK& r) const {
        auto it = cells_.find(r);
        return it == cells_.end() ? empty_row() : it->second;
    }

    bool operator==(const BasicArray&) const = default;

    static const V& zero() {
        static const V z{};
        return z;
    }
    static const SparseRow& empty_row() {
        static const SparseRow e{};
        return e;
    }

private:
    std::set<RK> rows_;
    std::set<CK> cols_;
    std::map<RK, SparseRow> cells_;
};

template <class CK, class V>
int compare_sparse_rows(const std::map<CK, V>& a, const std::map<CK, V>& b) {
    auto i = a.begin();
    auto j = b.begin();
    for (; i != a.end() && j != b.end(); ++i, ++j) {
        if (i->first != j->first) {
            return i->first < j->first ? -1 : 1;
        }
        if (i->second != j->second) {
            return i->second < j->second ? -1 : 1;
        }
    }
    if (i != a.end()) return 1;
    if (j != b.end()) return -1;
    return 0;
}

/// All nonzero rows of a, sorted by content. Zero rows (keys with no cells)
/// are what padding introduces and what every equivalence ignores.
template <class RK, class CK, class V>
std::vector<std::map<CK, V>> sorted_nonzero_rows(const BasicArray<RK, CK, V>& a) {
    std::vector<std::map<CK, V>> rows;
    for (const RK& k : a.row_keys()) {
        const auto& r = a.row_or_empty(k);
        if (!r.empty()) {
            rows.push_back(r);
        }
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& x, const auto& y) { return compare_sparse_rows(x, y) < 0; });
    return rows;
}

/// Strong equivalence: a row-key bijection matching rows exactly, decided by
/// comparing the multisets of nonzero rows. Zero rows are invisible under
/// the sparse-row reading, which is what keeps zero-padding transparent.
template <class RK, class CK, class V>
bool strong_equiv(const BasicArray<RK, CK, V>& a, const BasicArray<RK, CK, V>& b) {
    return sorted_nonzero_rows(a) == sorted_nonzero_rows(b);
}

/// Weak equivalence: same rows not counting multiplicity.
template <class RK, class CK, class V>
bool weak_equiv(const BasicArray<RK, CK, V>& a, const BasicArray<RK, CK, V>& b) {
    auto ra = sorted_nonzero_rows(a);
    auto rb = sorted_nonzero_rows(b);
    ra.erase(std::unique(ra.begin(), ra.end()), ra.end());
    rb.erase(std::unique(rb.begin(), rb.end()), rb.end());
    return ra == rb;
}

/// Removes duplicate rows, keeping the least row key of each distinct row
/// content as its representative.
template <class RK, class CK, class V>
BasicArray<RK, CK, V> regularized(const BasicArray<RK, CK, V>& a) {
    BasicArray<RK, CK, V> out;
    out.add_cols(a.col_keys());
    std::map<std::map<CK, V>, RK, decltype([](const auto& x, const auto& y) {
                 return compare_sparse_rows(x, y) < 0;
             })>
        seen;
    for (const RK& k : a.row_keys()) {  // set order: first hit is the least key
        const auto& content = a.row_or_empty(k);
        if (!seen.emplace(content, k).second) {
            continue;
        }
        out.add_row(k);
        for (const auto& [c, v] : content) {
            out.set(k, c, v);
        }
    }
    return out;
}

template <class RK, class CK, class V>
BasicArray<CK, RK, V> transpose(const BasicArray<RK, CK, V>& a) {
    BasicArray<CK, RK, V> out;
    for (const CK& c : a.col_keys()) {
        out.add_row(c);
    }
    for (const RK& r : a.row_keys()) {
        out.add_col(r);
        for (const auto& [c, v] : a.row_or_empty(r)) {
            out.set(c, r, v);
        }
    }
    return out;
}

/// Element-wise sum. plus is consulted only where both operands are nonzero.
template <class RK, class CK, class V, class Plus>
BasicArray<RK, CK, V> oplus(const BasicArray<RK, CK, V>& a, const BasicArray<RK, CK, V>& b,
                            Plus plus) {
    BasicArray<RK, CK, V> out;
    out.add_rows(a.row_keys());
    out.add_rows(b.row_keys());
    out.add_cols(a.col_keys());
    out.add_cols(b.col_keys());
    for (const RK& r : a.row_keys()) {
        for (const auto& [c, v] : a.row_or_empty(r)) {
            out.set(r, c, v);
        }
    }
    for (const RK& r : b.row_keys()) {
        for (const auto& [c, v] : b.row_or_empty(r)) {
            const V& cur = out.get(r, c);
            out.set(r, c, cur == V{} ? v : plus(cur, v));
        }
    }
    return out;
}

/// The f-times product: entry (k1, k2) is f applied to the tuple of nonzero
/// products a(k1, j) * b(j, k2) over the shared inner support; f of the
/// empty tuple is the zero V{}. Requires a's column support to equal b's
/// row support.
template <class RK, class IK, class CK, class V, class Otimes, class Reducer>
BasicArray<RK, CK, V> fproduct(const BasicArray<RK, IK, V>& a, const BasicArray<IK, CK, V>& b,
                               Otimes otimes, Reducer f) {
    if (a.col_keys() != b.row_keys()) {
        throw std::invalid_argument("f-product: inner supports do not match");
    }
    BasicArray<RK, CK, V> out;
    out.add_rows(a.row_keys());
    out.add_cols(b.col_keys());
    for (const RK& r : a.row_keys()) {
        const auto& arow = a.row_or_empty(r);
        if (arow.empty()) {
            continue;
        }
        std::map<CK, std::vector<V>> terms;
        for (const auto& [j, av] : arow) {
            for (const auto& [c, bv] : b.row_or_empty(j)) {
                V prod = otimes(av, bv);
                if (!(prod == V{})) {
                    terms[c].push_back(std::move(prod));
                }
            }
        }
        for (auto& [c, vs] : terms) {
            out.set(r, c, f(vs));
        }
    }
    return out;
}

/// Kronecker product with explicit key-pairing maps.
template <class RK1, class CK1, class RK2, class CK2, class V, class Otimes, class RPair,
          class CPair>
auto kronecker(const BasicArray<RK1, CK1, V>& a, const BasicArray<RK2, CK2, V>& b, Otimes otimes,
               RPair rpair, CPair cpair) {
    using RK = decltype(rpair(*a.row_keys().begin(), *b.row_keys().begin()));
    using CK = decltype(cpair(*a.col_keys().begin(), *b.col_keys().begin()));
    BasicArray<RK, CK, V> out;
    for (const RK1& r1 : a.row_keys()) {
        for (const RK2& r2 : b.row_keys()) {
            out.add_row(rpair(r1, r2));
        }
    }
    for (const CK1& c1 : a.col_keys()) {
        for (const CK2& c2 : b.col_keys()) {
            out.add_col(cpair(c1, c2));
        }
    }
    for (const RK1& r1 : a.row_keys()) {
        for (const auto& [c1, v1] : a.row_or_empty(r1)) {
            for (const RK2& r2 : b.row_keys()) {
                for (const auto& [c2, v2] : b.row_or_empty(r2)) {
                    out.set(rpair(r1, r2), cpair(c1, c2), otimes(v1, v2));
                }
            }
        }
    }
    return out;
}

}  // namespace fuzzydb
