#include "fuzzydb/relalg.hpp"

#include <stdexcept>

namespace fuzzydb {

FuzzyArray project(const FuzzyArray& a, const std::set<ColumnKey>& js) {
    StandardArray base;
    base.add_cols(js);
    std::map<RowKey, FuzzyMultiset> fuzzy;
    for (const RowKey& k : a.base().row_keys()) {
        base.add_row(k);
        Row full(a.base().row_or_empty(k));
        Row restricted = full.restricted_to(js);
        for (const auto& [j, v] : restricted.cells()) {
            base.set(k, j, v);
        }
        const FuzzyMultiset& m = a.phi(full);
        if (!m.empty()) {
            fuzzy.emplace(k, m);
        }
    }
    return FuzzyArray::make_regular(base, fuzzy);
}

FuzzyArray select(const FuzzyArray& a, const FuzzyCondition& psi) {
    FuzzyArray::Component out;
    for (const auto& [r, m] : a.component()) {
        FuzzyMultiset clamped = clamp_min(m, psi(r));
        if (!clamped.empty()) {
            out.emplace(r, std::move(clamped));
        }
    }
    return FuzzyArray::from_content(a.base(), std::move(out));
}

FuzzyArray rename(const FuzzyArray& a, const std::map<ColumnKey, ColumnKey>& f) {
    std::set<ColumnKey> image;
    for (const auto& [from, to] : f) {
        if (!image.insert(to).second) {
            throw std::invalid_argument("column renaming is not injective at " + to.to_string());
        }
    }
    for (const ColumnKey& c : a.base().col_keys()) {
        if (!f.contains(c)) {
            throw std::invalid_argument("column renaming does not cover " + c.to_string());
        }
    }
    StandardArray base;
    for (const ColumnKey& c : a.base().col_keys()) {
        base.add_col(f.at(c));
    }
    FuzzyArray::Component phi;
    for (const RowKey& k : a.base().row_keys()) {
        base.add_row(k);
        for (const auto& [c, v] : a.base().row_or_empty(k)) {
            base.set(k, f.at(c), v);
        }
    }
    for (const auto& [r, m] : a.component()) {
        Row renamed;
        for (const auto& [c, v] : r.cells()) {
            renamed.set(f.at(c), v);
        }
        phi.emplace(std::move(renamed), m);
    }
    return FuzzyArray::from_content(std::move(base), std::move(phi));
}

namespace {

using MultisetMerge = FuzzyMultiset (*)(const FuzzyMultiset&, const FuzzyMultiset&);

FuzzyArray merge_arrays(const FuzzyArray& a, const FuzzyArray& b, MultisetMerge merge) {
    StandardArray base = standard_union(a.base(), b.base());
    FuzzyArray::Component phi;
    for (const Row& r : row_set(base)) {
        FuzzyMultiset m = merge(a.phi(r), b.phi(r));
        if (!m.empty()) {
            phi.emplace(r, std::move(m));
        }
    }
    return FuzzyArray::from_content(std::move(base), std::move(phi));
}

}  // namespace

FuzzyArray disjoint_union(const FuzzyArray& a, const FuzzyArray& b) {
    return merge_arrays(a, b, &disjoint_union);
}

FuzzyArray fuzzy_union(const FuzzyArray& a, const FuzzyArray& b) {
    return merge_arrays(a, b, &multiset_union);
}

FuzzyArray fuzzy_intersection(const FuzzyArray& a, const FuzzyArray& b) {
    return merge_arrays(a, b, &multiset_intersection);
}

FuzzyArray difference(const FuzzyArray& a, const FuzzyArray& b) {
    return merge_arrays(a, b, &cutoff_difference);
}

ColumnKey tag_column(const ColumnKey& c, int tag) {
    return c.tag() ? ColumnKey(c.to_string(), tag) : c.with_tag(tag);
}

FuzzyArray theta_join(const FuzzyArray& a, const FuzzyArray& b, const ThetaPredicate& theta) {
    StandardArray base;
    for (const ColumnKey& c : a.base().col_keys()) {
        base.add_col(tag_column(c, 1));
    }
    for (const ColumnKey& c : b.base().col_keys()) {
        base.add_col(tag_column(c, 2));
    }
    std::map<RowKey, FuzzyMultiset> fuzzy;
    for (const auto& [gk, g] : a.nonzero_rows()) {
        for (const auto& [hk, h] : b.nonzero_rows()) {
            RowKey key = RowKey::paired(gk, hk);
            base.add_row(key);
            for (const auto& [c, v] : g.cells()) {
                base.set(key, tag_column(c, 1), v);
            }
            for (const auto& [c, v] : h.cells()) {
                base.set(key, tag_column(c, 2), v);
            }
            Fuzzy degree = theta.fn(g.restricted_to(theta.left_cols),
                                    h.restricted_to(theta.right_cols));
            std::vector<Fuzzy> degrees;
            degrees.reserve(a.phi(g).cardinality() * b.phi(h).cardinality());
            for (Fuzzy x : a.phi(g).values()) {
                for (Fuzzy y : b.phi(h).values()) {
                    degrees.push_back(std::min(std::min(x, y), degree));
                }
            }
            FuzzyMultiset m = FuzzyMultiset::canonical(std::move(degrees));
            if (!m.empty()) {
                fuzzy.emplace(std::move(key), std::move(m));
            }
        }
    }
    return FuzzyArray::make_regular(base, fuzzy);
}

}  // namespace fuzzydb
