#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fuzzydb/fuzzy_multiset.hpp"
#include "fuzzydb/standard_array.hpp"

namespace fuzzydb {

/// A fuzzy associative array: a standard array together with a fuzzy
/// component mapping each row (by content, not by key) to the multiset of
/// degrees with which that row belongs to the table.
///
/// Arrays are always held regular: the base has all-distinct rows, the
/// component stores no empty multisets, and the all-Null row never carries
/// one. Those conventions make both equivalences plain map comparisons.
class FuzzyArray {
public:
    using Component = std::map<Row, FuzzyMultiset>;

    FuzzyArray() = default;  // the zero array

    /// Regularizes: duplicate rows of base are merged and their multisets
    /// combined by disjoint union. Multisets are keyed by base row key here.
    /// A multiset attached to a key outside the base is a consistency error.
    static FuzzyArray make_regular(const StandardArray& base,
                                   const std::map<RowKey, FuzzyMultiset>& fuzzy);

    /// Builds from an already-regular base and a content-keyed component.
    /// Throws if the base has duplicate rows or the component mentions row
    /// contents the base lacks.
    static FuzzyArray from_content(StandardArray base, Component phi);

    const StandardArray& base() const { return base_; }
    const Component& component() const { return phi_; }

    /// Degree multiset of a row content; the empty multiset for zero rows,
    /// unknown rows, or anything else not stored.
    const FuzzyMultiset& phi(const Row& r) const;

    /// (key, content) of every nonzero row, in key order.
    std::vector<std::pair<RowKey, Row>> nonzero_rows() const;

    bool operator==(const FuzzyArray&) const = default;

private:
    StandardArray base_;
    Component phi_;
};

inline FuzzyArray zero_array() { return FuzzyArray{}; }

/// A is a sub-array of B: the degree multiset of every row of A is a
/// multiset subset of B's for the same row.
bool sub_array(const FuzzyArray& a, const FuzzyArray& b);

FuzzyArray pad_fuzzy(const FuzzyArray& a, const std::set<RowKey>& rows,
                     const std::set<ColumnKey>& cols);

/// Strong equivalence: rows matched exactly with their multisets; rows with
/// empty multisets are ignorable on both sides.
bool strong_equiv(const FuzzyArray& a, const FuzzyArray& b);

/// Weak equivalence: per-row maxima agree.
bool weak_equiv(const FuzzyArray& a, const FuzzyArray& b);

}  // namespace fuzzydb
