#pragma once

#include <functional>
#include <map>
#include <set>

#include "fuzzydb/fuzzy_array.hpp"

namespace fuzzydb {

/// A fuzzy condition: maps a row to the degree with which it satisfies an
/// imprecise predicate. Must be deterministic and total on the rows it sees.
using FuzzyCondition = std::function<Fuzzy(const Row&)>;

/// A theta predicate over a pair of rows, one from each join side. The
/// column sets say which columns each side of the predicate reads; they are
/// expected to be subsets of the respective arrays' column supports.
struct ThetaPredicate {
    std::set<ColumnKey> left_cols;
    std::set<ColumnKey> right_cols;
    std::function<Fuzzy(const Row& left, const Row& right)> fn;
};

/// Projection onto the column set js. Rows collapsing to the same
/// restriction have their multisets merged by disjoint union.
FuzzyArray project(const FuzzyArray& a, const std::set<ColumnKey>& js);

/// Selection: every degree of a row is clamped by min with psi(row).
FuzzyArray select(const FuzzyArray& a, const FuzzyCondition& psi);

/// Renaming via an injective column mapping defined on (at least) the whole
/// column support.
FuzzyArray rename(const FuzzyArray& a, const std::map<ColumnKey, ColumnKey>& f);

FuzzyArray disjoint_union(const FuzzyArray& a, const FuzzyArray& b);
FuzzyArray fuzzy_union(const FuzzyArray& a, const FuzzyArray& b);
FuzzyArray fuzzy_intersection(const FuzzyArray& a, const FuzzyArray& b);

/// Rank-wise cutoff difference applied per row.
FuzzyArray difference(const FuzzyArray& a, const FuzzyArray& b);

/// Theta-join: one output row per pair of nonzero rows, columns tagged by
/// side, each degree pair clamped by the theta degree of the row pair.
FuzzyArray theta_join(const FuzzyArray& a, const FuzzyArray& b, const ThetaPredicate& theta);

/// Side-tagging of join output columns. Nests by flattening an existing tag
/// into the name, so joins of joins keep distinct columns.
ColumnKey tag_column(const ColumnKey& c, int tag);

}  // namespace fuzzydb
