#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzydb/fuzzy_value.hpp"

namespace fuzzydb {

/// A finite multiset of fuzzy values in canonical form: sorted non-increasing
/// with every zero dropped. Zeros are unobservable (counts only matter on
/// (0, 1]), so canonical form makes multiset equivalence plain structural
/// equality, and the k-th largest element is a direct index read.
class FuzzyMultiset {
public:
    FuzzyMultiset() = default;
    FuzzyMultiset(std::initializer_list<double> vs);

    static FuzzyMultiset canonical(std::vector<Fuzzy> vs);

    std::size_t cardinality() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    /// k-th largest element, 1-based; 0 beyond the cardinality.
    Fuzzy kth(std::size_t k) const;

    /// Number of occurrences of x.
    std::size_t count(Fuzzy x) const;

    const std::vector<Fuzzy>& values() const { return values_; }

    bool operator==(const FuzzyMultiset&) const = default;
    bool operator<(const FuzzyMultiset& other) const { return values_ < other.values_; }

    /// Semicolon-separated non-increasing rendering, e.g. "1;0.8;0.5".
    /// The empty multiset renders as the empty string.
    std::string to_string() const;
    static FuzzyMultiset parse(std::string_view text);

private:
    std::vector<Fuzzy> values_;
};

Fuzzy max_value(const FuzzyMultiset& s);

FuzzyMultiset disjoint_union(const FuzzyMultiset& s, const FuzzyMultiset& t);
FuzzyMultiset multiset_union(const FuzzyMultiset& s, const FuzzyMultiset& t);
FuzzyMultiset multiset_intersection(const FuzzyMultiset& s, const FuzzyMultiset& t);

/// True iff s[k] <= t[k] for every rank k.
bool subset(const FuzzyMultiset& s, const FuzzyMultiset& t);

/// Every element replaced by its min with c.
FuzzyMultiset clamp_min(const FuzzyMultiset& s, Fuzzy c);

/// Rank-wise cutoff difference: keeps s[k] exactly when s[k] > t[k].
/// Ties are cut.
FuzzyMultiset cutoff_difference(const FuzzyMultiset& s, const FuzzyMultiset& t);

}  // namespace fuzzydb
