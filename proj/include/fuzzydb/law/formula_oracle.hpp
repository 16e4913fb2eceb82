#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>

#include "fuzzydb/fuzzy_array.hpp"

namespace fuzzydb::law {

/// Key domain for the formula constructions. The identity-array formulas
/// mix row keys, column keys, singleton tag sets and Kronecker pairs in one
/// key space; MKey embeds them all with structural ordering.
class MKey {
public:
    MKey() : rep_(std::string{}) {}

    static MKey row(RowKey k) { return MKey(Rep(std::move(k))); }
    static MKey col(ColumnKey k) { return MKey(Rep(std::move(k))); }
    static MKey tag(int t) { return MKey(Rep(t)); }
    static MKey name(std::string s) { return MKey(Rep(std::move(s))); }
    static MKey pair(MKey a, MKey b) {
        return MKey(Rep(Pair{box(std::move(a)), box(std::move(b))}));
    }

    const ColumnKey* as_col() const { return std::get_if<ColumnKey>(&rep_); }
    const std::pair<const MKey*, const MKey*> as_pair() const {
        if (const Pair* p = std::get_if<Pair>(&rep_)) {
            return {p->first.get(), p->second.get()};
        }
        return {nullptr, nullptr};
    }
    const int* as_tag() const { return std::get_if<int>(&rep_); }

    int compare(const MKey& other) const;
    bool operator==(const MKey& other) const { return compare(other) == 0; }
    bool operator<(const MKey& other) const { return compare(other) < 0; }

    std::string to_string() const;

private:
    using Box = std::shared_ptr<const MKey>;
    struct Pair {
        Box first;
        Box second;
    };
    using Rep = std::variant<RowKey, ColumnKey, int, std::string, Pair>;
    explicit MKey(Rep rep) : rep_(std::move(rep)) {}
    static Box box(MKey k) { return std::make_shared<const MKey>(std::move(k)); }
    Rep rep_;
};

/// Cell domain with an explicit multiplicative unit. The formulas only ever
/// multiply data values by identity entries, so a product of two data values
/// is a hard error rather than a definable case.
struct SemiValue {
    bool one = false;
    CellValue cell;  // meaningful only when !one

    bool is_zero() const { return !one && cell.is_null(); }
    bool operator==(const SemiValue&) const = default;
    bool operator<(const SemiValue& other) const {
        if (one != other.one) {
            return !one;
        }
        return cell < other.cell;
    }
};

SemiValue sv_one();
SemiValue sv_of(CellValue v);
SemiValue sv_times(const SemiValue& a, const SemiValue& b);
SemiValue sv_plus(const SemiValue& a, const SemiValue& b);

using MathArray = BasicArray<MKey, MKey, SemiValue>;

MathArray to_math(const StandardArray& a);

/// Decodes a formula result back into a StandardArray: columns through the
/// given map, rows as synthesized user keys in key order (equivalence never
/// looks at row keys).
StandardArray from_math(const MathArray& m, ColumnKey (*decode_col)(const MKey&));

ColumnKey decode_plain_col(const MKey& k);
ColumnKey decode_tagged_col(const MKey& k);

/// Identity-style array: ones exactly at the given (row, col) positions.
MathArray identity_math(const std::set<MKey>& rows, const std::set<MKey>& cols,
                        const std::vector<std::pair<MKey, MKey>>& ones);

// The constructions under test, assembled from identity factors, products,
// element-wise sums and transposes exactly as defined.
MathArray formula_omega(const MathArray& a);
MathArray formula_pad(const MathArray& a, const std::set<MKey>& rows, const std::set<MKey>& cols);
MathArray formula_rename(const MathArray& a, const std::map<MKey, MKey>& f);
MathArray formula_sqcup(const MathArray& a, const MathArray& b);
MathArray formula_theta_skeleton(const MathArray& a, const std::set<MKey>& a_nonzero_rows,
                                 const MathArray& b, const std::set<MKey>& b_nonzero_rows);

/// Strong-equivalence verdict between a formula-built and a natively-built
/// array.
bool oracle_equiv(const StandardArray& formulaic, const StandardArray& native);

}  // namespace fuzzydb::law
