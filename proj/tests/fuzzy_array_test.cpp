#include <doctest.h>

#include <stdexcept>

#include "fuzzydb/fuzzy_array.hpp"
#include "test_arrays.hpp"

using namespace fuzzydb;
using testgen::make_fuzzy;
using testgen::make_row;

namespace {

Row john30() {
    return make_row({{"Name", CellValue::text("John")}, {"Age", CellValue::integer(30)}});
}
Row sam28() {
    return make_row({{"Name", CellValue::text("Sam")}, {"Age", CellValue::integer(28)}});
}

}  // namespace

TEST_CASE("make_regular merges duplicate rows by disjoint union") {
    StandardArray base;
    for (const RowKey& k : {RowKey::user("k1"), RowKey::user("k2")}) {
        base.add_row(k);
        base.set(k, ColumnKey{"Name"}, CellValue::text("John"));
        base.set(k, ColumnKey{"Age"}, CellValue::integer(30));
    }
    FuzzyArray a = FuzzyArray::make_regular(
        base, {{RowKey::user("k1"), FuzzyMultiset{0.9}}, {RowKey::user("k2"), FuzzyMultiset{0.5}}});
    CHECK(a.base().row_keys().size() == 1);
    CHECK(a.phi(john30()) == FuzzyMultiset{0.9, 0.5});
}

TEST_CASE("make_regular leaves regular input strongly equivalent") {
    FuzzyArray a = make_fuzzy({{john30(), FuzzyMultiset{1, 0.8}}, {sam28(), FuzzyMultiset{0.9}}});
    FuzzyArray again = FuzzyArray::make_regular(
        a.base(), [&] {
            std::map<RowKey, FuzzyMultiset> keyed;
            for (const RowKey& k : a.base().row_keys()) {
                keyed.emplace(k, a.phi(Row(a.base().row_or_empty(k))));
            }
            return keyed;
        }());
    CHECK(strong_equiv(a, again));
}

TEST_CASE("empty multisets and the all-Null row are zero rows") {
    FuzzyArray a = make_fuzzy({{john30(), FuzzyMultiset{}}, {sam28(), FuzzyMultiset{0.9}}});
    CHECK(a.component().size() == 1);
    CHECK(a.phi(john30()).empty());
    CHECK(a.base().row_keys().size() == 2);  // the zero row stays in the base

    // A nonempty multiset on the all-Null row is dropped by convention.
    StandardArray base;
    base.add_row(RowKey::user("z"));
    base.add_col(ColumnKey{"Name"});
    FuzzyArray b = FuzzyArray::make_regular(base, {{RowKey::user("z"), FuzzyMultiset{1}}});
    CHECK(b.component().empty());
    CHECK(b.phi(Row{}).empty());
}

TEST_CASE("make_regular rejects multisets on unknown keys") {
    StandardArray base;
    base.add_row(RowKey::user("k1"));
    CHECK_THROWS_AS(
        FuzzyArray::make_regular(base, {{RowKey::user("ghost"), FuzzyMultiset{1}}}),
        std::invalid_argument);
}

TEST_CASE("from_content demands a regular base and known contents") {
    StandardArray dup;
    for (const RowKey& k : {RowKey::user("k1"), RowKey::user("k2")}) {
        dup.add_row(k);
        dup.set(k, ColumnKey{"Name"}, CellValue::text("John"));
    }
    CHECK_THROWS_AS(FuzzyArray::from_content(dup, {}), std::invalid_argument);

    StandardArray ok;
    ok.add_row(RowKey::user("k1"));
    ok.set(RowKey::user("k1"), ColumnKey{"Name"}, CellValue::text("John"));
    CHECK_THROWS_AS(FuzzyArray::from_content(ok, {{sam28(), FuzzyMultiset{1}}}),
                    std::invalid_argument);
}

TEST_CASE("the zero array maps every probe to the empty multiset") {
    FuzzyArray z = zero_array();
    CHECK(z.phi(john30()).empty());
    CHECK(z.phi(Row{}).empty());
    CHECK(strong_equiv(z, zero_array()));
    CHECK(z.base().row_keys().empty());
}

TEST_CASE("sub_array") {
    FuzzyArray a = make_fuzzy({{john30(), FuzzyMultiset{0.9}}});
    FuzzyArray b = make_fuzzy({{john30(), FuzzyMultiset{0.5, 0.5}}});
    CHECK(sub_array(a, a));
    CHECK(sub_array(zero_array(), a));
    CHECK(sub_array(zero_array(), zero_array()));
    CHECK_FALSE(sub_array(a, b));

    FuzzyArray big = make_fuzzy({{john30(), FuzzyMultiset{1, 0.9}}, {sam28(), FuzzyMultiset{1}}});
    CHECK(sub_array(a, big));
    CHECK_FALSE(sub_array(big, a));
}

TEST_CASE("padding a fuzzy array changes nothing observable") {
    FuzzyArray a = make_fuzzy({{john30(), FuzzyMultiset{1, 0.8}}});
    CHECK(pad_fuzzy(a, {}, {}) == a);

    FuzzyArray padded = pad_fuzzy(a, {RowKey::user("fresh")}, {ColumnKey{"City"}});
    CHECK(padded.base().col_keys().contains(ColumnKey{"City"}));
    CHECK(padded.phi(john30()) == FuzzyMultiset{1, 0.8});
    CHECK(strong_equiv(a, padded));
    CHECK(weak_equiv(a, padded));
}

TEST_CASE("strong and weak equivalence of fuzzy arrays") {
    FuzzyArray a = make_fuzzy({{john30(), FuzzyMultiset{1, 0.8}}});
    FuzzyArray with_zero_row =
        make_fuzzy({{john30(), FuzzyMultiset{1, 0.8}}, {sam28(), FuzzyMultiset{}}});
    CHECK(strong_equiv(a, with_zero_row));

    FuzzyArray b = make_fuzzy({{john30(), FuzzyMultiset{1}}});
    CHECK_FALSE(strong_equiv(a, b));
    CHECK(weak_equiv(a, b));  // maxima agree

    FuzzyArray c = make_fuzzy({{john30(), FuzzyMultiset{0.9}}});
    CHECK_FALSE(weak_equiv(a, c));
}

TEST_CASE("equivalences are reflexive, symmetric and transitive") {
    testgen::TestGen gen(555);
    for (int i = 0; i < 200; ++i) {
        FuzzyArray a = gen.random_fuzzy();

        // A strongly equivalent variant: re-keyed rows plus a zero row.
        StandardArray base;
        base.add_cols(a.base().col_keys());
        std::map<RowKey, FuzzyMultiset> fuzzy;
        for (const RowKey& k : a.base().row_keys()) {
            RowKey nk = RowKey::user("x_" + k.to_string());
            base.add_row(nk);
            Row content(a.base().row_or_empty(k));
            for (const auto& [c, v] : content.cells()) {
                base.set(nk, c, v);
            }
            if (!a.phi(content).empty()) {
                fuzzy.emplace(nk, a.phi(content));
            }
        }
        base.add_row(RowKey::user("zero_extra"));
        FuzzyArray b = FuzzyArray::make_regular(base, fuzzy);

        // A weakly equivalent variant: duplicate each multiset's maximum.
        FuzzyArray::Component weak_phi;
        for (const auto& [r, m] : b.component()) {
            std::vector<Fuzzy> vs = m.values();
            vs.push_back(max_value(m));
            weak_phi.emplace(r, FuzzyMultiset::canonical(std::move(vs)));
        }
        FuzzyArray c = FuzzyArray::from_content(b.base(), weak_phi);

        CHECK(strong_equiv(a, a));
        CHECK(strong_equiv(a, b));
        CHECK(strong_equiv(b, a));
        CHECK(weak_equiv(a, b));
        CHECK(weak_equiv(b, c));
        CHECK(weak_equiv(a, c));  // transitivity across the chain

        if (strong_equiv(a, b) && strong_equiv(b, c)) {
            CHECK(strong_equiv(a, c));
        }

        // sub_array is antisymmetric up to strong equivalence
        FuzzyArray d = gen.random_fuzzy();
        if (sub_array(a, d) && sub_array(d, a)) {
            CHECK(strong_equiv(a, d));
        }

        // regularity invariant: base rows all distinct
        CHECK(row_set(a.base()).size() == a.base().row_keys().size());

        // probing any unstored row yields the empty multiset
        CHECK(a.phi(make_row({{"nothere", CellValue::text("q")}})).empty());
    }
}
