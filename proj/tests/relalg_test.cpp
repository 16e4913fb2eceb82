#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fuzzydb/relalg.hpp"
#include "test_arrays.hpp"

using namespace fuzzydb;
using testgen::make_fuzzy;
using testgen::make_row;

namespace {

Row person(const char* name, std::int64_t age) {
    return make_row({{"Name", CellValue::text(name)}, {"Age", CellValue::integer(age)}});
}

const ColumnKey kName{"Name"};
const ColumnKey kAge{"Age"};

// The worked join inputs: A = {John/30: {1,0.8}, Sam/28: {0.9}},
// B = {Alex/30: {0.6}, John/29: {0.8}}.
FuzzyArray table_a() {
    return make_fuzzy({{person("John", 30), FuzzyMultiset{1, 0.8}},
                       {person("Sam", 28), FuzzyMultiset{0.9}}});
}
FuzzyArray table_b() {
    return make_fuzzy({{person("Alex", 30), FuzzyMultiset{0.6}},
                       {person("John", 29), FuzzyMultiset{0.8}}});
}

// 1 when the ages agree, 0.5 when they differ by one, 0 otherwise.
ThetaPredicate age_gap_theta() {
    return ThetaPredicate{
        {kAge},
        {kAge},
        [](const Row& l, const Row& r) -> Fuzzy {
            if (!l.at(kAge).is_numeric() || !r.at(kAge).is_numeric()) {
                return 0.0;
            }
            double gap = std::abs(l.at(kAge).as_number() - r.at(kAge).as_number());
            if (gap == 0.0) return 1.0;
            if (gap == 1.0) return 0.5;
            return 0.0;
        }};
}

Row joined(const char* name1, std::int64_t age1, const char* name2, std::int64_t age2) {
    Row r;
    r.set(ColumnKey{"Name", 1}, CellValue::text(name1));
    r.set(ColumnKey{"Age", 1}, CellValue::integer(age1));
    r.set(ColumnKey{"Name", 2}, CellValue::text(name2));
    r.set(ColumnKey{"Age", 2}, CellValue::integer(age2));
    return r;
}

}  // namespace

TEST_CASE("projection groups multisets by restricted content") {
    FuzzyArray a = make_fuzzy({{person("John", 30), FuzzyMultiset{1, 0.8}},
                               {person("John", 35), FuzzyMultiset{0.9}}});
    FuzzyArray p = project(a, {kName});
    CHECK(p.base().row_keys().size() == 1);
    CHECK(p.phi(make_row({{"Name", CellValue::text("John")}})) == FuzzyMultiset{1, 0.9, 0.8});
}

TEST_CASE("projection onto the empty column set is the zero array") {
    FuzzyArray a = table_a();
    CHECK(strong_equiv(project(a, {}), zero_array()));
    CHECK(strong_equiv(project(zero_array(), {}), zero_array()));
}

TEST_CASE("projection composes by intersecting the column sets") {
    testgen::TestGen gen(31);
    for (int i = 0; i < 300; ++i) {
        FuzzyArray a = gen.random_fuzzy();
        std::set<ColumnKey> j1;
        std::set<ColumnKey> j2;
        for (const ColumnKey& c : gen.cols) {
            if (gen.below(2)) j1.insert(c);
            if (gen.below(2)) j2.insert(c);
        }
        std::set<ColumnKey> both;
        for (const ColumnKey& c : j1) {
            if (j2.contains(c)) both.insert(c);
        }
        CHECK(strong_equiv(project(project(a, j2), j1), project(a, both)));
    }
}

TEST_CASE("selection clamps degrees by the condition") {
    FuzzyArray a = make_fuzzy({{person("John", 30), FuzzyMultiset{1, 0.8}}});
    FuzzyArray s = select(a, [](const Row&) -> Fuzzy { return 0.5; });
    CHECK(s.phi(person("John", 30)) == FuzzyMultiset{0.5, 0.5});

    CHECK(strong_equiv(select(a, [](const Row&) -> Fuzzy { return 1.0; }), a));
    CHECK(strong_equiv(select(a, [](const Row&) -> Fuzzy { return 0.0; }), zero_array()));

    CHECK_THROWS_AS(select(a, [](const Row&) -> Fuzzy { return 1.5; }), std::domain_error);
}

TEST_CASE("selection composition is the pointwise min of conditions") {
    testgen::TestGen gen(32);
    for (int i = 0; i < 300; ++i) {
        FuzzyArray a = gen.random_fuzzy();
        double c1 = static_cast<double>(gen.below(11)) / 10.0;
        double c2 = static_cast<double>(gen.below(11)) / 10.0;
        auto psi1 = [c1](const Row& r) -> Fuzzy {
            return r.at(ColumnKey{"a"}).is_null() ? c1 : 1.0;
        };
        auto psi2 = [c2](const Row&) -> Fuzzy { return c2; };
        auto both = [&](const Row& r) -> Fuzzy { return std::min(psi1(r), psi2(r)); };
        CHECK(strong_equiv(select(select(a, psi2), psi1), select(a, both)));
    }
}

TEST_CASE("renaming relabels columns and nothing else") {
    FuzzyArray a = table_a();
    std::map<ColumnKey, ColumnKey> id{{kName, kName}, {kAge, kAge}};
    CHECK(strong_equiv(rename(a, id), a));

    std::map<ColumnKey, ColumnKey> f{{kName, ColumnKey{"N"}}, {kAge, ColumnKey{"A"}}};
    std::map<ColumnKey, ColumnKey> inv{{ColumnKey{"N"}, kName}, {ColumnKey{"A"}, kAge}};
    FuzzyArray renamed = rename(a, f);
    CHECK(strong_equiv(rename(renamed, inv), a));
    CHECK(renamed.phi(make_row({{"N", CellValue::text("John")}, {"A", CellValue::integer(30)}})) ==
          FuzzyMultiset{1, 0.8});

    std::map<ColumnKey, ColumnKey> partial{{kName, ColumnKey{"N"}}};
    CHECK_THROWS_AS(rename(a, partial), std::invalid_argument);
    std::map<ColumnKey, ColumnKey> collapsing{{kName, ColumnKey{"X"}}, {kAge, ColumnKey{"X"}}};
    CHECK_THROWS_AS(rename(a, collapsing), std::invalid_argument);
}

TEST_CASE("disjoint union adds degree multisets per row") {
    FuzzyArray a = make_fuzzy({{person("John", 30), FuzzyMultiset{1}}});
    FuzzyArray b = make_fuzzy({{person("John", 30), FuzzyMultiset{1}}});
    CHECK(disjoint_union(a, b).phi(person("John", 30)) == FuzzyMultiset{1, 1});
    CHECK(strong_equiv(disjoint_union(a, zero_array()), a));

    FuzzyArray c = make_fuzzy({{person("Sam", 28), FuzzyMultiset{0.7}}});
    FuzzyArray u = disjoint_union(a, c);
    CHECK(u.phi(person("John", 30)) == FuzzyMultiset{1});
    CHECK(u.phi(person("Sam", 28)) == FuzzyMultiset{0.7});
}

TEST_CASE("union and intersection act rank-wise per row") {
    FuzzyArray a = make_fuzzy({{person("John", 30), FuzzyMultiset{0.9, 0.5}}});
    FuzzyArray b = make_fuzzy({{person("John", 30), FuzzyMultiset{0.7}}});
    CHECK(fuzzy_union(a, b).phi(person("John", 30)) == FuzzyMultiset{0.9, 0.5});
    CHECK(fuzzy_intersection(a, b).phi(person("John", 30)) == FuzzyMultiset{0.7});

    CHECK(strong_equiv(fuzzy_union(a, a), a));
    CHECK(strong_equiv(fuzzy_union(a, zero_array()), a));
    CHECK(strong_equiv(fuzzy_intersection(a, a), a));
    CHECK(strong_equiv(fuzzy_intersection(a, zero_array()), zero_array()));
}

TEST_CASE("difference cuts rank-wise with strict comparison") {
    FuzzyArray a = make_fuzzy({{person("John", 30), FuzzyMultiset{0.9, 0.5}}});
    FuzzyArray b = make_fuzzy({{person("John", 30), FuzzyMultiset{0.9}}});
    CHECK(difference(a, b).phi(person("John", 30)) == FuzzyMultiset{0.5});
    CHECK(strong_equiv(difference(a, a), zero_array()));
    CHECK(strong_equiv(difference(a, zero_array()), a));
}

TEST_CASE("theta join reproduces the worked example") {
    FuzzyArray j = theta_join(table_a(), table_b(), age_gap_theta());

    CHECK(j.base().row_keys().size() == 4);
    CHECK(j.component().size() == 3);
    CHECK(j.phi(joined("John", 30, "Alex", 30)) == FuzzyMultiset{0.6, 0.6});
    CHECK(j.phi(joined("John", 30, "John", 29)) == FuzzyMultiset{0.5, 0.5});
    CHECK(j.phi(joined("Sam", 28, "John", 29)) == FuzzyMultiset{0.5});
    CHECK(j.phi(joined("Sam", 28, "Alex", 30)) == FuzzyMultiset{});
    CHECK(row_set(j.base()).contains(joined("Sam", 28, "Alex", 30)));
}

TEST_CASE("theta join degenerate cases") {
    ThetaPredicate zero_theta{{kAge}, {kAge}, [](const Row&, const Row&) -> Fuzzy { return 0.0; }};
    CHECK(strong_equiv(theta_join(table_a(), table_b(), zero_theta), zero_array()));
    CHECK(strong_equiv(theta_join(table_a(), zero_array(), age_gap_theta()), zero_array()));
    CHECK(strong_equiv(theta_join(zero_array(), table_b(), age_gap_theta()), zero_array()));

    // zero rows of either operand never join
    FuzzyArray with_zero = make_fuzzy(
        {{person("John", 30), FuzzyMultiset{1}}, {person("Ghost", 29), FuzzyMultiset{}}});
    FuzzyArray j = theta_join(with_zero, table_b(), age_gap_theta());
    for (const auto& [r, m] : j.component()) {
        CHECK(r.at(ColumnKey{"Name", 1}) == CellValue::text("John"));
    }
}

TEST_CASE("join cardinality bound") {
    testgen::TestGen gen(33);
    for (int i = 0; i < 150; ++i) {
        FuzzyArray a = gen.random_fuzzy(3);
        FuzzyArray b = gen.random_fuzzy(3);
        ThetaPredicate theta{{ColumnKey{"a"}},
                             {ColumnKey{"a"}},
                             [](const Row& l, const Row& r) -> Fuzzy {
                                 return l.at(ColumnKey{"a"}) == r.at(ColumnKey{"a"}) ? 1.0 : 0.4;
                             }};
        FuzzyArray j = theta_join(a, b, theta);
        for (const auto& [gk, g] : a.nonzero_rows()) {
            for (const auto& [hk, h] : b.nonzero_rows()) {
                Row pair_row;
                for (const auto& [c, v] : g.cells()) pair_row.set(tag_column(c, 1), v);
                for (const auto& [c, v] : h.cells()) pair_row.set(tag_column(c, 2), v);
                CHECK(j.phi(pair_row).cardinality() <=
                      a.phi(g).cardinality() * b.phi(h).cardinality());
            }
        }
    }
}

TEST_CASE("binary operations are commutative and associative up to strong equivalence") {
    testgen::TestGen gen(34);
    for (int i = 0; i < 200; ++i) {
        FuzzyArray a = gen.random_fuzzy();
        FuzzyArray b = gen.random_fuzzy();
        FuzzyArray c = gen.random_fuzzy();
        CHECK(strong_equiv(disjoint_union(a, b), disjoint_union(b, a)));
        CHECK(strong_equiv(fuzzy_union(a, b), fuzzy_union(b, a)));
        CHECK(strong_equiv(fuzzy_intersection(a, b), fuzzy_intersection(b, a)));
        CHECK(strong_equiv(disjoint_union(disjoint_union(a, b), c),
                           disjoint_union(a, disjoint_union(b, c))));
        CHECK(strong_equiv(fuzzy_union(fuzzy_union(a, b), c), fuzzy_union(a, fuzzy_union(b, c))));
        CHECK(strong_equiv(fuzzy_intersection(fuzzy_intersection(a, b), c),
                           fuzzy_intersection(a, fuzzy_intersection(b, c))));

        // ∩ and ∪ distribute over ⊎
        CHECK(strong_equiv(disjoint_union(a, fuzzy_intersection(b, c)),
                           fuzzy_intersection(disjoint_union(a, b), disjoint_union(a, c))));
        CHECK(strong_equiv(disjoint_union(a, fuzzy_union(b, c)),
                           fuzzy_union(disjoint_union(a, b), disjoint_union(a, c))));
    }
}

TEST_CASE("disjoint union does not distribute over intersection or union (pinned)") {
    Row r = person("John", 30);
    FuzzyArray a = make_fuzzy({{r, FuzzyMultiset{1}}});  // {1, 0} in the source notation
    FuzzyArray b = make_fuzzy({{r, FuzzyMultiset{1, 1}}});
    FuzzyArray c = make_fuzzy({{r, FuzzyMultiset{1, 1}}});
    FuzzyArray lhs = fuzzy_intersection(a, disjoint_union(b, c));
    FuzzyArray rhs = disjoint_union(fuzzy_intersection(a, b), fuzzy_intersection(a, c));
    CHECK(lhs.phi(r) == FuzzyMultiset{1});
    CHECK(rhs.phi(r) == FuzzyMultiset{1, 1});
    CHECK_FALSE(strong_equiv(lhs, rhs));

    FuzzyArray a2 = make_fuzzy({{r, FuzzyMultiset{1, 1}}});
    FuzzyArray b2 = make_fuzzy({{r, FuzzyMultiset{1}}});
    FuzzyArray c2 = make_fuzzy({{r, FuzzyMultiset{1}}});
    CHECK_FALSE(strong_equiv(fuzzy_union(a2, disjoint_union(b2, c2)),
                             disjoint_union(fuzzy_union(a2, b2), fuzzy_union(a2, c2))));
}

TEST_CASE("difference inclusions hold, sometimes strictly") {
    testgen::TestGen gen(35);
    for (int i = 0; i < 300; ++i) {
        FuzzyArray a = gen.random_fuzzy();
        FuzzyArray b = gen.random_fuzzy();
        FuzzyArray c = gen.random_fuzzy();
        CHECK(sub_array(fuzzy_union(difference(a, c), difference(b, c)),
                        difference(fuzzy_union(a, b), c)));
        CHECK(sub_array(fuzzy_union(difference(a, b), difference(a, c)),
                        difference(a, fuzzy_intersection(b, c))));
    }

    // strict instance for (A∖C) ∪ (B∖C) ⊆ (A∪B)∖C: the rank-2 win of B
    // compacts away on the left but survives on the right
    Row r = person("John", 30);
    FuzzyArray a = make_fuzzy({{r, FuzzyMultiset{1}}});
    FuzzyArray b = make_fuzzy({{r, FuzzyMultiset{0.9, 0.8}}});
    FuzzyArray c = make_fuzzy({{r, FuzzyMultiset{0.9}}});
    FuzzyArray lhs = fuzzy_union(difference(a, c), difference(b, c));
    FuzzyArray rhs = difference(fuzzy_union(a, b), c);
    CHECK(lhs.phi(r) == FuzzyMultiset{1});
    CHECK(rhs.phi(r) == FuzzyMultiset{1, 0.8});
    CHECK(sub_array(lhs, rhs));
    CHECK_FALSE(strong_equiv(lhs, rhs));

    // strict instance for (A∖B) ∪ (A∖C) ⊆ A∖(B∩C)
    FuzzyArray a2 = make_fuzzy({{r, FuzzyMultiset{0.9, 0.8}}});
    FuzzyArray b2 = make_fuzzy({{r, FuzzyMultiset{0.8, 0.8}}});
    FuzzyArray c2 = make_fuzzy({{r, FuzzyMultiset{0.9, 0.5}}});
    FuzzyArray lhs2 = fuzzy_union(difference(a2, b2), difference(a2, c2));
    FuzzyArray rhs2 = difference(a2, fuzzy_intersection(b2, c2));
    CHECK(lhs2.phi(r) == FuzzyMultiset{0.9});
    CHECK(rhs2.phi(r) == FuzzyMultiset{0.9, 0.8});
    CHECK(sub_array(lhs2, rhs2));
    CHECK_FALSE(strong_equiv(lhs2, rhs2));
}

TEST_CASE("projection preserves disjoint union strongly and union weakly") {
    testgen::TestGen gen(36);
    for (int i = 0; i < 300; ++i) {
        FuzzyArray a = gen.random_fuzzy();
        FuzzyArray b = gen.random_fuzzy();
        std::set<ColumnKey> j;
        for (const ColumnKey& c : gen.cols) {
            if (gen.below(2)) j.insert(c);
        }
        CHECK(strong_equiv(project(disjoint_union(a, b), j),
                           disjoint_union(project(a, j), project(b, j))));
        CHECK(weak_equiv(project(fuzzy_union(a, b), j),
                         fuzzy_union(project(a, j), project(b, j))));
    }
}

TEST_CASE("projection counterexamples from the remarks (pinned)") {
    // Two rows agreeing on J = {Name}: r = John/30, t = John/35.
    Row r = person("John", 30);
    Row t = person("John", 35);
    Row s = make_row({{"Name", CellValue::text("John")}});
    std::set<ColumnKey> j{kName};

    FuzzyArray a = make_fuzzy({{r, FuzzyMultiset{0.5, 0.5}}, {t, FuzzyMultiset{1}}});
    FuzzyArray b = make_fuzzy({{r, FuzzyMultiset{1}}, {t, FuzzyMultiset{0.5, 0.5}}});

    // ∪ is preserved weakly but not strongly
    FuzzyArray pu = project(fuzzy_union(a, b), j);
    FuzzyArray up = fuzzy_union(project(a, j), project(b, j));
    CHECK(pu.phi(s) == FuzzyMultiset{1, 1, 0.5, 0.5});
    CHECK(up.phi(s) == FuzzyMultiset{1, 0.5, 0.5});
    CHECK_FALSE(strong_equiv(pu, up));
    CHECK(weak_equiv(pu, up));

    // ∩ is not even preserved weakly
    FuzzyArray pi = project(fuzzy_intersection(a, b), j);
    FuzzyArray ip = fuzzy_intersection(project(a, j), project(b, j));
    CHECK(pi.phi(s) == FuzzyMultiset{0.5, 0.5});
    CHECK(ip.phi(s) == FuzzyMultiset{1, 0.5, 0.5});
    CHECK_FALSE(weak_equiv(pi, ip));

    // ∖ is not preserved weakly either
    FuzzyArray pd = project(difference(a, b), j);
    FuzzyArray dp = difference(project(a, j), project(b, j));
    CHECK(pd.phi(s) == FuzzyMultiset{1, 0.5});
    CHECK(dp.phi(s) == FuzzyMultiset{});
    CHECK_FALSE(weak_equiv(pd, dp));
}

TEST_CASE("every operation is preserved under zero-padding of its arguments") {
    testgen::TestGen gen(37);
    std::set<RowKey> fresh_rows{RowKey::user("pad1"), RowKey::user("pad2")};
    std::set<ColumnKey> fresh_cols{ColumnKey{"padcol"}};
    for (int i = 0; i < 150; ++i) {
        FuzzyArray a = gen.random_fuzzy();
        FuzzyArray b = gen.random_fuzzy();
        FuzzyArray pa = pad_fuzzy(a, fresh_rows, fresh_cols);
        FuzzyArray pb = pad_fuzzy(b, fresh_rows, fresh_cols);

        std::set<ColumnKey> j{gen.cols[0], gen.cols[1]};
        CHECK(strong_equiv(project(pa, j), project(a, j)));

        auto psi = [](const Row& row) -> Fuzzy {
            return row.at(ColumnKey{"a"}).is_null() ? 0.3 : 0.9;
        };
        CHECK(strong_equiv(select(pa, psi), select(a, psi)));

        std::map<ColumnKey, ColumnKey> f;
        for (const ColumnKey& c : pa.base().col_keys()) {
            f.emplace(c, ColumnKey{c.name() + "_r"});
        }
        std::map<ColumnKey, ColumnKey> f_unpadded;
        for (const ColumnKey& c : a.base().col_keys()) {
            f_unpadded.emplace(c, ColumnKey{c.name() + "_r"});
        }
        CHECK(strong_equiv(rename(pa, f), rename(a, f_unpadded)));

        CHECK(strong_equiv(disjoint_union(pa, pb), disjoint_union(a, b)));
        CHECK(strong_equiv(fuzzy_union(pa, pb), fuzzy_union(a, b)));
        CHECK(strong_equiv(fuzzy_intersection(pa, pb), fuzzy_intersection(a, b)));
        CHECK(strong_equiv(difference(pa, pb), difference(a, b)));

        ThetaPredicate theta{{ColumnKey{"a"}},
                             {ColumnKey{"b"}},
                             [](const Row& l, const Row& r) -> Fuzzy {
                                 return l.at(ColumnKey{"a"}) == r.at(ColumnKey{"b"}) ? 1.0 : 0.2;
                             }};
        CHECK(strong_equiv(theta_join(pa, pb, theta), theta_join(a, b, theta)));
    }
}

TEST_CASE("selection commutes with renaming when the condition is composed") {
    testgen::TestGen gen(38);
    for (int i = 0; i < 200; ++i) {
        FuzzyArray a = gen.random_fuzzy();
        std::map<ColumnKey, ColumnKey> f;
        for (const ColumnKey& c : a.base().col_keys()) {
            f.emplace(c, ColumnKey{c.name() + "_n"});
        }
        auto rename_row = [&f](const Row& r) {
            Row out;
            for (const auto& [c, v] : r.cells()) {
                out.set(f.at(c), v);
            }
            return out;
        };
        ColumnKey probe{"a_n"};
        auto psi_renamed = [&probe](const Row& r) -> Fuzzy {
            return r.at(probe).is_null() ? 0.4 : 0.9;
        };
        auto psi_composed = [&](const Row& r) -> Fuzzy { return psi_renamed(rename_row(r)); };
        CHECK(strong_equiv(select(rename(a, f), psi_renamed),
                           rename(select(a, psi_composed), f)));
    }
}

TEST_CASE("padding then projecting the padding away recovers the array") {
    FuzzyArray a = table_a();
    FuzzyArray padded = pad_fuzzy(a, {RowKey::user("fresh")}, {ColumnKey{"City"}});
    FuzzyArray back = project(padded, {kName, kAge});
    CHECK(weak_equiv(back, a));
    CHECK(strong_equiv(back, a));
}
