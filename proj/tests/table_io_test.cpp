#include <doctest.h>

#include <cmath>

#include "fuzzydb/errors.hpp"
#include "fuzzydb/io/table_io.hpp"
#include "fuzzydb/relalg.hpp"
#include "test_arrays.hpp"

using namespace fuzzydb;
using testgen::make_fuzzy;
using testgen::make_row;

namespace {
Row person(const char* name, std::int64_t age) {
    return make_row({{"Name", CellValue::text(name)}, {"Age", CellValue::integer(age)}});
}
}  // namespace

TEST_CASE("reading the worked example table") {
    FuzzyArray a = io::read_table_text("Name,Age,__fuzzy\nJohn,30,1;0.8\nSam,28,0.9\n");
    CHECK(a.base().row_keys().size() == 2);
    CHECK(a.phi(person("John", 30)) == FuzzyMultiset{1, 0.8});
    CHECK(a.phi(person("Sam", 28)) == FuzzyMultiset{0.9});
    CHECK(a.base().get(RowKey::user("r1"), ColumnKey{"Age"}) == CellValue::integer(30));
}

TEST_CASE("empty fuzzy field reads as a zero row") {
    FuzzyArray a = io::read_table_text("Name,__fuzzy\nJohn,1\nSam,\n");
    CHECK(a.base().row_keys().size() == 2);
    CHECK(a.component().size() == 1);
    CHECK(a.phi(make_row({{"Name", CellValue::text("Sam")}})).empty());
}

TEST_CASE("duplicate data rows merge their multisets") {
    FuzzyArray a = io::read_table_text("Name,__fuzzy\nJohn,0.9\nJohn,0.5\n");
    CHECK(a.base().row_keys().size() == 1);
    CHECK(a.phi(make_row({{"Name", CellValue::text("John")}})) == FuzzyMultiset{0.9, 0.5});
}

TEST_CASE("__row keys and their validation") {
    FuzzyArray a = io::read_table_text("__row,Name,__fuzzy\nkey_a,John,1\n");
    CHECK(a.base().has_row(RowKey::user("key_a")));

    CHECK_THROWS_AS(io::read_table_text("__row,Name,__fuzzy\nk,John,1\nk,Sam,1\n"), TableIoError);
    CHECK_THROWS_AS(io::read_table_text("__row,Name,__fuzzy\n,John,1\n"), TableIoError);
}

TEST_CASE("header validation") {
    CHECK_THROWS_AS(io::read_table_text("Name,Age\nJohn,30\n"), TableIoError);
    CHECK_THROWS_AS(io::read_table_text("Name,__fuzzy,__fuzzy\nJohn,1,1\n"), TableIoError);
    CHECK_THROWS_AS(io::read_table_text("Name,__bogus,__fuzzy\nJohn,x,1\n"), TableIoError);
    CHECK_THROWS_AS(io::read_table_text("Name,Name,__fuzzy\nJohn,John,1\n"), TableIoError);
    CHECK_THROWS_AS(io::read_table_text(""), TableIoError);
}

TEST_CASE("data validation") {
    CHECK_THROWS_AS(io::read_table_text("Name,__fuzzy\nJohn,1.5\n"), TableIoError);
    CHECK_THROWS_AS(io::read_table_text("Name,__fuzzy\nJohn,abc\n"), TableIoError);
    CHECK_THROWS_AS(io::read_table_text("Name,__fuzzy\nJohn\n"), TableIoError);
    CHECK_THROWS_AS(io::read_table_text("Name,__fuzzy\n\"John,1\n"), TableIoError);
}

TEST_CASE("cell typing: bare literals by shape, quoted fields as text") {
    FuzzyArray a = io::read_table_text(
        "A,B,C,D,E,__fuzzy\n30,30.0,\"30\",hello,\"a,b\",1\n");
    Row r = a.nonzero_rows().front().second;
    CHECK(r.at(ColumnKey{"A"}) == CellValue::integer(30));
    CHECK(r.at(ColumnKey{"B"}) == CellValue::decimal(30.0));
    CHECK(r.at(ColumnKey{"C"}) == CellValue::text("30"));
    CHECK(r.at(ColumnKey{"D"}) == CellValue::text("hello"));
    CHECK(r.at(ColumnKey{"E"}) == CellValue::text("a,b"));
}

TEST_CASE("quote escapes and CRLF tolerance") {
    FuzzyArray a = io::read_table_text("Name,__fuzzy\r\n\"say \"\"hi\"\"\",0.5\r\n");
    CHECK(a.phi(make_row({{"Name", CellValue::text("say \"hi\"")}})) == FuzzyMultiset{0.5});
}

TEST_CASE("writing renders columns in key order with __fuzzy last") {
    FuzzyArray a = io::read_table_text("Name,Age,__fuzzy\nJohn,30,1;0.8\nSam,28,0.9\n");
    CHECK(io::to_csv(a) == "Age,Name,__fuzzy\n30,John,1;0.8\n28,Sam,0.9\n");
    CHECK(io::to_csv(zero_array()) == "__fuzzy\n");
}

TEST_CASE("zero rows are written with an empty fuzzy field") {
    FuzzyArray a = io::read_table_text("Name,__fuzzy\nJohn,\n");
    CHECK(io::to_csv(a) == "Name,__fuzzy\nJohn,\n");
}

TEST_CASE("typed cells survive a round-trip") {
    FuzzyArray a = io::read_table_text(
        "A,B,C,D,__fuzzy\n30,30.0,\"30\",\"\",1\n");
    FuzzyArray back = io::read_table_text(io::to_csv(a));
    CHECK(strong_equiv(a, back));
    Row r = back.nonzero_rows().front().second;
    CHECK(r.at(ColumnKey{"A"}) == CellValue::integer(30));
    CHECK(r.at(ColumnKey{"B"}) == CellValue::decimal(30.0));
    CHECK(r.at(ColumnKey{"C"}) == CellValue::text("30"));
    CHECK(r.at(ColumnKey{"D"}) == CellValue::text(""));
}

TEST_CASE("theta join output round-trips, including the zero row") {
    FuzzyArray a = io::read_table_text("Name,Age,__fuzzy\nJohn,30,1;0.8\nSam,28,0.9\n");
    FuzzyArray b = io::read_table_text("Name,Age,__fuzzy\nAlex,30,0.6\nJohn,29,0.8\n");
    ThetaPredicate theta{{ColumnKey{"Age"}},
                         {ColumnKey{"Age"}},
                         [](const Row& l, const Row& r) -> Fuzzy {
                             double gap = std::abs(l.at(ColumnKey{"Age"}).as_number() -
                                                   r.at(ColumnKey{"Age"}).as_number());
                             if (gap == 0.0) return 1.0;
                             if (gap == 1.0) return 0.5;
                             return 0.0;
                         }};
    FuzzyArray j = theta_join(a, b, theta);
    std::string csv = io::to_csv(j);
    FuzzyArray back = io::read_table_text(csv);
    CHECK(strong_equiv(j, back));
    CHECK(back.base().row_keys().size() == 4);  // the {} row survives
    CHECK(back.base().col_keys().contains(ColumnKey{"Name", 1}));
    CHECK(back.base().col_keys().contains(ColumnKey{"Age", 2}));
}

TEST_CASE("round-trip equivalence and byte determinism on random arrays") {
    testgen::TestGen gen(99);
    for (int i = 0; i < 100; ++i) {
        FuzzyArray a = gen.random_fuzzy();
        std::string csv = io::to_csv(a);
        CHECK(csv == io::to_csv(a));
        FuzzyArray back = io::read_table_text(csv);
        CHECK(strong_equiv(a, back));
        CHECK(io::to_csv(back) == csv);
    }
}

TEST_CASE("file IO") {
    FuzzyArray a = io::read_table_text("Name,__fuzzy\nJohn,0.7\n");
    io::write_table(a, "test_io_tmp.csv");
    FuzzyArray back = io::read_table("test_io_tmp.csv");
    CHECK(strong_equiv(a, back));
    std::filesystem::remove("test_io_tmp.csv");
    CHECK_THROWS_AS(io::read_table("does_not_exist.csv"), TableIoError);
}

TEST_CASE("pretty rendering shows tagged headers and braced multisets") {
    FuzzyArray a = io::read_table_text("Name,__fuzzy\nJohn,1;0.8\n");
    std::string pretty = io::to_pretty(a);
    CHECK(pretty.find("| Name | phi      |") != std::string::npos);
    CHECK(pretty.find("{1, 0.8}") != std::string::npos);
    CHECK(pretty.find("+------+") != std::string::npos);
}
