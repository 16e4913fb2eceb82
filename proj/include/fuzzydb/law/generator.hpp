#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fuzzydb/relalg.hpp"

namespace fuzzydb::law {

struct GenBounds {
    int max_rows = 6;
    int max_cols = 4;
    int max_multiset = 5;
    int value_grid = 10;  // degrees drawn from {0, 1/grid, ..., 1}; tenths provoke ties
};

/// Deterministic instance source: the same seed always yields the same
/// sequence. Tuples share a column universe and a row-content pool, so
/// overlapping and duplicate rows, zero rows and empty arrays all occur.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed, GenBounds bounds = {});

    std::uint64_t seed() const { return seed_; }
    const GenBounds& bounds() const { return bounds_; }

    std::uint64_t below(std::uint64_t n);
    Fuzzy degree();
    FuzzyMultiset multiset();
    CellValue cell();

    /// A tuple of regular fuzzy arrays over a shared fresh column universe.
    std::vector<FuzzyArray> arrays(int arity);

    /// A standard array that may contain duplicate rows.
    StandardArray standard_array();

    /// The column universe used by the most recent arrays()/standard_array()
    /// call; law checks draw projection sets and renamings from it.
    const std::vector<ColumnKey>& columns() const { return columns_; }

    struct NamedCondition {
        std::string desc;
        FuzzyCondition fn;
    };
    NamedCondition condition();

    struct NamedTheta {
        std::string desc;
        ThetaPredicate theta;
    };
    NamedTheta theta();

private:
    std::uint64_t seed_;
    GenBounds bounds_;
    std::mt19937_64 rng_;
    std::vector<ColumnKey> columns_;
    std::vector<Row> pool_;

    void refresh_universe();
    Row pool_row();
};

/// n instance tuples of the given arity, deterministically from gen.
std::vector<std::vector<FuzzyArray>> generate(InstanceGenerator& gen, int n, int arity = 1);

}  // namespace fuzzydb::law
