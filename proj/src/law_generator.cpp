#include "fuzzydb/law/generator.hpp"

#include <stdexcept>

#include "fuzzydb/util.hpp"

namespace fuzzydb::law {

InstanceGenerator::InstanceGenerator(std::uint64_t seed, GenBounds bounds)
    : seed_(seed), bounds_(bounds), rng_(seed) {
    refresh_universe();
}

std::uint64_t InstanceGenerator::below(std::uint64_t n) {
    return n == 0 ? 0 : rng_() % n;
}

Fuzzy InstanceGenerator::degree() {
    return static_cast<double>(below(bounds_.value_grid + 1)) / bounds_.value_grid;
}

FuzzyMultiset InstanceGenerator::multiset() {
    std::vector<Fuzzy> vs;
    std::size_t n = below(bounds_.max_multiset + 1);
    for (std::size_t i = 0; i < n; ++i) {
        vs.push_back(degree());
    }
    return FuzzyMultiset::canonical(std::move(vs));
}

CellValue InstanceGenerator::cell() {
    // Small pools so row contents collide often.
    switch (below(4)) {
        case 0:
            return CellValue{};
        case 1:
            return CellValue::integer(static_cast<std::int64_t>(below(3)));
        case 2:
            return CellValue::text(below(2) ? "x" : "y");
        default:
            return CellValue::decimal(static_cast<double>(below(3)) / 2.0);
    }
}

void InstanceGenerator::refresh_universe() {
    columns_.clear();
    int ncols = 1 + static_cast<int>(below(bounds_.max_cols));
    for (int i = 0; i < ncols; ++i) {
        columns_.emplace_back("c" + std::to_string(i + 1));
    }
    pool_.clear();
    std::size_t pool_size = 1 + below(5);
    for (std::size_t i = 0; i < pool_size; ++i) {
        Row r;
        for (const ColumnKey& c : columns_) {
            r.set(c, cell());
        }
        pool_.push_back(std::move(r));
    }
}

Row InstanceGenerator::pool_row() {
    return pool_[below(pool_.size())];
}

std::vector<FuzzyArray> InstanceGenerator::arrays(int arity) {
    refresh_universe();
    std::vector<FuzzyArray> out;
    for (int k = 0; k < arity; ++k) {
        StandardArray base;
        for (const ColumnKey& c : columns_) {
            base.add_col(c);
        }
        std::map<RowKey, FuzzyMultiset> fuzzy;
        int nrows = static_cast<int>(below(bounds_.max_rows + 1));
        for (int i = 0; i < nrows; ++i) {
            RowKey key = RowKey::user("r" + std::to_string(i + 1));
            base.add_row(key);
            Row content = pool_row();
            for (const auto& [c, v] : content.cells()) {
                base.set(key, c, v);
            }
            FuzzyMultiset m = multiset();
            if (!m.empty()) {
                fuzzy.emplace(key, std::move(m));
            }
        }
        out.push_back(FuzzyArray::make_regular(base, fuzzy));
    }
    return out;
}

StandardArray InstanceGenerator::standard_array() {
    refresh_universe();
    StandardArray a;
    for (const ColumnKey& c : columns_) {
        a.add_col(c);
    }
    int nrows = static_cast<int>(below(bounds_.max_rows + 1));
    for (int i = 0; i < nrows; ++i) {
        RowKey key = RowKey::user("r" + std::to_string(i + 1));
        a.add_row(key);
        Row content = pool_row();
        for (const auto& [c, v] : content.cells()) {
            a.set(key, c, v);
        }
    }
    return a;
}

InstanceGenerator::NamedCondition InstanceGenerator::condition() {
    switch (below(3)) {
        case 0: {
            Fuzzy c = degree();
            return {"const " + c.to_string(), [c](const Row&) { return c; }};
        }
        case 1: {
            ColumnKey col = columns_[below(columns_.size())];
            CellValue v = cell();
            return {"eq " + col.to_string() + " = " + v.to_string(),
                    [col, v](const Row& r) -> Fuzzy { return r.at(col) == v ? 1.0 : 0.0; }};
        }
        default: {
            int grid = bounds_.value_grid;
            return {"row-hash degree", [grid](const Row& r) -> Fuzzy {
                        return static_cast<double>(fnv1a(r.to_string()) % (grid + 1)) / grid;
                    }};
        }
    }
}

InstanceGenerator::NamedTheta InstanceGenerator::theta() {
    ColumnKey lc = columns_[below(columns_.size())];
    ColumnKey rc = columns_[below(columns_.size())];
    switch (below(3)) {
        case 0: {
            Fuzzy c = degree();
            return {"const " + c.to_string(),
                    ThetaPredicate{{lc}, {rc}, [c](const Row&, const Row&) { return c; }}};
        }
        case 1: {
            Fuzzy miss = degree();
            return {"match " + lc.to_string() + " ~ " + rc.to_string(),
                    ThetaPredicate{{lc},
                                   {rc},
                                   [lc, rc, miss](const Row& l, const Row& r) -> Fuzzy {
                                       return l.at(lc) == r.at(rc) ? Fuzzy(1.0) : miss;
                                   }}};
        }
        default: {
            int grid = bounds_.value_grid;
            return {"pair-hash degree",
                    ThetaPredicate{{lc}, {rc}, [grid](const Row& l, const Row& r) -> Fuzzy {
                                       std::uint64_t h = fnv1a(r.to_string(), fnv1a(l.to_string()));
                                       return static_cast<double>(h % (grid + 1)) / grid;
                                   }}};
        }
    }
}

std::vector<std::vector<FuzzyArray>> generate(InstanceGenerator& gen, int n, int arity) {
    if (n < 1) {
        throw std::invalid_argument("instance count must be at least 1");
    }
    std::vector<std::vector<FuzzyArray>> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        out.push_back(gen.arrays(arity));
    }
    return out;
}

}  // namespace fuzzydb::law
