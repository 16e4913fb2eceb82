#include "fuzzydb/law/formula_oracle.hpp"

#include <stdexcept>

#include "fuzzydb/relalg.hpp"

namespace fuzzydb::law {

int MKey::compare(const MKey& other) const {
    if (rep_.index() != other.rep_.index()) {
        return rep_.index() < other.rep_.index() ? -1 : 1;
    }
    switch (rep_.index()) {
        case 0:
            return std::get<RowKey>(rep_).compare(std::get<RowKey>(other.rep_));
        case 1: {
            const auto& a = std::get<ColumnKey>(rep_);
            const auto& b = std::get<ColumnKey>(other.rep_);
            return a < b ? -1 : (b < a ? 1 : 0);
        }
        case 2: {
            int a = std::get<int>(rep_);
            int b = std::get<int>(other.rep_);
            return a < b ? -1 : (b < a ? 1 : 0);
        }
        case 3: {
            const auto& a = std::get<std::string>(rep_);
            const auto& b = std::get<std::string>(other.rep_);
            return a < b ? -1 : (b < a ? 1 : 0);
        }
        default: {
            const auto& a = std::get<Pair>(rep_);
            const auto& b = std::get<Pair>(other.rep_);
            if (int c = a.first->compare(*b.first); c != 0) {
                return c;
            }
            return a.second->compare(*b.second);
        }
    }
}

std::string MKey::to_string() const {
    switch (rep_.index()) {
        case 0:
            return std::get<RowKey>(rep_).to_string();
        case 1:
            return std::get<ColumnKey>(rep_).to_string();
        case 2:
            return "#" + std::to_string(std::get<int>(rep_));
        case 3:
            return std::get<std::string>(rep_);
        default: {
            const auto& p = std::get<Pair>(rep_);
            return "(" + p.first->to_string() + "," + p.second->to_string() + ")";
        }
    }
}

SemiValue sv_one() {
    return SemiValue{true, CellValue{}};
}

SemiValue sv_of(CellValue v) {
    return SemiValue{false, std::move(v)};
}

SemiValue sv_times(const SemiValue& a, const SemiValue& b) {
    if (a.is_zero() || b.is_zero()) {
        return SemiValue{};
    }
    if (a.one) {
        return b;
    }
    if (b.one) {
        return a;
    }
    throw std::logic_error("formula oracle: product of two data values");
}

SemiValue sv_plus(const SemiValue& a, const SemiValue& b) {
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    throw std::logic_error("formula oracle: sum of two nonzero values");
}

MathArray to_math(const StandardArray& a) {
    MathArray out;
    for (const ColumnKey& c : a.col_keys()) {
        out.add_col(MKey::col(c));
    }
    for (const RowKey& k : a.row_keys()) {
        MKey mk = MKey::row(k);
        out.add_row(mk);
        for (const auto& [c, v] : a.row_or_empty(k)) {
            out.set(mk, MKey::col(c), sv_of(v));
        }
    }
    return out;
}

StandardArray from_math(const MathArray& m, ColumnKey (*decode_col)(const MKey&)) {
    StandardArray out;
    for (const MKey& c : m.col_keys()) {
        out.add_col(decode_col(c));
    }
    int i = 0;
    for (const MKey& r : m.row_keys()) {
        RowKey key = RowKey::user("m" + std::to_string(++i));
        out.add_row(key);
        for (const auto& [c, v] : m.row_or_empty(r)) {
            if (v.one) {
                throw std::logic_error("formula oracle: identity entry survived into a result");
            }
            out.set(key, decode_col(c), v.cell);
        }
    }
    return out;
}

ColumnKey decode_plain_col(const MKey& k) {
    const ColumnKey* c = k.as_col();
    if (!c) {
        throw std::logic_error("formula oracle: expected a plain column key");
    }
    return *c;
}

ColumnKey decode_tagged_col(const MKey& k) {
    auto [first, second] = k.as_pair();
    if (first && second && first->as_col() && second->as_tag()) {
        return tag_column(*first->as_col(), *second->as_tag());
    }
    throw std::logic_error("formula oracle: expected a (column, tag) pair key");
}

MathArray identity_math(const std::set<MKey>& rows, const std::set<MKey>& cols,
                        const std::vector<std::pair<MKey, MKey>>& ones) {
    MathArray out;
    out.add_rows(rows);
    out.add_cols(cols);
    for (const auto& [r, c] : ones) {
        out.set(r, c, sv_one());
    }
    return out;
}

namespace {

SemiValue plus_reduce(const std::vector<SemiValue>& vs) {
    SemiValue acc;
    for (const SemiValue& v : vs) {
        acc = sv_plus(acc, v);
    }
    return acc;
}

SemiValue mu_reduce(const std::vector<SemiValue>& vs) {
    return vs.front();
}

MathArray oplus_product(const MathArray& a, const MathArray& b) {
    return fproduct(a, b, sv_times, plus_reduce);
}

}  // namespace

MathArray formula_omega(const MathArray& a) {
    // Columns of the selector identity are (stand-ins for) the distinct row
    // contents of a; its (i, r) entry is one exactly when row i has content
    // r. The transposed mu-product then keeps one copy of each content.
    std::map<MathArray::SparseRow, MKey,
             decltype([](const auto& x, const auto& y) { return compare_sparse_rows(x, y) < 0; })>
        content_key;
    std::set<MKey> cols;
    std::vector<std::pair<MKey, MKey>> ones;
    for (const MKey& r : a.row_keys()) {
        const auto& content = a.row_or_empty(r);
        auto it = content_key.find(content);
        if (it == content_key.end()) {
            MKey ck = MKey::name("row#" + std::to_string(content_key.size()));
            it = content_key.emplace(content, ck).first;
            cols.insert(ck);
        }
        ones.emplace_back(r, it->second);
    }
    MathArray selector = identity_math(a.row_keys(), cols, ones);
    return fproduct(transpose(selector), a, sv_times, mu_reduce);
}

MathArray formula_pad(const MathArray& a, const std::set<MKey>& rows, const std::set<MKey>& cols) {
    std::set<MKey> all_rows = a.row_keys();
    all_rows.insert(rows.begin(), rows.end());
    std::vector<std::pair<MKey, MKey>> row_ones;
    for (const MKey& r : a.row_keys()) {
        row_ones.emplace_back(r, r);
    }
    MathArray left = identity_math(all_rows, a.row_keys(), row_ones);

    std::set<MKey> all_cols = a.col_keys();
    all_cols.insert(cols.begin(), cols.end());
    std::vector<std::pair<MKey, MKey>> col_ones;
    for (const MKey& c : a.col_keys()) {
        col_ones.emplace_back(c, c);
    }
    MathArray right = identity_math(a.col_keys(), all_cols, col_ones);

    return oplus_product(oplus_product(left, a), right);
}

MathArray formula_rename(const MathArray& a, const std::map<MKey, MKey>& f) {
    std::set<MKey> domain;
    std::set<MKey> image;
    std::vector<std::pair<MKey, MKey>> ones;
    for (const auto& [from, to] : f) {
        domain.insert(from);
        image.insert(to);
        ones.emplace_back(from, to);
    }
    return oplus_product(a, identity_math(domain, image, ones));
}

MathArray formula_sqcup(const MathArray& a, const MathArray& b) {
    auto retag = [](const MathArray& m, int t) {
        std::set<MKey> tagged;
        std::vector<std::pair<MKey, MKey>> ones;
        for (const MKey& r : m.row_keys()) {
            MKey tr = MKey::pair(r, MKey::tag(t));
            tagged.insert(tr);
            ones.emplace_back(tr, r);
        }
        return oplus_product(identity_math(tagged, m.row_keys(), ones), m);
    };
    return formula_omega(oplus(retag(a, 1), retag(b, 2), sv_plus));
}

MathArray formula_theta_skeleton(const MathArray& a, const std::set<MKey>& a_nonzero_rows,
                                 const MathArray& b, const std::set<MKey>& b_nonzero_rows) {
    std::vector<std::pair<MKey, MKey>> b_ones;
    for (const MKey& r : b_nonzero_rows) {
        b_ones.emplace_back(r, MKey::tag(1));
    }
    MathArray left = kronecker(a, identity_math(b_nonzero_rows, {MKey::tag(1)}, b_ones),
                               sv_times, MKey::pair, MKey::pair);

    std::vector<std::pair<MKey, MKey>> a_ones;
    for (const MKey& r : a_nonzero_rows) {
        a_ones.emplace_back(r, MKey::tag(2));
    }
    MathArray right = kronecker(identity_math(a_nonzero_rows, {MKey::tag(2)}, a_ones), b,
                                sv_times, MKey::pair, MKey::pair);
    // rename {2} x J_B to J_B x {2}
    std::map<MKey, MKey> swap;
    for (const MKey& c : right.col_keys()) {
        auto [t, j] = c.as_pair();
        swap.emplace(c, MKey::pair(*j, *t));
    }
    return oplus(left, formula_rename(right, swap), sv_plus);
}

bool oracle_equiv(const StandardArray& formulaic, const StandardArray& native) {
    return strong_equiv(formulaic, native);
}

}  // namespace fuzzydb::law
