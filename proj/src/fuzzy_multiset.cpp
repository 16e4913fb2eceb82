#include "fuzzydb/fuzzy_multiset.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fuzzydb/util.hpp"

namespace fuzzydb {

FuzzyMultiset::FuzzyMultiset(std::initializer_list<double> vs) {
    std::vector<Fuzzy> tmp;
    tmp.reserve(vs.size());
    for (double v : vs) {
        tmp.emplace_back(v);
    }
    *this = canonical(std::move(tmp));
}

FuzzyMultiset FuzzyMultiset::canonical(std::vector<Fuzzy> vs) {
    std::erase_if(vs, [](Fuzzy v) { return v.is_zero(); });
    std::sort(vs.begin(), vs.end(), std::greater<>{});
    FuzzyMultiset out;
    out.values_ = std::move(vs);
    return out;
}

Fuzzy FuzzyMultiset::kth(std::size_t k) const {
    if (k == 0) {
        throw std::domain_error("multiset index is 1-based; got k = 0");
    }
    if (k > values_.size()) {
        return Fuzzy{};
    }
    return values_[k - 1];
}

std::size_t FuzzyMultiset::count(Fuzzy x) const {
    return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), x));
}

std::string FuzzyMultiset::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        out += values_[i].to_string();
    }
    return out;
}

FuzzyMultiset FuzzyMultiset::parse(std::string_view text) {
    std::vector<Fuzzy> vs;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t sep = text.find(';', pos);
        if (sep == std::string_view::npos) {
            sep = text.size();
        }
        std::string_view field = text.substr(pos, sep - pos);
        auto v = try_parse_double(field);
        if (!v) {
            throw std::domain_error("malformed fuzzy value: '" + std::string(field) + "'");
        }
        vs.emplace_back(*v);  // range check in the Fuzzy constructor
        pos = sep + 1;
    }
    return canonical(std::move(vs));
}

Fuzzy max_value(const FuzzyMultiset& s) {
    return s.empty() ? Fuzzy{} : s.values().front();
}

FuzzyMultiset disjoint_union(const FuzzyMultiset& s, const FuzzyMultiset& t) {
    std::vector<Fuzzy> merged;
    merged.reserve(s.cardinality() + t.cardinality());
    std::merge(s.values().begin(), s.values().end(), t.values().begin(), t.values().end(),
               std::back_inserter(merged), std::greater<>{});
    return FuzzyMultiset::canonical(std::move(merged));
}

FuzzyMultiset multiset_union(const FuzzyMultiset& s, const FuzzyMultiset& t) {
    std::size_t n = std::max(s.cardinality(), t.cardinality());
    std::vector<Fuzzy> out;
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        out.push_back(std::max(s.kth(k), t.kth(k)));
    }
    return FuzzyMultiset::canonical(std::move(out));
}

FuzzyMultiset multiset_intersection(const FuzzyMultiset& s, const FuzzyMultiset& t) {
    std::size_t n = std::max(s.cardinality(), t.cardinality());
    std::vector<Fuzzy> out;
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        out.push_back(std::min(s.kth(k), t.kth(k)));
    }
    return FuzzyMultiset::canonical(std::move(out));
}

bool subset(const FuzzyMultiset& s, const FuzzyMultiset& t) {
    // Pointwise test; equivalent to the existence of a witness R with
    // s ∪ R equivalent to t. Beyond |s| the left side is all zeros.
    for (std::size_t k = 1; k <= s.cardinality(); ++k) {
        if (s.kth(k) > t.kth(k)) {
            return false;
        }
    }
    return true;
}

FuzzyMultiset clamp_min(const FuzzyMultiset& s, Fuzzy c) {
    std::vector<Fuzzy> out;
    out.reserve(s.cardinality());
    for (Fuzzy v : s.values()) {
        out.push_back(std::min(v, c));
    }
    return FuzzyMultiset::canonical(std::move(out));
}

FuzzyMultiset cutoff_difference(const FuzzyMultiset& s, const FuzzyMultiset& t) {
    std::vector<Fuzzy> out;
    for (std::size_t k = 1; k <= s.cardinality(); ++k) {
        if (s.kth(k) > t.kth(k)) {
            out.push_back(s.kth(k));
        }
    }
    return FuzzyMultiset::canonical(std::move(out));
}

}  // namespace fuzzydb
