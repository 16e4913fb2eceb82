#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace fuzzydb {

/// Column key: a name plus an optional small tag. Tags carry the join-side
/// marker of theta-join output columns ((Name, 1), (Name, 2)). Totally
/// ordered so renderings and file output are deterministic.
class ColumnKey {
public:
    ColumnKey() = default;
    explicit ColumnKey(std::string name, std::optional<int> tag = std::nullopt)
        : name_(std::move(name)), tag_(tag) {}

    const std::string& name() const { return name_; }
    std::optional<int> tag() const { return tag_; }

    ColumnKey with_tag(int t) const { return ColumnKey(name_, t); }

    auto operator<=>(const ColumnKey&) const = default;

    /// "Name" or "Name:1".
    std::string to_string() const;
    /// Inverse of to_string: a trailing ":<digits>" is read back as a tag.
    static ColumnKey from_string(std::string_view s);

private:
    std::string name_;
    std::optional<int> tag_;
};

/// Row key: a user key (text), a tagged key (inner, t) produced when the
/// standard union keeps the two operands' key spaces disjoint, or a pair of
/// keys produced by Kronecker-style pairing in joins. Structured keys compare
/// by structure.
class RowKey {
public:
    RowKey() : rep_(std::string{}) {}

    static RowKey user(std::string name) { return RowKey(Rep(std::move(name))); }
    static RowKey tagged(RowKey inner, int tag) {
        return RowKey(Rep(Tag{box(std::move(inner)), tag}));
    }
    static RowKey paired(RowKey left, RowKey right) {
        return RowKey(Rep(Pair{box(std::move(left)), box(std::move(right))}));
    }

    bool is_user() const { return rep_.index() == 0; }
    const std::string& user_name() const { return std::get<0>(rep_); }

    bool operator==(const RowKey& other) const { return compare(other) == 0; }
    bool operator<(const RowKey& other) const { return compare(other) < 0; }
    int compare(const RowKey& other) const;

    /// "r1", "(r1,1)" or "(r1|r2)".
    std::string to_string() const;

private:
    using Box = std::shared_ptr<const RowKey>;
    struct Tag {
        Box inner;
        int tag;
    };
    struct Pair {
        Box left;
        Box right;
    };
    using Rep = std::variant<std::string, Tag, Pair>;

    explicit RowKey(Rep rep) : rep_(std::move(rep)) {}
    static Box box(RowKey k) { return std::make_shared<const RowKey>(std::move(k)); }

    Rep rep_;
};

}  // namespace fuzzydb
