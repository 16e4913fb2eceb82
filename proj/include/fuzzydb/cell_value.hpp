#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace fuzzydb {

/// A database cell. Null is the sparse zero of the cell domain: arrays never
/// store it, and looking up an unset in-support position yields it.
/// Integer and Decimal are distinct types; equality is tag + payload.
class CellValue {
public:
    CellValue() = default;  // Null
    static CellValue integer(std::int64_t v) { return CellValue(Rep{v}); }
    static CellValue decimal(double v) { return CellValue(Rep{v}); }
    static CellValue text(std::string v) { return CellValue(Rep{std::move(v)}); }

    bool is_null() const { return std::holds_alternative<std::monostate>(rep_); }
    bool is_integer() const { return std::holds_alternative<std::int64_t>(rep_); }
    bool is_decimal() const { return std::holds_alternative<double>(rep_); }
    bool is_text() const { return std::holds_alternative<std::string>(rep_); }
    bool is_numeric() const { return is_integer() || is_decimal(); }

    std::int64_t as_integer() const { return std::get<std::int64_t>(rep_); }
    double as_decimal() const { return std::get<double>(rep_); }
    const std::string& as_text() const { return std::get<std::string>(rep_); }

    /// Numeric payload widened to double; only valid when is_numeric().
    double as_number() const {
        return is_integer() ? static_cast<double>(as_integer()) : as_decimal();
    }

    bool operator==(const CellValue&) const = default;
    bool operator<(const CellValue& other) const { return rep_ < other.rep_; }

    /// Bare literal form: Null renders empty, Decimal keeps a decimal point
    /// so the literal re-reads as a Decimal.
    std::string to_string() const;

    /// Types a bare field the way table files do: integer literal, decimal
    /// literal, empty (Null), anything else Text.
    static CellValue from_literal(std::string_view field);

private:
    using Rep = std::variant<std::monostate, std::int64_t, double, std::string>;
    explicit CellValue(Rep rep) : rep_(std::move(rep)) {}
    Rep rep_;
};

std::string type_name(const CellValue& v);

}  // namespace fuzzydb
