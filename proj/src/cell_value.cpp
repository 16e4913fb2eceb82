#include "fuzzydb/cell_value.hpp"

#include <cmath>

#include "fuzzydb/util.hpp"

namespace fuzzydb {

std::string CellValue::to_string() const {
    if (is_null()) {
        return "";
    }
    if (is_integer()) {
        return std::to_string(as_integer());
    }
    if (is_decimal()) {
        std::string s = format_double(as_decimal());
        if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
            s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
            s += ".0";
        }
        return s;
    }
    return as_text();
}

CellValue CellValue::from_literal(std::string_view field) {
    if (field.empty()) {
        return CellValue{};
    }
    if (auto i = try_parse_int(field)) {
        return integer(*i);
    }
    // Non-finite parses ("inf", "nan") stay Text: NaN would poison cell
    // ordering and equality.
    if (auto d = try_parse_double(field); d && std::isfinite(*d)) {
        return decimal(*d);
    }
    return text(std::string(field));
}

std::string type_name(const CellValue& v) {
    if (v.is_null()) return "Null";
    if (v.is_integer()) return "Integer";
    if (v.is_decimal()) return "Decimal";
    return "Text";
}

}  // namespace fuzzydb
