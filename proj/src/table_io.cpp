#include "fuzzydb/io/table_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "fuzzydb/errors.hpp"

namespace fuzzydb::io {

namespace {

struct CsvField {
    std::string value;
    bool quoted = false;
};

using CsvRecord = std::vector<CsvField>;

// RFC-4180-style parse: quoted fields, doubled quotes as escapes, newlines
// allowed inside quotes, \r\n tolerated.
std::vector<CsvRecord> parse_csv(std::string_view text, const std::string& origin) {
    std::vector<CsvRecord> records;
    CsvRecord record;
    CsvField field;
    int line = 1;
    bool in_quotes = false;
    bool after_quotes = false;

    auto end_field = [&] {
        record.push_back(std::move(field));
        field = CsvField{};
        after_quotes = false;
    };
    auto end_record = [&] {
        end_field();
        // A completely blank line is not a record.
        if (record.size() != 1 || !record[0].value.empty() || record[0].quoted) {
            records.push_back(std::move(record));
        }
        record.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.value += '"';
                    ++i;
                } else {
                    in_quotes = false;
                    after_quotes = true;
                }
            } else {
                if (c == '\n') {
                    ++line;
                }
                field.value += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field.value.empty() || after_quotes) {
                    throw TableIoError(origin + ":" + std::to_string(line) +
                                       ": stray quote inside an unquoted field");
                }
                in_quotes = true;
                field.quoted = true;
                break;
            case ',':
                end_field();
                break;
            case '\r':
                break;
            case '\n':
                end_record();
                ++line;
                break;
            default:
                field.value += c;
        }
    }
    if (in_quotes) {
        throw TableIoError(origin + ":" + std::to_string(line) + ": unterminated quoted field");
    }
    if (!field.value.empty() || field.quoted || !record.empty()) {
        end_record();
    }
    return records;
}

bool needs_quoting(const std::string& s, bool is_text) {
    if (s.find_first_of(",\"\r\n") != std::string::npos) {
        return true;
    }
    // A Text payload that would re-read as a number or as Null must be
    // quoted to keep its type.
    if (is_text) {
        CellValue reparsed = CellValue::from_literal(s);
        return !reparsed.is_text();
    }
    return false;
}

std::string csv_escape(const std::string& s, bool is_text) {
    if (!needs_quoting(s, is_text)) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

constexpr std::string_view kFuzzyCol = "__fuzzy";
constexpr std::string_view kRowCol = "__row";

}  // namespace

FuzzyArray read_table_text(std::string_view text, const std::string& origin) {
    auto records = parse_csv(text, origin);
    if (records.empty()) {
        throw TableIoError(origin + ": empty table file (header row required)");
    }
    const CsvRecord& header = records.front();
    int fuzzy_idx = -1;
    int row_idx = -1;
    std::vector<std::pair<int, ColumnKey>> data_cols;
    std::set<ColumnKey> seen;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string& name = header[i].value;
        if (name == kFuzzyCol) {
            if (fuzzy_idx >= 0) {
                throw TableIoError(origin + ": duplicate __fuzzy column");
            }
            fuzzy_idx = static_cast<int>(i);
        } else if (name == kRowCol) {
            if (row_idx >= 0) {
                throw TableIoError(origin + ": duplicate __row column");
            }
            row_idx = static_cast<int>(i);
        } else if (name.starts_with("__")) {
            throw TableIoError(origin + ": reserved column name '" + name + "'");
        } else if (name.empty()) {
            throw TableIoError(origin + ": empty column name in header");
        } else {
            ColumnKey key = ColumnKey::from_string(name);
            if (!seen.insert(key).second) {
                throw TableIoError(origin + ": duplicate column '" + name + "'");
            }
            data_cols.emplace_back(static_cast<int>(i), std::move(key));
        }
    }
    if (fuzzy_idx < 0) {
        throw TableIoError(origin + ": missing reserved __fuzzy column");
    }

    StandardArray base;
    for (const auto& [idx, key] : data_cols) {
        base.add_col(key);
    }
    std::map<RowKey, FuzzyMultiset> fuzzy;
    std::set<std::string> row_names;
    for (std::size_t n = 1; n < records.size(); ++n) {
        const CsvRecord& rec = records[n];
        std::string where = origin + ": data row " + std::to_string(n);
        if (rec.size() != header.size()) {
            throw TableIoError(where + ": expected " + std::to_string(header.size()) +
                               " fields, got " + std::to_string(rec.size()));
        }
        RowKey key = RowKey::user("r" + std::to_string(n));
        if (row_idx >= 0) {
            const std::string& name = rec[row_idx].value;
            if (name.empty()) {
                throw TableIoError(where + ": empty __row key");
            }
            if (!row_names.insert(name).second) {
                throw TableIoError(where + ": duplicate __row key '" + name + "'");
            }
            key = RowKey::user(name);
        }
        base.add_row(key);
        for (const auto& [idx, col] : data_cols) {
            const CsvField& f = rec[idx];
            CellValue v = f.quoted ? CellValue::text(f.value) : CellValue::from_literal(f.value);
            if (!v.is_null()) {
                base.set(key, col, v);
            }
        }
        try {
            FuzzyMultiset m = FuzzyMultiset::parse(rec[fuzzy_idx].value);
            if (!m.empty()) {
                fuzzy.emplace(std::move(key), std::move(m));
            }
        } catch (const std::domain_error& e) {
            throw TableIoError(where + ": " + e.what());
        }
    }
    return FuzzyArray::make_regular(base, fuzzy);
}

FuzzyArray read_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw TableIoError("cannot open table file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_table_text(buf.str(), path.string());
}

std::string to_csv(const FuzzyArray& a) {
    std::string out;
    const auto& cols = a.base().col_keys();
    for (const ColumnKey& c : cols) {
        out += csv_escape(c.to_string(), false);
        out += ',';
    }
    out += kFuzzyCol;
    out += '\n';
    for (const RowKey& k : a.base().row_keys()) {
        Row r(a.base().row_or_empty(k));
        for (const ColumnKey& c : cols) {
            const CellValue& v = r.at(c);
            out += csv_escape(v.to_string(), v.is_text());
            out += ',';
        }
        out += a.phi(r).to_string();
        out += '\n';
    }
    return out;
}

void write_table(const FuzzyArray& a, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw TableIoError("cannot open output file: " + path.string());
    }
    out << to_csv(a);
    if (!out) {
        throw TableIoError("error writing table file: " + path.string());
    }
}

std::string to_pretty(const FuzzyArray& a) {
    const auto& cols = a.base().col_keys();
    std::vector<std::string> headers;
    for (const ColumnKey& c : cols) {
        if (c.tag()) {
            headers.push_back("(" + c.name() + ", " + std::to_string(*c.tag()) + ")");
        } else {
            headers.push_back(c.name());
        }
    }
    headers.push_back("phi");

    std::vector<std::vector<std::string>> body;
    for (const RowKey& k : a.base().row_keys()) {
        Row r(a.base().row_or_empty(k));
        std::vector<std::string> line;
        for (const ColumnKey& c : cols) {
            line.push_back(r.at(c).to_string());
        }
        std::string phi = "{";
        const auto& vals = a.phi(r).values();
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i > 0) {
                phi += ", ";
            }
            phi += vals[i].to_string();
        }
        phi += "}";
        line.push_back(std::move(phi));
        body.push_back(std::move(line));
    }

    std::vector<std::size_t> widths(headers.size());
    for (std::size_t i = 0; i < headers.size(); ++i) {
        widths[i] = headers[i].size();
        for (const auto& line : body) {
            widths[i] = std::max(widths[i], line[i].size());
        }
    }
    auto rule = [&] {
        std::string s = "+";
        for (std::size_t w : widths) {
            s += std::string(w + 2, '-') + "+";
        }
        return s + "\n";
    };
    auto render = [&](const std::vector<std::string>& line) {
        std::string s = "|";
        for (std::size_t i = 0; i < line.size(); ++i) {
            s += " " + line[i] + std::string(widths[i] - line[i].size(), ' ') + " |";
        }
        return s + "\n";
    };
    std::string out = rule() + render(headers) + rule();
    for (const auto& line : body) {
        out += render(line);
    }
    out += rule();
    return out;
}

}  // namespace fuzzydb::io
