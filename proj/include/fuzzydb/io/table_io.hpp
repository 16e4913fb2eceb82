#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fuzzydb/fuzzy_array.hpp"

namespace fuzzydb::io {

/// Reads a fuzzy table from CSV text. The header names the data columns plus
/// the reserved `__fuzzy` column (the degree multiset, semicolon-separated)
/// and optionally `__row` (explicit row keys). Unquoted fields are typed by
/// literal shape; quoted fields are always Text. Duplicate row contents are
/// merged with their multisets combined by disjoint union.
FuzzyArray read_table_text(std::string_view text, const std::string& origin = "<text>");

FuzzyArray read_table(const std::filesystem::path& path);

/// CSV rendering: data columns in key order, `__fuzzy` last, rows in
/// row-key order, `\n` line endings. Zero rows are written with an empty
/// `__fuzzy` field so the base support survives a round-trip. Output is a
/// pure function of the array, hence byte-deterministic.
std::string to_csv(const FuzzyArray& a);

void write_table(const FuzzyArray& a, const std::filesystem::path& path);

/// Bordered, column-aligned rendering with the degree multiset in braces.
std::string to_pretty(const FuzzyArray& a);

}  // namespace fuzzydb::io
