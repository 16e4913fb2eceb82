#pragma once

#include <stdexcept>
#include <string>

namespace fuzzydb {

/// Anything wrong with a table file: missing, malformed CSV, bad fuzzy
/// values, reserved-name misuse. The CLI maps these to its I/O exit status.
class TableIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A positioned query-language error (lexical, syntactic, or semantic).
/// Positions are 1-based line/column of the offending source.
class QueryError : public std::runtime_error {
public:
    QueryError(int line, int col, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

}  // namespace fuzzydb
