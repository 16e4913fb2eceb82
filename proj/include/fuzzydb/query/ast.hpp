#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fuzzydb/cell_value.hpp"
#include "fuzzydb/fuzzy_array.hpp"
#include "fuzzydb/keys.hpp"

namespace fuzzydb::query {

struct SourcePos {
    int line = 1;
    int col = 1;
};

enum class TokenKind { Identifier, Keyword, Number, String, Punct, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string lexeme;
    SourcePos pos;
};

/// Which join side a column reference reads, if any.
enum class Side { None, Left, Right };

struct ColRef {
    Side side = Side::None;
    ColumnKey col;
    SourcePos pos;
};

struct Pred;
using PredPtr = std::unique_ptr<Pred>;

struct Trapezoid {
    ColRef col;
    double a, b, c, d;
};
struct CrispEq {
    ColRef col;
    CellValue literal;
};
enum class CmpOp { Lt, Le, Gt, Ge, Eq };
struct CrispCmp {
    ColRef col;
    CmpOp op;
    CellValue literal;
};
/// Absolute-gap lookup table between a left and a right column.
struct GapTable {
    ColRef left;
    ColRef right;
    std::vector<std::pair<double, double>> gaps;  // |l - r| -> degree
};
struct PredAnd {
    PredPtr lhs, rhs;
};
struct PredOr {
    PredPtr lhs, rhs;
};
struct PredConst {
    double value;
};

struct Pred {
    SourcePos pos;
    std::variant<Trapezoid, CrispEq, CrispCmp, GapTable, PredAnd, PredOr, PredConst> node;
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct TableRef {
    std::string name;
};
struct Project {
    ExprPtr child;
    std::vector<ColRef> cols;
};
struct Select {
    ExprPtr child;
    PredPtr pred;
};
struct Rename {
    ExprPtr child;
    std::vector<std::pair<ColRef, ColRef>> mapping;
};
enum class SetOpKind { Union, Intersect, DisjointUnion, Diff };
struct SetOp {
    SetOpKind kind;
    ExprPtr lhs, rhs;
};
struct Join {
    ExprPtr lhs, rhs;
    PredPtr theta;
};

struct Expr {
    SourcePos pos;
    std::variant<TableRef, Project, Select, Rename, SetOp, Join> node;
};

using Catalog = std::map<std::string, FuzzyArray>;

bool valid_table_name(const std::string& name);

}  // namespace fuzzydb::query
