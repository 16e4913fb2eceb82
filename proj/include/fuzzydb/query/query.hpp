#pragma once

#include <set>
#include <string_view>
#include <vector>

#include "fuzzydb/query/ast.hpp"

namespace fuzzydb::query {

/// Lexes the whole source; `#` starts a comment to end of line. Throws a
/// positioned QueryError on an illegal character.
std::vector<Token> tokenize(std::string_view source);

ExprPtr parse(const std::vector<Token>& tokens);
ExprPtr parse(std::string_view source);

/// Canonical source form; parse(render(e)) reproduces e.
std::string render(const Expr& e);
std::string render(const Pred& p);

using Schema = std::set<ColumnKey>;

/// Per-node output schemas of a checked query.
struct Analysis {
    Schema result;
    std::map<const Expr*, Schema> schemas;
};

/// Static checks: table and column references resolve, renamings are
/// bijections on the child schema, trapezoid parameters are ordered, theta
/// predicates stay on their own sides. Throws positioned QueryError.
Analysis analyze(const Expr& e, const Catalog& catalog);

/// Evaluates a checked query bottom-up over the catalog.
FuzzyArray evaluate(const Expr& e, const Catalog& catalog);

}  // namespace fuzzydb::query
