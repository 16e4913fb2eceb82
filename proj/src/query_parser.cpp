#include <algorithm>
#include <cctype>

#include "fuzzydb/errors.hpp"
#include "fuzzydb/query/query.hpp"
#include "fuzzydb/util.hpp"

namespace fuzzydb::query {

namespace {

std::string to_upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : ts_(tokens) {}

    ExprPtr parse_query() {
        ExprPtr e = parse_expr();
        if (peek().kind != TokenKind::End) {
            fail(peek(), "unexpected trailing input after the query");
        }
        return e;
    }

private:
    const std::vector<Token>& ts_;
    std::size_t i_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t k = std::min(i_ + ahead, ts_.size() - 1);
        return ts_[k];
    }
    const Token& next() { return ts_[std::min(i_++, ts_.size() - 1)]; }

    [[noreturn]] void fail(const Token& t, const std::string& msg) const {
        std::string where = t.kind == TokenKind::End ? "end of input" : "'" + t.lexeme + "'";
        throw QueryError(t.pos.line, t.pos.col, msg + " (found " + where + ")");
    }

    bool at_punct(std::string_view p) const {
        return peek().kind == TokenKind::Punct && peek().lexeme == p;
    }
    void expect_punct(std::string_view p, const std::string& why) {
        if (!at_punct(p)) {
            fail(peek(), "expected '" + std::string(p) + "' " + why);
        }
        next();
    }

    ExprPtr parse_expr() {
        const Token& t = peek();
        if (t.kind == TokenKind::Identifier) {
            next();
            Expr e{t.pos, TableRef{t.lexeme}};
            return std::make_unique<Expr>(std::move(e));
        }
        if (t.kind != TokenKind::Keyword) {
            fail(t, "expected a query expression");
        }
        std::string op = to_upper(t.lexeme);
        if (op == "PROJECT") return parse_project();
        if (op == "SELECT") return parse_select();
        if (op == "RENAME") return parse_rename();
        if (op == "UNION") return parse_setop(SetOpKind::Union);
        if (op == "INTERSECT") return parse_setop(SetOpKind::Intersect);
        if (op == "DUNION") return parse_setop(SetOpKind::DisjointUnion);
        if (op == "DIFF") return parse_setop(SetOpKind::Diff);
        if (op == "JOIN") return parse_join();
        fail(t, "expected a query expression, not the predicate keyword '" + t.lexeme + "'");
    }

    ExprPtr parse_project() {
        SourcePos pos = next().pos;
        expect_punct("(", "after PROJECT");
        ExprPtr child = parse_expr();
        expect_punct(",", "between the PROJECT arguments");
        expect_punct("[", "to open the projection column list");
        std::vector<ColRef> cols;
        if (!at_punct("]")) {
            cols.push_back(parse_colref(false));
            while (at_punct(",")) {
                next();
                cols.push_back(parse_colref(false));
            }
        }
        expect_punct("]", "to close the projection column list");
        expect_punct(")", "to close PROJECT");
        return make_expr(pos, Project{std::move(child), std::move(cols)});
    }

    ExprPtr parse_select() {
        SourcePos pos = next().pos;
        expect_punct("(", "after SELECT");
        ExprPtr child = parse_expr();
        expect_punct(",", "between the SELECT arguments");
        PredPtr pred = parse_pred();
        expect_punct(")", "to close SELECT");
        return make_expr(pos, Select{std::move(child), std::move(pred)});
    }

    ExprPtr parse_rename() {
        SourcePos pos = next().pos;
        expect_punct("(", "after RENAME");
        ExprPtr child = parse_expr();
        expect_punct(",", "between the RENAME arguments");
        expect_punct("{", "to open the renaming map");
        std::vector<std::pair<ColRef, ColRef>> mapping;
        while (true) {
            ColRef from = parse_colref(false);
            expect_punct("->", "between the old and new column names");
            ColRef to = parse_colref(false);
            mapping.emplace_back(std::move(from), std::move(to));
            if (!at_punct(",")) {
                break;
            }
            next();
        }
        expect_punct("}", "to close the renaming map");
        expect_punct(")", "to close RENAME");
        return make_expr(pos, Rename{std::move(child), std::move(mapping)});
    }

    ExprPtr parse_setop(SetOpKind kind) {
        const Token& kw = next();
        SourcePos pos = kw.pos;
        std::string name = to_upper(kw.lexeme);
        expect_punct("(", "after " + name);
        ExprPtr lhs = parse_expr();
        expect_punct(",", ": " + name + " takes two arguments");
        ExprPtr rhs = parse_expr();
        expect_punct(")", "to close " + name);
        return make_expr(pos, SetOp{kind, std::move(lhs), std::move(rhs)});
    }

    ExprPtr parse_join() {
        SourcePos pos = next().pos;
        expect_punct("(", "after JOIN");
        ExprPtr lhs = parse_expr();
        expect_punct(",", ": JOIN takes two tables and a condition");
        ExprPtr rhs = parse_expr();
        expect_punct(",", "before the join condition");
        PredPtr theta = parse_pred();
        expect_punct(")", "to close JOIN");
        return make_expr(pos, Join{std::move(lhs), std::move(rhs), std::move(theta)});
    }

    ColRef parse_colref(bool keyword_ok) {
        const Token& t = peek();
        if (t.kind != TokenKind::Identifier && !(keyword_ok && t.kind == TokenKind::Keyword)) {
            fail(t, "expected a column name");
        }
        next();
        Side side = Side::None;
        std::string name = t.lexeme;
        std::string lowered = to_upper(name);
        if ((lowered == "LEFT" || lowered == "RIGHT") && at_punct(".")) {
            next();
            side = lowered == "LEFT" ? Side::Left : Side::Right;
            const Token& n = peek();
            if (n.kind != TokenKind::Identifier) {
                fail(n, "expected a column name after '" + name + ".'");
            }
            next();
            name = n.lexeme;
        }
        std::optional<int> tag;
        if (at_punct(":") && peek(1).kind == TokenKind::Number) {
            next();
            const Token& n = next();
            auto v = try_parse_int(n.lexeme);
            if (!v) {
                fail(n, "column tag must be an integer");
            }
            tag = static_cast<int>(*v);
        }
        return ColRef{side, ColumnKey{name, tag}, t.pos};
    }

    double parse_number(const char* what) {
        bool neg = false;
        if (at_punct("-")) {
            next();
            neg = true;
        }
        const Token& n = peek();
        if (n.kind != TokenKind::Number) {
            fail(n, std::string("expected ") + what);
        }
        next();
        double v = *try_parse_double(n.lexeme);
        return neg ? -v : v;
    }

    CellValue parse_literal() {
        const Token& t = peek();
        if (t.kind == TokenKind::String) {
            next();
            return CellValue::text(t.lexeme);
        }
        if (t.kind == TokenKind::Number || at_punct("-")) {
            std::string lex;
            if (at_punct("-")) {
                next();
                lex = "-";
            }
            const Token& n = peek();
            if (n.kind != TokenKind::Number) {
                fail(n, "expected a number after '-'");
            }
            next();
            lex += n.lexeme;
            return CellValue::from_literal(lex);
        }
        fail(t, "expected a literal (number or string)");
    }

    PredPtr parse_pred() {
        const Token& t = peek();
        if (t.kind != TokenKind::Keyword) {
            fail(t, "expected a predicate");
        }
        std::string op = to_upper(t.lexeme);
        SourcePos pos = t.pos;
        if (op == "NOT") {
            fail(t, "fuzzy negation (NOT) is not supported: the algebra defines no complement");
        }
        if (op == "TRAPEZOID") {
            next();
            expect_punct("(", "after trapezoid");
            ColRef col = parse_colref(false);
            expect_punct(",", "after the trapezoid column");
            double a = parse_number("the trapezoid parameter a");
            expect_punct(",", "between trapezoid parameters");
            double b = parse_number("the trapezoid parameter b");
            expect_punct(",", "between trapezoid parameters");
            double c = parse_number("the trapezoid parameter c");
            expect_punct(",", "between trapezoid parameters");
            double d = parse_number("the trapezoid parameter d");
            expect_punct(")", "to close trapezoid");
            return make_pred(pos, Trapezoid{std::move(col), a, b, c, d});
        }
        if (op == "EQ") {
            next();
            expect_punct("(", "after eq");
            ColRef col = parse_colref(false);
            expect_punct(",", "between the eq arguments");
            CellValue lit = parse_literal();
            expect_punct(")", "to close eq");
            return make_pred(pos, CrispEq{std::move(col), std::move(lit)});
        }
        if (op == "CMP") {
            next();
            expect_punct("(", "after cmp");
            ColRef col = parse_colref(false);
            expect_punct(",", "between the cmp arguments");
            CmpOp cmp;
            const Token& o = peek();
            if (at_punct("<")) cmp = CmpOp::Lt;
            else if (at_punct("<=")) cmp = CmpOp::Le;
            else if (at_punct(">")) cmp = CmpOp::Gt;
            else if (at_punct(">=")) cmp = CmpOp::Ge;
            else if (at_punct("=")) cmp = CmpOp::Eq;
            else fail(o, "expected a comparison operator (<, <=, >, >=, =)");
            next();
            expect_punct(",", "before the cmp literal");
            CellValue lit = parse_literal();
            expect_punct(")", "to close cmp");
            return make_pred(pos, CrispCmp{std::move(col), cmp, std::move(lit)});
        }
        if (op == "AND" || op == "OR") {
            next();
            expect_punct("(", "after " + t.lexeme);
            PredPtr lhs = parse_pred();
            expect_punct(",", ": " + t.lexeme + " takes two predicates");
            PredPtr rhs = parse_pred();
            expect_punct(")", "to close " + t.lexeme);
            if (op == "AND") {
                return make_pred(pos, PredAnd{std::move(lhs), std::move(rhs)});
            }
            return make_pred(pos, PredOr{std::move(lhs), std::move(rhs)});
        }
        if (op == "CONST") {
            next();
            expect_punct("(", "after const");
            double v = parse_number("the constant degree");
            expect_punct(")", "to close const");
            return make_pred(pos, PredConst{v});
        }
        if (op == "GAPTABLE") {
            next();
            expect_punct("(", "after gaptable");
            ColRef l = parse_colref(false);
            l.side = Side::Left;
            expect_punct(",", "between the gaptable columns");
            ColRef r = parse_colref(false);
            r.side = Side::Right;
            expect_punct(",", "before the gap map");
            expect_punct("{", "to open the gap map");
            std::vector<std::pair<double, double>> gaps;
            while (true) {
                double gap = parse_number("a gap");
                expect_punct(":", "between a gap and its degree");
                double deg = parse_number("a degree");
                gaps.emplace_back(gap, deg);
                if (!at_punct(",")) {
                    break;
                }
                next();
            }
            expect_punct("}", "to close the gap map");
            expect_punct(")", "to close gaptable");
            return make_pred(pos, GapTable{std::move(l), std::move(r), std::move(gaps)});
        }
        fail(t, "expected a predicate, not '" + t.lexeme + "'");
    }

    template <class Node>
    static ExprPtr make_expr(SourcePos pos, Node&& node) {
        return std::make_unique<Expr>(Expr{pos, std::forward<Node>(node)});
    }
    template <class Node>
    static PredPtr make_pred(SourcePos pos, Node&& node) {
        return std::make_unique<Pred>(Pred{pos, std::forward<Node>(node)});
    }
};

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens) {
    return Parser(tokens).parse_query();
}

ExprPtr parse(std::string_view source) {
    return parse(tokenize(source));
}

}  // namespace fuzzydb::query
