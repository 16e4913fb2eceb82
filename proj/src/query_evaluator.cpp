#include <cmath>

#include "fuzzydb/errors.hpp"
#include "fuzzydb/query/query.hpp"
#include "fuzzydb/relalg.hpp"

namespace fuzzydb::query {

namespace {

[[noreturn]] void type_error(const Pred& p, const char* what, const ColRef& c, const Row& row) {
    throw QueryError(p.pos.line, p.pos.col,
                     std::string(what) + " over non-matching value at column '" +
                         c.col.to_string() + "' in row " + row.to_string());
}

struct PredContext {
    const Row* single = nullptr;
    const Row* left = nullptr;
    const Row* right = nullptr;

    const Row& row_for(const ColRef& c) const {
        switch (c.side) {
            case Side::None: return *single;
            case Side::Left: return *left;
            default: return *right;
        }
    }
};

double trapezoid_membership(double x, const Trapezoid& t) {
    if (t.b <= x && x <= t.c) {
        return 1.0;
    }
    if (x <= t.a || x >= t.d) {
        return 0.0;
    }
    if (x < t.b) {
        return (x - t.a) / (t.b - t.a);
    }
    return (t.d - x) / (t.d - t.c);
}

Fuzzy eval_pred(const Pred& p, const PredContext& ctx) {
    return std::visit(
        [&](const auto& node) -> Fuzzy {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Trapezoid>) {
                const Row& row = ctx.row_for(node.col);
                const CellValue& v = row.at(node.col.col);
                if (v.is_null()) {
                    return 0.0;
                }
                if (!v.is_numeric()) {
                    type_error(p, "trapezoid", node.col, row);
                }
                return trapezoid_membership(v.as_number(), node);
            } else if constexpr (std::is_same_v<T, CrispEq>) {
                const CellValue& v = ctx.row_for(node.col).at(node.col.col);
                if (v.is_null()) {
                    return 0.0;
                }
                if (v.is_numeric() && node.literal.is_numeric()) {
                    return v.as_number() == node.literal.as_number() ? 1.0 : 0.0;
                }
                return v == node.literal ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<T, CrispCmp>) {
                const Row& row = ctx.row_for(node.col);
                const CellValue& v = row.at(node.col.col);
                if (v.is_null()) {
                    return 0.0;
                }
                int sign;
                if (v.is_numeric() && node.literal.is_numeric()) {
                    double x = v.as_number();
                    double y = node.literal.as_number();
                    sign = x < y ? -1 : (x > y ? 1 : 0);
                } else if (v.is_text() && node.literal.is_text()) {
                    sign = v.as_text().compare(node.literal.as_text());
                    sign = sign < 0 ? -1 : (sign > 0 ? 1 : 0);
                } else {
                    type_error(p, "cmp", node.col, row);
                }
                bool hold;
                switch (node.op) {
                    case CmpOp::Lt: hold = sign < 0; break;
                    case CmpOp::Le: hold = sign <= 0; break;
                    case CmpOp::Gt: hold = sign > 0; break;
                    case CmpOp::Ge: hold = sign >= 0; break;
                    default: hold = sign == 0;
                }
                return hold ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<T, GapTable>) {
                const Row& lrow = ctx.row_for(node.left);
                const Row& rrow = ctx.row_for(node.right);
                const CellValue& l = lrow.at(node.left.col);
                const CellValue& r = rrow.at(node.right.col);
                if (l.is_null() || r.is_null()) {
                    return 0.0;
                }
                if (!l.is_numeric()) {
                    type_error(p, "gaptable", node.left, lrow);
                }
                if (!r.is_numeric()) {
                    type_error(p, "gaptable", node.right, rrow);
                }
                double gap = std::abs(l.as_number() - r.as_number());
                for (const auto& [g, degree] : node.gaps) {
                    if (g == gap) {
                        return degree;
                    }
                }
                return 0.0;
            } else if constexpr (std::is_same_v<T, PredAnd>) {
                return std::min(eval_pred(*node.lhs, ctx), eval_pred(*node.rhs, ctx));
            } else if constexpr (std::is_same_v<T, PredOr>) {
                return std::max(eval_pred(*node.lhs, ctx), eval_pred(*node.rhs, ctx));
            } else {
                return node.value;
            }
        },
        p.node);
}

void collect_sides(const Pred& p, std::set<ColumnKey>& left, std::set<ColumnKey>& right) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Trapezoid> || std::is_same_v<T, CrispEq> ||
                          std::is_same_v<T, CrispCmp>) {
                (node.col.side == Side::Left ? left : right).insert(node.col.col);
            } else if constexpr (std::is_same_v<T, GapTable>) {
                left.insert(node.left.col);
                right.insert(node.right.col);
            } else if constexpr (std::is_same_v<T, PredAnd> || std::is_same_v<T, PredOr>) {
                collect_sides(*node.lhs, left, right);
                collect_sides(*node.rhs, left, right);
            }
        },
        p.node);
}

FuzzyArray eval_expr(const Expr& e, const Catalog& catalog) {
    return std::visit(
        [&](const auto& node) -> FuzzyArray {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, TableRef>) {
                return catalog.at(node.name);
            } else if constexpr (std::is_same_v<T, Project>) {
                std::set<ColumnKey> js;
                for (const ColRef& c : node.cols) {
                    js.insert(c.col);
                }
                return project(eval_expr(*node.child, catalog), js);
            } else if constexpr (std::is_same_v<T, Select>) {
                const Pred& p = *node.pred;
                return select(eval_expr(*node.child, catalog), [&p](const Row& r) -> Fuzzy {
                    return eval_pred(p, PredContext{&r, nullptr, nullptr});
                });
            } else if constexpr (std::is_same_v<T, Rename>) {
                std::map<ColumnKey, ColumnKey> f;
                for (const auto& [from, to] : node.mapping) {
                    f.emplace(from.col, to.col);
                }
                return rename(eval_expr(*node.child, catalog), f);
            } else if constexpr (std::is_same_v<T, SetOp>) {
                FuzzyArray l = eval_expr(*node.lhs, catalog);
                FuzzyArray r = eval_expr(*node.rhs, catalog);
                switch (node.kind) {
                    case SetOpKind::Union: return fuzzy_union(l, r);
                    case SetOpKind::Intersect: return fuzzy_intersection(l, r);
                    case SetOpKind::DisjointUnion: return disjoint_union(l, r);
                    default: return difference(l, r);
                }
            } else {
                FuzzyArray l = eval_expr(*node.lhs, catalog);
                FuzzyArray r = eval_expr(*node.rhs, catalog);
                const Pred& p = *node.theta;
                ThetaPredicate theta;
                collect_sides(p, theta.left_cols, theta.right_cols);
                theta.fn = [&p](const Row& lr, const Row& rr) -> Fuzzy {
                    return eval_pred(p, PredContext{nullptr, &lr, &rr});
                };
                return theta_join(l, r, theta);
            }
        },
        e.node);
}

}  // namespace

FuzzyArray evaluate(const Expr& e, const Catalog& catalog) {
    analyze(e, catalog);
    return eval_expr(e, catalog);
}

}  // namespace fuzzydb::query
