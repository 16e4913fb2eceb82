#include "fuzzydb/errors.hpp"
#include "fuzzydb/query/query.hpp"
#include "fuzzydb/relalg.hpp"

namespace fuzzydb::query {

namespace {

[[noreturn]] void fail(SourcePos pos, const std::string& msg) {
    throw QueryError(pos.line, pos.col, msg);
}

class Analyzer {
public:
    Analyzer(const Catalog& catalog, Analysis& out) : catalog_(catalog), out_(out) {}

    Schema expr(const Expr& e) {
        Schema s = std::visit([&](const auto& node) { return dispatch(e, node); }, e.node);
        out_.schemas.emplace(&e, s);
        return s;
    }

private:
    const Catalog& catalog_;
    Analysis& out_;

    Schema dispatch(const Expr& e, const TableRef& t) {
        auto it = catalog_.find(t.name);
        if (it == catalog_.end()) {
            fail(e.pos, "unknown table '" + t.name + "'");
        }
        return it->second.base().col_keys();
    }

    Schema dispatch(const Expr&, const Project& p) {
        Schema child = expr(*p.child);
        Schema out;
        for (const ColRef& c : p.cols) {
            require_in(child, c);
            out.insert(c.col);
        }
        return out;
    }

    Schema dispatch(const Expr&, const Select& s) {
        Schema child = expr(*s.child);
        pred(*s.pred, &child, nullptr, nullptr);
        return child;
    }

    Schema dispatch(const Expr& e, const Rename& r) {
        Schema child = expr(*r.child);
        Schema keys;
        Schema values;
        for (const auto& [from, to] : r.mapping) {
            require_in(child, from);
            if (!keys.insert(from.col).second) {
                fail(from.pos, "duplicate column '" + from.col.to_string() + "' in renaming");
            }
            if (!values.insert(to.col).second) {
                fail(to.pos, "renaming is not a bijection: '" + to.col.to_string() +
                                 "' appears twice");
            }
        }
        for (const ColumnKey& c : child) {
            if (!keys.contains(c)) {
                fail(e.pos, "renaming does not cover column '" + c.to_string() + "'");
            }
        }
        return values;
    }

    Schema dispatch(const Expr&, const SetOp& s) {
        Schema l = expr(*s.lhs);
        Schema r = expr(*s.rhs);
        l.insert(r.begin(), r.end());  // operands align by zero-padding
        return l;
    }

    Schema dispatch(const Expr&, const Join& j) {
        Schema l = expr(*j.lhs);
        Schema r = expr(*j.rhs);
        pred(*j.theta, nullptr, &l, &r);
        Schema out;
        for (const ColumnKey& c : l) {
            out.insert(tag_column(c, 1));
        }
        for (const ColumnKey& c : r) {
            out.insert(tag_column(c, 2));
        }
        return out;
    }

    static void require_in(const Schema& s, const ColRef& c) {
        if (c.side != Side::None) {
            fail(c.pos, "left./right. qualifiers are only available in a join condition");
        }
        if (!s.contains(c.col)) {
            fail(c.pos, "unknown column '" + c.col.to_string() + "'");
        }
    }

    void colref(const ColRef& c, const Schema* single, const Schema* left, const Schema* right) {
        if (c.side == Side::None) {
            if (!single) {
                fail(c.pos, "column references in a join condition must be qualified with "
                            "left. or right.");
            }
            if (!single->contains(c.col)) {
                fail(c.pos, "unknown column '" + c.col.to_string() + "'");
            }
            return;
        }
        if (!left) {
            fail(c.pos, "left./right. qualifiers are only available in a join condition");
        }
        const Schema* side = c.side == Side::Left ? left : right;
        if (!side->contains(c.col)) {
            fail(c.pos, std::string("unknown column '") + c.col.to_string() + "' on the " +
                            (c.side == Side::Left ? "left" : "right") + " side of the join");
        }
    }

    void pred(const Pred& p, const Schema* single, const Schema* left, const Schema* right) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, Trapezoid>) {
                    colref(node.col, single, left, right);
                    if (!(node.a <= node.b && node.b <= node.c && node.c <= node.d)) {
                        fail(p.pos, "trapezoid parameters must satisfy a <= b <= c <= d");
                    }
                } else if constexpr (std::is_same_v<T, CrispEq>) {
                    colref(node.col, single, left, right);
                } else if constexpr (std::is_same_v<T, CrispCmp>) {
                    colref(node.col, single, left, right);
                } else if constexpr (std::is_same_v<T, GapTable>) {
                    if (!left) {
                        fail(p.pos, "gaptable is only available as a join condition");
                    }
                    colref(node.left, single, left, right);
                    colref(node.right, single, left, right);
                    for (const auto& [gap, degree] : node.gaps) {
                        if (degree < 0.0 || degree > 1.0) {
                            fail(p.pos, "gaptable degrees must lie in [0, 1]");
                        }
                    }
                } else if constexpr (std::is_same_v<T, PredAnd>) {
                    pred(*node.lhs, single, left, right);
                    pred(*node.rhs, single, left, right);
                } else if constexpr (std::is_same_v<T, PredOr>) {
                    pred(*node.lhs, single, left, right);
                    pred(*node.rhs, single, left, right);
                } else if constexpr (std::is_same_v<T, PredConst>) {
                    if (node.value < 0.0 || node.value > 1.0) {
                        fail(p.pos, "const degree must lie in [0, 1]");
                    }
                }
            },
            p.node);
    }
};

}  // namespace

Analysis analyze(const Expr& e, const Catalog& catalog) {
    Analysis out;
    Analyzer analyzer(catalog, out);
    out.result = analyzer.expr(e);
    return out;
}

}  // namespace fuzzydb::query
