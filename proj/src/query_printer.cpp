#include "fuzzydb/query/query.hpp"
#include "fuzzydb/util.hpp"

namespace fuzzydb::query {

namespace {

std::string render_colref(const ColRef& c) {
    std::string out;
    if (c.side == Side::Left) {
        out += "left.";
    } else if (c.side == Side::Right) {
        out += "right.";
    }
    return out + c.col.to_string();
}

std::string render_literal(const CellValue& v) {
    if (v.is_text()) {
        std::string out = "\"";
        for (char c : v.as_text()) {
            if (c == '"' || c == '\\') {
                out += '\\';
            }
            out += c;
        }
        return out + "\"";
    }
    return v.to_string();
}

const char* cmp_name(CmpOp op) {
    switch (op) {
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
        default: return "=";
    }
}

struct PredPrinter {
    std::string operator()(const Trapezoid& t) const {
        return "trapezoid(" + render_colref(t.col) + ", " + format_double(t.a) + ", " +
               format_double(t.b) + ", " + format_double(t.c) + ", " + format_double(t.d) + ")";
    }
    std::string operator()(const CrispEq& e) const {
        return "eq(" + render_colref(e.col) + ", " + render_literal(e.literal) + ")";
    }
    std::string operator()(const CrispCmp& c) const {
        return "cmp(" + render_colref(c.col) + ", " + cmp_name(c.op) + ", " +
               render_literal(c.literal) + ")";
    }
    std::string operator()(const GapTable& g) const {
        std::string out = "gaptable(" + g.left.col.to_string() + ", " + g.right.col.to_string() +
                          ", {";
        for (std::size_t i = 0; i < g.gaps.size(); ++i) {
            if (i > 0) {
                out += ", ";
            }
            out += format_double(g.gaps[i].first) + ":" + format_double(g.gaps[i].second);
        }
        return out + "})";
    }
    std::string operator()(const PredAnd& a) const {
        return "and(" + render(*a.lhs) + ", " + render(*a.rhs) + ")";
    }
    std::string operator()(const PredOr& o) const {
        return "or(" + render(*o.lhs) + ", " + render(*o.rhs) + ")";
    }
    std::string operator()(const PredConst& c) const {
        return "const(" + format_double(c.value) + ")";
    }
};

const char* setop_name(SetOpKind kind) {
    switch (kind) {
        case SetOpKind::Union: return "UNION";
        case SetOpKind::Intersect: return "INTERSECT";
        case SetOpKind::DisjointUnion: return "DUNION";
        default: return "DIFF";
    }
}

struct ExprPrinter {
    std::string operator()(const TableRef& t) const { return t.name; }
    std::string operator()(const Project& p) const {
        std::string out = "PROJECT(" + render(*p.child) + ", [";
        for (std::size_t i = 0; i < p.cols.size(); ++i) {
            if (i > 0) {
                out += ", ";
            }
            out += p.cols[i].col.to_string();
        }
        return out + "])";
    }
    std::string operator()(const Select& s) const {
        return "SELECT(" + render(*s.child) + ", " + render(*s.pred) + ")";
    }
    std::string operator()(const Rename& r) const {
        std::string out = "RENAME(" + render(*r.child) + ", {";
        for (std::size_t i = 0; i < r.mapping.size(); ++i) {
            if (i > 0) {
                out += ", ";
            }
            out += r.mapping[i].first.col.to_string() + " -> " +
                   r.mapping[i].second.col.to_string();
        }
        return out + "})";
    }
    std::string operator()(const SetOp& s) const {
        return std::string(setop_name(s.kind)) + "(" + render(*s.lhs) + ", " + render(*s.rhs) +
               ")";
    }
    std::string operator()(const Join& j) const {
        return "JOIN(" + render(*j.lhs) + ", " + render(*j.rhs) + ", " + render(*j.theta) + ")";
    }
};

}  // namespace

std::string render(const Pred& p) {
    return std::visit(PredPrinter{}, p.node);
}

std::string render(const Expr& e) {
    return std::visit(ExprPrinter{}, e.node);
}

}  // namespace fuzzydb::query
