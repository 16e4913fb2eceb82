#include <algorithm>
#include <array>
#include <cctype>

#include "fuzzydb/errors.hpp"
#include "fuzzydb/query/query.hpp"

namespace fuzzydb::query {

namespace {

std::string to_upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

constexpr std::array kKeywords = {
    "PROJECT", "SELECT", "RENAME", "UNION", "INTERSECT", "DUNION",   "DIFF", "JOIN",
    "TRAPEZOID", "EQ",   "CMP",    "AND",   "OR",        "CONST", "GAPTABLE", "NOT",
};

bool is_keyword(const std::string& upper) {
    return std::find(kKeywords.begin(), kKeywords.end(), upper) != kKeywords.end();
}

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

bool valid_table_name(const std::string& name) {
    if (name.empty() || !ident_start(name[0])) {
        return false;
    }
    return std::all_of(name.begin(), name.end(), ident_char);
}

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> tokens;
    SourcePos pos;
    std::size_t i = 0;

    auto advance = [&](char c) {
        if (c == '\n') {
            ++pos.line;
            pos.col = 1;
        } else {
            ++pos.col;
        }
    };

    while (i < source.size()) {
        char c = source[i];
        SourcePos start = pos;
        if (c == '#') {
            while (i < source.size() && source[i] != '\n') {
                advance(source[i++]);
            }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            ++i;
            continue;
        }
        if (ident_start(c)) {
            std::string lex;
            while (i < source.size() && ident_char(source[i])) {
                lex += source[i];
                advance(source[i++]);
            }
            TokenKind kind = is_keyword(to_upper(lex)) ? TokenKind::Keyword : TokenKind::Identifier;
            tokens.push_back({kind, std::move(lex), start});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lex;
            while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) {
                lex += source[i];
                advance(source[i++]);
            }
            if (i + 1 < source.size() && source[i] == '.' &&
                std::isdigit(static_cast<unsigned char>(source[i + 1]))) {
                lex += source[i];
                advance(source[i++]);
                while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) {
                    lex += source[i];
                    advance(source[i++]);
                }
            }
            tokens.push_back({TokenKind::Number, std::move(lex), start});
            continue;
        }
        if (c == '"') {
            advance(c);
            ++i;
            std::string lex;
            bool closed = false;
            while (i < source.size()) {
                char d = source[i];
                if (d == '"') {
                    advance(d);
                    ++i;
                    closed = true;
                    break;
                }
                if (d == '\\' && i + 1 < source.size()) {
                    char e = source[i + 1];
                    if (e == '"' || e == '\\') {
                        lex += e;
                        advance(d);
                        ++i;
                        advance(e);
                        ++i;
                        continue;
                    }
                }
                if (d == '\n') {
                    throw QueryError(start.line, start.col, "unterminated string literal");
                }
                lex += d;
                advance(d);
                ++i;
            }
            if (!closed) {
                throw QueryError(start.line, start.col, "unterminated string literal");
            }
            tokens.push_back({TokenKind::String, std::move(lex), start});
            continue;
        }
        if (c == '-' && i + 1 < source.size() && source[i + 1] == '>') {
            tokens.push_back({TokenKind::Punct, "->", start});
            advance('-');
            advance('>');
            i += 2;
            continue;
        }
        if ((c == '<' || c == '>') && i + 1 < source.size() && source[i + 1] == '=') {
            tokens.push_back({TokenKind::Punct, std::string{c} + "=", start});
            advance(c);
            advance('=');
            i += 2;
            continue;
        }
        if (std::string_view("()[]{},.:<>=-").find(c) != std::string_view::npos) {
            tokens.push_back({TokenKind::Punct, std::string(1, c), start});
            advance(c);
            ++i;
            continue;
        }
        throw QueryError(start.line, start.col,
                         std::string("illegal character '") + c + "' in query");
    }
    tokens.push_back({TokenKind::End, "", pos});
    return tokens;
}

}  // namespace fuzzydb::query
