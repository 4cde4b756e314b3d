#include "blamelab/lang/lexer.hpp"

#include <array>
#include <cctype>

namespace blamelab::lang {

const char* token_kind_name(TokenKind k) {
    switch (k) {
        case TokenKind::Keyword: return "keyword";
        case TokenKind::Identifier: return "identifier";
        case TokenKind::IntLiteral: return "int_literal";
        case TokenKind::BoolLiteral: return "bool_literal";
        case TokenKind::Operator: return "operator";
        case TokenKind::Delimiter: return "delimiter";
    }
    return "?";
}

namespace {

constexpr std::array<std::string_view, 9> kKeywords = {
    "let", "rec", "in", "fun", "if", "then", "else", "match", "with",
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    size_t i = 0;
    int line = 1, col = 1;

    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; k++) {
            if (src[i] == '\n') {
                line++;
                col = 1;
            } else {
                col++;
            }
            i++;
        }
    };
    auto push = [&](size_t start, size_t len, TokenKind kind, int tl, int tc) {
        out.push_back(Token{std::string(src.substr(start, len)), start,
                            start + len, tl, tc, kind});
    };

    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '(' && i + 1 < src.size() && src[i + 1] == '*') {
            size_t open = i;
            int depth = 1;
            advance(2);
            while (i < src.size() && depth > 0) {
                if (src[i] == '(' && i + 1 < src.size() && src[i + 1] == '*') {
                    depth++;
                    advance(2);
                } else if (src[i] == '*' && i + 1 < src.size() && src[i + 1] == ')') {
                    depth--;
                    advance(2);
                } else {
                    advance(1);
                }
            }
            if (depth > 0) throw LexError("unterminated comment", open);
            continue;
        }

        int tl = line, tc = col;
        size_t start = i;

        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) j++;
            push(start, j - start, TokenKind::IntLiteral, tl, tc);
            advance(j - i);
            continue;
        }
        if (is_ident_start(c)) {
            size_t j = i;
            while (j < src.size() && is_ident_char(src[j])) j++;
            std::string_view word = src.substr(start, j - start);
            TokenKind kind = TokenKind::Identifier;
            if (word == "true" || word == "false") {
                kind = TokenKind::BoolLiteral;
            } else {
                for (auto kw : kKeywords) {
                    if (word == kw) {
                        kind = TokenKind::Keyword;
                        break;
                    }
                }
            }
            push(start, j - start, kind, tl, tc);
            advance(j - i);
            continue;
        }

        auto two = (i + 1 < src.size()) ? src.substr(i, 2) : std::string_view{};
        if (two == "[]") {
            push(start, 2, TokenKind::Delimiter, tl, tc);
            advance(2);
            continue;
        }
        if (two == "<=" || two == "&&" || two == "||" || two == "::" || two == "->") {
            push(start, 2, TokenKind::Operator, tl, tc);
            advance(2);
            continue;
        }
        switch (c) {
            case '+': case '-': case '*': case '<': case '=':
                push(start, 1, TokenKind::Operator, tl, tc);
                advance(1);
                continue;
            case '(': case ')': case '[': case ']': case ';': case ',': case '|':
                push(start, 1, TokenKind::Delimiter, tl, tc);
                advance(1);
                continue;
            default:
                throw LexError("illegal character '" + std::string(1, c) + "'", i);
        }
    }
    return out;
}

}  // namespace blamelab::lang
