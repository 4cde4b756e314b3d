#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace blamelab {

// Per-token binary ground truth / prediction bits, one entry per token.
using LabelVector = std::vector<uint8_t>;

namespace lang {

enum class TokenKind : uint8_t {
    Keyword,
    Identifier,
    IntLiteral,
    BoolLiteral,
    Operator,
    Delimiter,
};

const char* token_kind_name(TokenKind k);

struct Token {
    std::string text;
    size_t start = 0;  // byte offset, inclusive
    size_t end = 0;    // byte offset, exclusive
    int line = 1;      // 1-based
    int col = 1;       // 1-based
    TokenKind kind = TokenKind::Identifier;
};

struct LexError : std::runtime_error {
    size_t offset;
    LexError(const std::string& msg, size_t off)
        : std::runtime_error(msg), offset(off) {}
};

}  // namespace lang
}  // namespace blamelab
