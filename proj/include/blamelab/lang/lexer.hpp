#pragma once

#include <string_view>

#include "blamelab/lang/token.hpp"

namespace blamelab::lang {

// Lexes a mini-ML source string. Comments `(* ... *)` (nesting allowed) and
// whitespace produce no tokens. An adjacent `[]` pair lexes as a single
// delimiter token for the empty list. Throws LexError on illegal input.
std::vector<Token> tokenize(std::string_view source);

}  // namespace blamelab::lang
