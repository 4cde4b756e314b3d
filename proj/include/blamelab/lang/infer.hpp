#pragma once

#include <optional>

#include "blamelab/lang/ast.hpp"
#include "blamelab/lang/types.hpp"

namespace blamelab::lang {

struct TypeErrorReport {
    size_t blamed_start = 0;  // byte span of the node whose constraint failed
    size_t blamed_end = 0;
    std::vector<int> blamed_token_indices;  // exactly the tokens inside the span
    Type expected;
    Type actual;
    std::string message;
};

struct InferResult {
    std::optional<Type> type;                  // principal type on success
    std::optional<TypeErrorReport> error;      // first unification failure
    bool ok() const { return type.has_value(); }
};

struct UnboundVariableError : std::runtime_error {
    std::string name;
    size_t span_start, span_end;
    UnboundVariableError(std::string n, size_t s, size_t e)
        : std::runtime_error("unbound variable " + n),
          name(std::move(n)), span_start(s), span_end(e) {}
};

// Hindley-Milner inference over the mini-ML AST. Children are visited left
// to right, bottom up; the first failing unification wins and blames the
// innermost node whose constraint failed, mirroring first-error compiler
// behavior. A type error is a normal return, not an exception.
InferResult infer(const Ast& ast, const std::vector<Token>& tokens);

struct WellTypedError : std::runtime_error {
    WellTypedError() : std::runtime_error("program is well-typed; no blame to extract") {}
};

// Compiler baseline: lex/parse/infer `source` and label exactly the blamed
// tokens of the resulting TypeErrorReport (a single contiguous run).
// Throws WellTypedError if inference succeeds.
LabelVector compiler_blame(const std::string& source);

}  // namespace blamelab::lang
