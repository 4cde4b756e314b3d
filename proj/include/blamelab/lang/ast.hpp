#pragma once

#include <set>
#include <string>

#include "blamelab/lang/token.hpp"

namespace blamelab::lang {

enum class NodeKind : uint8_t {
    IntLit,
    BoolLit,
    Var,
    Fun,
    App,
    Let,
    LetRec,
    If,
    Match,
    ListLit,
    Cons,
    BinOp,
    Tuple,
};

const char* node_kind_name(NodeKind k);

// One expression node. Children layouts:
//   Fun:    [param binders..., body]
//   App:    [fn, arg]
//   Let(Rec): [binder, param binders..., rhs, body?]  (body absent for a
//             trailing top-level binding; see Ast::has_body)
//   If:     [cond, then, else]
//   Match:  [scrutinee, pat1, body1, pat2, body2, ...]
//   Cons:   [head, tail]
//   BinOp:  [lhs, rhs] with `name` holding the operator text
//   ListLit/Tuple: [elements...]
// Binder occurrences are Var nodes flagged is_binder. Patterns reuse
// ListLit (for []), Var, and Cons nodes, flagged is_pattern.
struct AstNode {
    NodeKind kind;
    int first_token = 0;
    int last_token = 0;
    int leaf_token = -1;            // IntLit/BoolLit/Var, and `[]` lexed as one token
    std::string name;               // Var name, binder name, or operator text
    std::vector<int> children;      // indices into Ast::nodes
    std::vector<int> structural;    // token indices attached directly to this node
    int param_count = 0;            // Fun/Let/LetRec
    bool has_body = true;           // Let/LetRec
    bool is_pattern = false;
    bool is_binder = false;
};

struct Ast {
    std::vector<AstNode> nodes;
    int root = -1;
    int token_count = 0;

    const AstNode& at(int i) const { return nodes[static_cast<size_t>(i)]; }
};

struct ParseError : std::runtime_error {
    int token_index;                  // offending token (== token count at EOF)
    std::set<std::string> expected;   // expected token texts / classes
    ParseError(const std::string& msg, int tok, std::set<std::string> exp)
        : std::runtime_error(msg), token_index(tok), expected(std::move(exp)) {}
};

Ast parse(const std::vector<Token>& tokens);

// Byte span [start, end) covered by a node, parens included.
std::pair<size_t, size_t> node_span(const Ast& ast, const std::vector<Token>& tokens, int node);

// Emits the program's tokens in source order from the tree structure,
// separated by single spaces. Re-lexing the result yields the original
// token texts.
std::string pretty_print(const Ast& ast, const std::vector<Token>& tokens);

}  // namespace blamelab::lang
