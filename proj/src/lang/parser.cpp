#include "blamelab/lang/ast.hpp"

#include <algorithm>
#include <cassert>

namespace blamelab::lang {

const char* node_kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::IntLit: return "IntLit";
        case NodeKind::BoolLit: return "BoolLit";
        case NodeKind::Var: return "Var";
        case NodeKind::Fun: return "Fun";
        case NodeKind::App: return "App";
        case NodeKind::Let: return "Let";
        case NodeKind::LetRec: return "LetRec";
        case NodeKind::If: return "If";
        case NodeKind::Match: return "Match";
        case NodeKind::ListLit: return "ListLit";
        case NodeKind::Cons: return "Cons";
        case NodeKind::BinOp: return "BinOp";
        case NodeKind::Tuple: return "Tuple";
    }
    return "?";
}

namespace {

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    Ast run() {
        ast_.token_count = static_cast<int>(toks_.size());
        if (toks_.empty()) {
            throw ParseError("empty program", 0, {"expression"});
        }
        ast_.root = parse_expr(true);
        if (pos_ != static_cast<int>(toks_.size())) {
            fail({"end of input"});
        }
        return std::move(ast_);
    }

private:
    const std::vector<Token>& toks_;
    Ast ast_;
    int pos_ = 0;

    bool at_end() const { return pos_ >= static_cast<int>(toks_.size()); }
    const Token& peek() const { return toks_[static_cast<size_t>(pos_)]; }
    bool peek_is(std::string_view text) const { return !at_end() && peek().text == text; }

    [[noreturn]] void fail(std::set<std::string> expected) {
        std::string msg = "parse error at ";
        msg += at_end() ? "end of input" : ("'" + peek().text + "'");
        throw ParseError(msg, pos_, std::move(expected));
    }

    int expect(std::string_view text) {
        if (at_end() || peek().text != text) fail({std::string(text)});
        return pos_++;
    }

    int expect_ident() {
        if (at_end() || peek().kind != TokenKind::Identifier) fail({"identifier"});
        return pos_++;
    }

    int add_node(AstNode n) {
        ast_.nodes.push_back(std::move(n));
        return static_cast<int>(ast_.nodes.size()) - 1;
    }

    int make_leaf(NodeKind kind, int tok, bool binder = false, bool pattern = false) {
        AstNode n;
        n.kind = kind;
        n.first_token = n.last_token = n.leaf_token = tok;
        n.name = toks_[static_cast<size_t>(tok)].text;
        n.is_binder = binder;
        n.is_pattern = pattern;
        return add_node(n);
    }

    void set_range(AstNode& n) {
        int lo = n.leaf_token >= 0 ? n.leaf_token : INT32_MAX;
        int hi = n.leaf_token >= 0 ? n.leaf_token : -1;
        for (int t : n.structural) {
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
        for (int c : n.children) {
            lo = std::min(lo, ast_.nodes[static_cast<size_t>(c)].first_token);
            hi = std::max(hi, ast_.nodes[static_cast<size_t>(c)].last_token);
        }
        n.first_token = lo;
        n.last_token = hi;
    }

    bool starts_expr() const {
        if (at_end()) return false;
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Identifier:
            case TokenKind::IntLiteral:
            case TokenKind::BoolLiteral:
                return true;
            case TokenKind::Keyword:
                return t.text == "let" || t.text == "fun" || t.text == "if" || t.text == "match";
            case TokenKind::Delimiter:
                return t.text == "(" || t.text == "[" || t.text == "[]";
            default:
                return false;
        }
    }

    bool starts_atom() const {
        if (at_end()) return false;
        const Token& t = peek();
        return t.kind == TokenKind::Identifier || t.kind == TokenKind::IntLiteral ||
               t.kind == TokenKind::BoolLiteral ||
               (t.kind == TokenKind::Delimiter &&
                (t.text == "(" || t.text == "[" || t.text == "[]"));
    }

    // toplevel controls the implicit-`in` rule: a `let` binding followed by
    // another expression (or nothing) instead of `in` is a top-level chain.
    int parse_expr(bool toplevel) {
        if (peek_is("let")) return parse_let(toplevel);
        if (peek_is("fun")) return parse_fun();
        if (peek_is("if")) return parse_if();
        if (peek_is("match")) return parse_match();
        return parse_or();
    }

    int parse_let(bool toplevel) {
        AstNode n;
        n.kind = NodeKind::Let;
        n.structural.push_back(expect("let"));
        if (peek_is("rec")) {
            n.kind = NodeKind::LetRec;
            n.structural.push_back(pos_++);
        }
        int name_tok = expect_ident();
        n.name = toks_[static_cast<size_t>(name_tok)].text;
        n.children.push_back(make_leaf(NodeKind::Var, name_tok, /*binder=*/true));
        while (!at_end() && peek().kind == TokenKind::Identifier) {
            n.children.push_back(make_leaf(NodeKind::Var, pos_++, /*binder=*/true));
            n.param_count++;
        }
        n.structural.push_back(expect("="));
        n.children.push_back(parse_expr(false));
        if (peek_is("in")) {
            n.structural.push_back(pos_++);
            n.children.push_back(parse_expr(toplevel));
        } else if (toplevel && starts_expr()) {
            n.children.push_back(parse_expr(true));
        } else if (toplevel && at_end()) {
            n.has_body = false;
        } else {
            fail({"in"});
        }
        set_range(n);
        return add_node(std::move(n));
    }

    int parse_fun() {
        AstNode n;
        n.kind = NodeKind::Fun;
        n.structural.push_back(expect("fun"));
        n.children.push_back(make_leaf(NodeKind::Var, expect_ident(), /*binder=*/true));
        n.param_count = 1;
        while (!at_end() && peek().kind == TokenKind::Identifier) {
            n.children.push_back(make_leaf(NodeKind::Var, pos_++, /*binder=*/true));
            n.param_count++;
        }
        n.structural.push_back(expect("->"));
        n.children.push_back(parse_expr(false));
        set_range(n);
        return add_node(std::move(n));
    }

    int parse_if() {
        AstNode n;
        n.kind = NodeKind::If;
        n.structural.push_back(expect("if"));
        n.children.push_back(parse_expr(false));
        n.structural.push_back(expect("then"));
        n.children.push_back(parse_expr(false));
        n.structural.push_back(expect("else"));
        n.children.push_back(parse_expr(false));
        set_range(n);
        return add_node(std::move(n));
    }

    int parse_match() {
        AstNode n;
        n.kind = NodeKind::Match;
        n.structural.push_back(expect("match"));
        n.children.push_back(parse_expr(false));
        n.structural.push_back(expect("with"));
        if (peek_is("|")) n.structural.push_back(pos_++);
        parse_arm(n);
        while (peek_is("|")) {
            n.structural.push_back(pos_++);
            parse_arm(n);
        }
        set_range(n);
        return add_node(std::move(n));
    }

    void parse_arm(AstNode& match_node) {
        match_node.children.push_back(parse_pattern());
        match_node.structural.push_back(expect("->"));
        match_node.children.push_back(parse_expr(false));
    }

    int parse_pattern() {
        int head = parse_pattern_atom();
        if (peek_is("::")) {
            AstNode n;
            n.kind = NodeKind::Cons;
            n.is_pattern = true;
            n.children.push_back(head);
            n.structural.push_back(pos_++);
            n.children.push_back(parse_pattern());
            set_range(n);
            return add_node(std::move(n));
        }
        return head;
    }

    int parse_pattern_atom() {
        if (at_end()) fail({"pattern"});
        const Token& t = peek();
        if (t.text == "[]") {
            AstNode n;
            n.kind = NodeKind::ListLit;
            n.is_pattern = true;
            n.leaf_token = pos_++;
            set_range(n);
            return add_node(std::move(n));
        }
        if (t.kind == TokenKind::Identifier) {
            return make_leaf(NodeKind::Var, pos_++, /*binder=*/true, /*pattern=*/true);
        }
        if (t.text == "(") {
            int lp = pos_++;
            int inner = parse_pattern();
            int rp = expect(")");
            attach_parens(inner, lp, rp);
            return inner;
        }
        fail({"[]", "identifier", "("});
    }

    void attach_parens(int node, int lp, int rp) {
        AstNode& n = ast_.nodes[static_cast<size_t>(node)];
        n.structural.push_back(lp);
        n.structural.push_back(rp);
        n.first_token = std::min(n.first_token, lp);
        n.last_token = std::max(n.last_token, rp);
    }

    int parse_binop_chain(int (Parser::*next)(), std::initializer_list<std::string_view> ops,
                          bool associative) {
        int lhs = (this->*next)();
        while (!at_end() && peek().kind == TokenKind::Operator) {
            bool hit = false;
            for (auto op : ops) {
                if (peek().text == op) {
                    hit = true;
                    break;
                }
            }
            if (!hit) break;
            AstNode n;
            n.kind = NodeKind::BinOp;
            n.name = peek().text;
            n.structural.push_back(pos_++);
            n.children.push_back(lhs);
            n.children.push_back((this->*next)());
            set_range(n);
            lhs = add_node(std::move(n));
            if (!associative) break;
        }
        return lhs;
    }

    int parse_or() { return parse_binop_chain(&Parser::parse_and, {"||"}, true); }
    int parse_and() { return parse_binop_chain(&Parser::parse_cmp, {"&&"}, true); }
    int parse_cmp() {
        return parse_binop_chain(&Parser::parse_cons, {"<", "<=", "="}, false);
    }

    int parse_cons() {
        int head = parse_add();
        if (peek_is("::")) {
            AstNode n;
            n.kind = NodeKind::Cons;
            n.children.push_back(head);
            n.structural.push_back(pos_++);
            n.children.push_back(parse_cons());  // right associative
            set_range(n);
            return add_node(std::move(n));
        }
        return head;
    }

    int parse_add() { return parse_binop_chain(&Parser::parse_mul, {"+", "-"}, true); }
    int parse_mul() { return parse_binop_chain(&Parser::parse_app, {"*"}, true); }

    int parse_app() {
        int fn = parse_atom();
        while (starts_atom()) {
            AstNode n;
            n.kind = NodeKind::App;
            n.children.push_back(fn);
            n.children.push_back(parse_atom());
            set_range(n);
            fn = add_node(std::move(n));
        }
        return fn;
    }

    int parse_atom() {
        if (at_end()) fail({"expression"});
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::IntLiteral:
                return make_leaf(NodeKind::IntLit, pos_++);
            case TokenKind::BoolLiteral:
                return make_leaf(NodeKind::BoolLit, pos_++);
            case TokenKind::Identifier:
                return make_leaf(NodeKind::Var, pos_++);
            default:
                break;
        }
        if (t.text == "[]") {
            AstNode n;
            n.kind = NodeKind::ListLit;
            n.leaf_token = pos_++;
            set_range(n);
            return add_node(std::move(n));
        }
        if (t.text == "(") {
            int lp = pos_++;
            int first = parse_expr(false);
            if (peek_is(",")) {
                AstNode n;
                n.kind = NodeKind::Tuple;
                n.structural.push_back(lp);
                n.children.push_back(first);
                while (peek_is(",")) {
                    n.structural.push_back(pos_++);
                    n.children.push_back(parse_expr(false));
                }
                n.structural.push_back(expect(")"));
                set_range(n);
                return add_node(std::move(n));
            }
            int rp = expect(")");
            attach_parens(first, lp, rp);
            return first;
        }
        if (t.text == "[") {
            AstNode n;
            n.kind = NodeKind::ListLit;
            n.structural.push_back(pos_++);
            if (!peek_is("]")) {
                n.children.push_back(parse_expr(false));
                while (peek_is(";")) {
                    n.structural.push_back(pos_++);
                    n.children.push_back(parse_expr(false));
                }
            }
            n.structural.push_back(expect("]"));
            set_range(n);
            return add_node(std::move(n));
        }
        fail({"expression"});
    }
};

void collect_tokens(const Ast& ast, int node, std::vector<int>& out) {
    const AstNode& n = ast.at(node);
    // Merge leaf/structural tokens and child subtrees in source order.
    size_t ci = 0;
    std::vector<int> own = n.structural;
    if (n.leaf_token >= 0) own.push_back(n.leaf_token);
    std::sort(own.begin(), own.end());
    size_t oi = 0;
    while (oi < own.size() || ci < n.children.size()) {
        int child_first = ci < n.children.size() ? ast.at(n.children[ci]).first_token : INT32_MAX;
        if (oi < own.size() && own[oi] < child_first) {
            out.push_back(own[oi++]);
        } else if (ci < n.children.size()) {
            collect_tokens(ast, n.children[ci++], out);
        }
    }
}

}  // namespace

Ast parse(const std::vector<Token>& tokens) {
    return Parser(tokens).run();
}

std::pair<size_t, size_t> node_span(const Ast& ast, const std::vector<Token>& tokens, int node) {
    const AstNode& n = ast.at(node);
    return {tokens[static_cast<size_t>(n.first_token)].start,
            tokens[static_cast<size_t>(n.last_token)].end};
}

std::string pretty_print(const Ast& ast, const std::vector<Token>& tokens) {
    std::vector<int> order;
    order.reserve(tokens.size());
    collect_tokens(ast, ast.root, order);
    assert(order.size() == tokens.size());
    std::string out;
    for (size_t i = 0; i < order.size(); i++) {
        if (i) out += ' ';
        out += tokens[static_cast<size_t>(order[i])].text;
    }
    return out;
}

}  // namespace blamelab::lang
