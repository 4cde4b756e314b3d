#include "blamelab/lang/infer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "blamelab/lang/lexer.hpp"

namespace blamelab::lang {

bool operator==(const Type& a, const Type& b) {
    return a.tag == b.tag && a.var == b.var && a.args == b.args;
}

std::string to_string(const Type& t) {
    auto paren_if = [](bool p, std::string s) { return p ? "(" + s + ")" : s; };
    switch (t.tag) {
        case Type::Tag::Int: return "int";
        case Type::Tag::Bool: return "bool";
        case Type::Tag::Var: {
            std::string s = "'";
            int v = t.var;
            s += static_cast<char>('a' + v % 26);
            if (v >= 26) s += std::to_string(v / 26);
            return s;
        }
        case Type::Tag::List: {
            const Type& e = t.args[0];
            bool p = e.tag == Type::Tag::Fun || e.tag == Type::Tag::Tuple;
            return paren_if(p, to_string(e)) + " list";
        }
        case Type::Tag::Fun: {
            const Type& a = t.args[0];
            bool p = a.tag == Type::Tag::Fun;
            return paren_if(p, to_string(a)) + " -> " + to_string(t.args[1]);
        }
        case Type::Tag::Tuple: {
            std::string s;
            for (size_t i = 0; i < t.args.size(); i++) {
                if (i) s += " * ";
                const Type& e = t.args[i];
                bool p = e.tag == Type::Tag::Fun || e.tag == Type::Tag::Tuple;
                s += paren_if(p, to_string(e));
            }
            return s;
        }
    }
    return "?";
}

namespace {

enum class Tag : uint8_t { Int, Bool, List, Fun, Tuple, Var };

struct TCell {
    Tag tag;
    std::vector<int> args;
    int link = -1;  // Var binding
};

struct Scheme {
    std::vector<int> qvars;
    int type;
};

// Raised on the first failed unification; carries the finished report.
struct FirstFailure {
    TypeErrorReport report;
};

class Infer {
public:
    Infer(const Ast& ast, const std::vector<Token>& tokens) : ast_(ast), toks_(tokens) {}

    InferResult run() {
        try {
            int t = infer_node(ast_.root);
            InferResult r;
            std::map<int, int> numbering;
            r.type = externalize(t, numbering);
            return r;
        } catch (FirstFailure& f) {
            InferResult r;
            r.error = std::move(f.report);
            return r;
        }
    }

private:
    const Ast& ast_;
    const std::vector<Token>& toks_;
    std::vector<TCell> cells_;
    std::vector<std::pair<std::string, Scheme>> env_;

    int mk(Tag tag, std::vector<int> args = {}) {
        cells_.push_back(TCell{tag, std::move(args), -1});
        return static_cast<int>(cells_.size()) - 1;
    }
    int fresh() { return mk(Tag::Var); }
    int t_int() { return mk(Tag::Int); }
    int t_bool() { return mk(Tag::Bool); }

    int resolve(int t) {
        while (cells_[static_cast<size_t>(t)].tag == Tag::Var &&
               cells_[static_cast<size_t>(t)].link >= 0) {
            int next = cells_[static_cast<size_t>(t)].link;
            // Path compression keeps chains short.
            int nn = cells_[static_cast<size_t>(next)].tag == Tag::Var
                         ? cells_[static_cast<size_t>(next)].link
                         : -1;
            if (nn >= 0) cells_[static_cast<size_t>(t)].link = nn;
            t = next;
        }
        return t;
    }

    bool occurs(int var, int t) {
        t = resolve(t);
        if (t == var) return true;
        for (int a : cells_[static_cast<size_t>(t)].args) {
            if (occurs(var, a)) return true;
        }
        return false;
    }

    bool unify(int a, int b) {
        a = resolve(a);
        b = resolve(b);
        if (a == b) return true;
        TCell& ca = cells_[static_cast<size_t>(a)];
        TCell& cb = cells_[static_cast<size_t>(b)];
        if (ca.tag == Tag::Var) {
            if (occurs(a, b)) return false;
            ca.link = b;
            return true;
        }
        if (cb.tag == Tag::Var) {
            if (occurs(b, a)) return false;
            cb.link = a;
            return true;
        }
        if (ca.tag != cb.tag) return false;
        if (ca.args.size() != cb.args.size()) return false;
        for (size_t i = 0; i < ca.args.size(); i++) {
            if (!unify(cells_[static_cast<size_t>(a)].args[i],
                       cells_[static_cast<size_t>(b)].args[i])) {
                return false;
            }
        }
        return true;
    }

    // Unifies the type inferred for `node` against what its context expects;
    // on failure, `node` takes the blame.
    void check(int actual, int expected, int node, const char* what = nullptr) {
        if (unify(actual, expected)) return;
        blame(node, actual, expected, what);
    }

    [[noreturn]] void blame(int node, int actual, int expected, const char* what) {
        TypeErrorReport rep;
        auto [s, e] = node_span(ast_, toks_, node);
        rep.blamed_start = s;
        rep.blamed_end = e;
        const AstNode& n = ast_.at(node);
        for (int t = n.first_token; t <= n.last_token; t++) rep.blamed_token_indices.push_back(t);
        std::map<int, int> numbering;
        rep.actual = externalize(actual, numbering);
        rep.expected = externalize(expected, numbering);
        rep.message = what ? std::string(what)
                           : "This expression has type " + to_string(rep.actual) +
                                 " but an expression was expected of type " +
                                 to_string(rep.expected);
        throw FirstFailure{std::move(rep)};
    }

    Type externalize(int t, std::map<int, int>& numbering) {
        t = resolve(t);
        const TCell& c = cells_[static_cast<size_t>(t)];
        switch (c.tag) {
            case Tag::Int: return Type::t_int();
            case Tag::Bool: return Type::t_bool();
            case Tag::Var: {
                auto it = numbering.find(t);
                if (it == numbering.end()) {
                    it = numbering.emplace(t, static_cast<int>(numbering.size())).first;
                }
                return Type::t_var(it->second);
            }
            case Tag::List: return Type::t_list(externalize(c.args[0], numbering));
            case Tag::Fun: {
                Type a = externalize(c.args[0], numbering);
                return Type::t_fun(std::move(a), externalize(c.args[1], numbering));
            }
            case Tag::Tuple: {
                std::vector<Type> elems;
                for (int a : c.args) elems.push_back(externalize(a, numbering));
                return Type::t_tuple(std::move(elems));
            }
        }
        return Type::t_int();
    }

    void free_vars(int t, std::set<int>& out) {
        t = resolve(t);
        const TCell& c = cells_[static_cast<size_t>(t)];
        if (c.tag == Tag::Var) {
            out.insert(t);
            return;
        }
        for (int a : c.args) free_vars(a, out);
    }

    Scheme generalize(int t) {
        std::set<int> in_env;
        for (auto& [name, sch] : env_) {
            std::set<int> fv;
            free_vars(sch.type, fv);
            for (int q : sch.qvars) fv.erase(resolve(q));
            in_env.insert(fv.begin(), fv.end());
        }
        std::set<int> fv;
        free_vars(t, fv);
        Scheme s;
        s.type = t;
        for (int v : fv) {
            if (!in_env.count(v)) s.qvars.push_back(v);
        }
        return s;
    }

    int instantiate(const Scheme& s) {
        if (s.qvars.empty()) return s.type;
        std::map<int, int> subst;
        for (int q : s.qvars) subst[resolve(q)] = fresh();
        return copy_subst(s.type, subst);
    }

    int copy_subst(int t, const std::map<int, int>& subst) {
        t = resolve(t);
        auto it = subst.find(t);
        if (it != subst.end()) return it->second;
        const TCell& c = cells_[static_cast<size_t>(t)];
        if (c.tag == Tag::Var) return t;
        std::vector<int> args;
        args.reserve(c.args.size());
        for (int a : c.args) args.push_back(copy_subst(a, subst));
        return mk(c.tag, std::move(args));
    }

    int lookup(int node) {
        const AstNode& n = ast_.at(node);
        for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
            if (it->first == n.name) return instantiate(it->second);
        }
        auto [s, e] = node_span(ast_, toks_, node);
        throw UnboundVariableError(n.name, s, e);
    }

    int infer_node(int node) {
        const AstNode& n = ast_.at(node);
        switch (n.kind) {
            case NodeKind::IntLit: return t_int();
            case NodeKind::BoolLit: return t_bool();
            case NodeKind::Var: return lookup(node);
            case NodeKind::Fun: return infer_fun(node);
            case NodeKind::App: return infer_app(node);
            case NodeKind::Let:
            case NodeKind::LetRec: return infer_let(node);
            case NodeKind::If: return infer_if(node);
            case NodeKind::Match: return infer_match(node);
            case NodeKind::ListLit: return infer_list(node);
            case NodeKind::Cons: return infer_cons(node);
            case NodeKind::BinOp: return infer_binop(node);
            case NodeKind::Tuple: return infer_tuple(node);
        }
        return t_int();
    }

    int infer_fun(int node) {
        const AstNode& n = ast_.at(node);
        size_t base = env_.size();
        std::vector<int> params;
        for (int i = 0; i < n.param_count; i++) {
            int v = fresh();
            params.push_back(v);
            env_.emplace_back(ast_.at(n.children[static_cast<size_t>(i)]).name,
                              Scheme{{}, v});
        }
        int body = infer_node(n.children.back());
        env_.resize(base);
        for (auto it = params.rbegin(); it != params.rend(); ++it) {
            body = mk(Tag::Fun, {*it, body});
        }
        return body;
    }

    int infer_app(int node) {
        const AstNode& n = ast_.at(node);
        int fn = infer_node(n.children[0]);
        int arg = infer_node(n.children[1]);
        int rfn = resolve(fn);
        const TCell& c = cells_[static_cast<size_t>(rfn)];
        if (c.tag == Tag::Fun) {
            check(arg, c.args[0], n.children[1]);
            return cells_[static_cast<size_t>(rfn)].args[1];
        }
        int ret = fresh();
        int want = mk(Tag::Fun, {arg, ret});
        if (c.tag == Tag::Var) {
            check(fn, want, node);  // occurs check is the only way to fail
            return ret;
        }
        blame(n.children[0], fn, want, nullptr);
    }

    int infer_let(int node) {
        const AstNode& n = ast_.at(node);
        bool rec = n.kind == NodeKind::LetRec;
        size_t base = env_.size();
        int self = -1;
        if (rec) {
            self = fresh();
            env_.emplace_back(n.name, Scheme{{}, self});
        }
        std::vector<int> params;
        for (int i = 0; i < n.param_count; i++) {
            int v = fresh();
            params.push_back(v);
            env_.emplace_back(ast_.at(n.children[static_cast<size_t>(1 + i)]).name,
                              Scheme{{}, v});
        }
        int rhs_node = n.children[static_cast<size_t>(1 + n.param_count)];
        int rhs = infer_node(rhs_node);
        int bound = rhs;
        for (auto it = params.rbegin(); it != params.rend(); ++it) {
            bound = mk(Tag::Fun, {*it, bound});
        }
        if (rec) check(bound, self, rhs_node);
        env_.resize(base);
        Scheme sch = generalize(bound);
        if (!n.has_body) return bound;
        env_.emplace_back(n.name, sch);
        int body = infer_node(n.children.back());
        env_.resize(base);
        return body;
    }

    int infer_if(int node) {
        const AstNode& n = ast_.at(node);
        int c = infer_node(n.children[0]);
        check(c, t_bool(), n.children[0]);
        int t = infer_node(n.children[1]);
        int e = infer_node(n.children[2]);
        check(e, t, n.children[2]);
        return t;
    }

    int infer_match(int node) {
        const AstNode& n = ast_.at(node);
        int scrut = infer_node(n.children[0]);
        int result = -1;
        for (size_t arm = 1; arm + 1 < n.children.size(); arm += 2) {
            int pat_node = n.children[arm];
            int body_node = n.children[arm + 1];
            size_t base = env_.size();
            int pat = infer_pattern(pat_node);
            check(pat, scrut, pat_node);
            int body = infer_node(body_node);
            if (result < 0) {
                result = body;
            } else {
                check(body, result, body_node);
            }
            env_.resize(base);
        }
        return result;
    }

    int infer_pattern(int node) {
        const AstNode& n = ast_.at(node);
        switch (n.kind) {
            case NodeKind::ListLit:
                return mk(Tag::List, {fresh()});
            case NodeKind::Var: {
                int v = fresh();
                if (n.name != "_") env_.emplace_back(n.name, Scheme{{}, v});
                return v;
            }
            case NodeKind::Cons: {
                int h = infer_pattern(n.children[0]);
                int t = infer_pattern(n.children[1]);
                check(t, mk(Tag::List, {h}), n.children[1]);
                return mk(Tag::List, {h});
            }
            default:
                break;
        }
        blame(node, infer_node(node), fresh(), "unsupported pattern");
    }

    int infer_list(int node) {
        const AstNode& n = ast_.at(node);
        if (n.children.empty()) return mk(Tag::List, {fresh()});
        int elem = infer_node(n.children[0]);
        for (size_t i = 1; i < n.children.size(); i++) {
            int e = infer_node(n.children[i]);
            check(e, elem, n.children[i]);
        }
        return mk(Tag::List, {elem});
    }

    int infer_cons(int node) {
        const AstNode& n = ast_.at(node);
        int h = infer_node(n.children[0]);
        int t = infer_node(n.children[1]);
        check(t, mk(Tag::List, {h}), n.children[1]);
        return mk(Tag::List, {h});
    }

    int infer_binop(int node) {
        const AstNode& n = ast_.at(node);
        const std::string& op = n.name;
        int l = infer_node(n.children[0]);
        if (op == "+" || op == "-" || op == "*" || op == "<" || op == "<=") {
            check(l, t_int(), n.children[0]);
            int r = infer_node(n.children[1]);
            check(r, t_int(), n.children[1]);
            return (op == "<" || op == "<=") ? t_bool() : t_int();
        }
        if (op == "&&" || op == "||") {
            check(l, t_bool(), n.children[0]);
            int r = infer_node(n.children[1]);
            check(r, t_bool(), n.children[1]);
            return t_bool();
        }
        // structural equality: both sides must agree
        int r = infer_node(n.children[1]);
        check(r, l, n.children[1]);
        return t_bool();
    }

    int infer_tuple(int node) {
        const AstNode& n = ast_.at(node);
        std::vector<int> elems;
        for (int c : n.children) elems.push_back(infer_node(c));
        return mk(Tag::Tuple, std::move(elems));
    }
};

}  // namespace

InferResult infer(const Ast& ast, const std::vector<Token>& tokens) {
    return Infer(ast, tokens).run();
}

LabelVector compiler_blame(const std::string& source) {
    auto tokens = tokenize(source);
    Ast ast = parse(tokens);
    InferResult r = infer(ast, tokens);
    if (r.ok()) throw WellTypedError();
    LabelVector labels(tokens.size(), 0);
    for (int idx : r.error->blamed_token_indices) labels[static_cast<size_t>(idx)] = 1;
    return labels;
}

}  // namespace blamelab::lang
