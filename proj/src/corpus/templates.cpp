#include <cassert>
#include <sstream>

#include "blamelab/corpus/corpus.hpp"
#include "blamelab/lang/infer.hpp"
#include "blamelab/lang/lexer.hpp"

namespace blamelab::corpus {

namespace {

constexpr int kMaxTokens = 64;

const std::vector<std::string> kFunNames = {
    "go", "aux", "step", "walk", "scan", "count", "reduce", "gather",
    "apply", "helper", "combine", "total", "visit", "probe", "crunch",
};
const std::vector<std::string> kVarNames = {
    "x", "y", "z", "n", "m", "k", "a", "b", "c", "v", "w", "u", "p", "q", "r", "s",
};

struct Names {
    std::vector<std::string> funs, vars;
    explicit Names(Rng& rng) : funs(kFunNames), vars(kVarNames) {
        rng.shuffle(funs);
        rng.shuffle(vars);
    }
    std::string fun(size_t i) const { return funs[i]; }
    std::string var(size_t i) const { return vars[i]; }
};

std::string int_list(Rng& rng, int len) {
    std::string s = "[";
    for (int i = 0; i < len; i++) {
        if (i) s += "; ";
        s += std::to_string(rng.range(0, 9));
    }
    return s + "]";
}

std::string gen_list_fold(Rng& rng) {
    Names nm(rng);
    std::string f = nm.fun(0), xs = nm.var(0), h = nm.var(1), t = nm.var(2);
    std::string op = rng.chance(0.7) ? "+" : "*";
    std::ostringstream s;
    if (rng.chance(0.35)) {
        // accumulator form
        std::string acc = nm.var(3);
        s << "let rec " << f << " " << acc << " " << xs << " =\n";
        s << "  match " << xs << " with\n";
        s << "  | [] -> " << acc << "\n";
        s << "  | " << h << " :: " << t << " -> " << f << " (" << acc << " " << op
          << " " << h << ") " << t << "\n";
        s << f << " " << rng.range(0, 9) << " " << int_list(rng, rng.range(2, 4));
    } else {
        s << "let rec " << f << " " << xs << " =\n";
        s << "  match " << xs << " with\n";
        s << "  | [] -> " << rng.range(0, 9) << "\n";
        if (rng.chance(0.4)) s << "  | " << h << " :: [] -> " << h << "\n";
        s << "  | " << h << " :: " << t << " -> " << h << " " << op << " " << f
          << " " << t << "\n";
        s << f << " " << int_list(rng, rng.range(2, 4));
    }
    return s.str();
}

std::string gen_pairwise_zip(Rng& rng) {
    Names nm(rng);
    std::string z = nm.fun(0), xs = nm.var(0), ys = nm.var(1), h1 = nm.var(2),
                t1 = nm.var(3), h2 = nm.var(4), t2 = nm.var(5);
    bool tuple = rng.chance(0.5);
    std::string combine = tuple ? "(" + h1 + ", " + h2 + ")"
                                : "(" + h1 + " " + (rng.chance(0.5) ? "+" : "*") + " " + h2 + ")";
    std::ostringstream s;
    s << "let rec " << z << " " << xs << " " << ys << " =\n";
    s << "  match " << xs << " with\n";
    s << "  | [] -> []\n";
    s << "  | " << h1 << " :: " << t1 << " ->\n";
    s << "    (match " << ys << " with\n";
    s << "     | [] -> []\n";
    s << "     | " << h2 << " :: " << t2 << " -> " << combine << " :: " << z << " "
      << t1 << " " << t2 << ")\n";
    int len = rng.range(2, 3);
    s << z << " " << int_list(rng, len) << " " << int_list(rng, len);
    return s.str();
}

std::string gen_arith_helper(Rng& rng) {
    Names nm(rng);
    std::string f = nm.fun(0), n = nm.var(0);
    std::string op = rng.chance(0.6) ? "*" : "+";
    int base = rng.range(1, 9), step = rng.range(1, 3), arg = rng.range(3, 9);
    std::ostringstream s;
    s << "let rec " << f << " " << n << " =\n";
    s << "  if " << n << " <= 0 then " << base << "\n";
    s << "  else " << n << " " << op << " " << f << " (" << n << " - " << step << ")\n";
    if (rng.chance(0.4)) {
        std::string g = nm.fun(1), m = nm.var(1);
        s << "let " << g << " " << m << " = " << f << " " << m << " "
          << (rng.chance(0.5) ? "+" : "-") << " " << rng.range(1, 9) << "\n";
        s << g << " " << arg;
    } else {
        s << f << " " << arg;
    }
    return s.str();
}

std::string gen_cond_chain(Rng& rng) {
    Names nm(rng);
    std::string f = nm.fun(0), a = nm.var(0), b = nm.var(1);
    auto cmp = [&] {
        static const std::vector<std::string> ops = {"<", "<=", "="};
        return rng.pick(ops);
    };
    std::ostringstream s;
    if (rng.chance(0.3)) {
        // boolean-guard flavor
        std::string p = nm.var(2);
        s << "let " << f << " " << p << " " << a << " =\n";
        s << "  if " << p << " " << (rng.chance(0.5) ? "&&" : "||") << " " << a
          << " " << cmp() << " " << rng.range(0, 9) << "\n";
        s << "  then " << a << " + " << rng.range(1, 9) << "\n";
        s << "  else " << rng.range(0, 9) << "\n";
        s << f << " " << (rng.chance(0.5) ? "true" : "false") << " " << rng.range(0, 9);
    } else {
        s << "let " << f << " " << a << " " << b << " =\n";
        s << "  if " << a << " " << cmp() << " " << b << " then " << a << " "
          << (rng.chance(0.5) ? "-" : "+") << " " << rng.range(1, 9) << "\n";
        if (rng.chance(0.5)) {
            s << "  else if " << a << " " << cmp() << " " << rng.range(0, 9) << " then "
              << b << " * " << rng.range(2, 5) << "\n";
        }
        s << "  else " << rng.range(0, 9) << "\n";
        s << f << " " << rng.range(0, 9) << " " << rng.range(0, 9);
    }
    return s.str();
}

std::string gen_higher_order_map(Rng& rng) {
    Names nm(rng);
    std::string m = nm.fun(0), g = nm.var(0), xs = nm.var(1), h = nm.var(2),
                t = nm.var(3), f = nm.fun(1), v = nm.var(4);
    std::ostringstream s;
    s << "let rec " << m << " " << g << " " << xs << " =\n";
    s << "  match " << xs << " with\n";
    s << "  | [] -> []\n";
    s << "  | " << h << " :: " << t << " -> " << g << " " << h << " :: " << m << " "
      << g << " " << t << "\n";
    s << "let " << f << " " << v << " = " << v << " "
      << (rng.chance(0.5) ? "+" : "*") << " " << rng.range(1, 9) << "\n";
    s << m << " " << f << " " << int_list(rng, rng.range(2, 4));
    return s.str();
}

std::string gen_list_build(Rng& rng) {
    Names nm(rng);
    std::string f = nm.fun(0), n = nm.var(0);
    int step = rng.range(1, 2), arg = rng.range(3, 8);
    std::string head = rng.chance(0.4)
                           ? "(" + n + " * " + std::to_string(rng.range(2, 4)) + ")"
                           : n;
    std::ostringstream s;
    s << "let rec " << f << " " << n << " =\n";
    s << "  if " << n << " <= 0 then []\n";
    s << "  else " << head << " :: " << f << " (" << n << " - " << step << ")\n";
    s << f << " " << arg;
    return s.str();
}

}  // namespace

const std::vector<std::string>& all_families() {
    static const std::vector<std::string> fams = {
        "list_fold", "pairwise_zip", "arith_helper",
        "cond_chain", "higher_order_map", "list_build",
    };
    return fams;
}

std::string generate_seed_program(const std::string& family, uint64_t rng_seed) {
    Rng rng(rng_seed);
    std::string src;
    if (family == "list_fold") src = gen_list_fold(rng);
    else if (family == "pairwise_zip") src = gen_pairwise_zip(rng);
    else if (family == "arith_helper") src = gen_arith_helper(rng);
    else if (family == "cond_chain") src = gen_cond_chain(rng);
    else if (family == "higher_order_map") src = gen_higher_order_map(rng);
    else if (family == "list_build") src = gen_list_build(rng);
    else throw std::invalid_argument("unknown template family: " + family);

    // Templates are well-typed by construction; anything else is a bug here.
    auto tokens = lang::tokenize(src);
    if (tokens.size() > kMaxTokens) {
        throw std::logic_error("template emitted an oversized program: " + family);
    }
    auto ast = lang::parse(tokens);
    if (!lang::infer(ast, tokens).ok()) {
        throw std::logic_error("template emitted an ill-typed program: " + family + "\n" + src);
    }
    return src;
}

}  // namespace blamelab::corpus
