#pragma once

#include <string>
#include <vector>

namespace blamelab::lang {

// Resolved monotype, detached from the inference engine's internal state.
// Var ids are canonical (numbered by first occurrence, printed 'a, 'b, ...).
struct Type {
    enum class Tag : uint8_t { Int, Bool, List, Fun, Tuple, Var };
    Tag tag = Tag::Int;
    std::vector<Type> args;  // List: 1, Fun: 2 (arg, ret), Tuple: n
    int var = 0;

    static Type t_int() { return Type{Tag::Int, {}, 0}; }
    static Type t_bool() { return Type{Tag::Bool, {}, 0}; }
    static Type t_list(Type elem) { return Type{Tag::List, {std::move(elem)}, 0}; }
    static Type t_fun(Type a, Type r) { return Type{Tag::Fun, {std::move(a), std::move(r)}, 0}; }
    static Type t_tuple(std::vector<Type> elems) { return Type{Tag::Tuple, std::move(elems), 0}; }
    static Type t_var(int id) { return Type{Tag::Var, {}, id}; }
};

bool operator==(const Type& a, const Type& b);
inline bool operator!=(const Type& a, const Type& b) { return !(a == b); }

// OCaml-style rendering: int, bool, int list, 'a -> 'b, int * bool.
std::string to_string(const Type& t);

}  // namespace blamelab::lang
