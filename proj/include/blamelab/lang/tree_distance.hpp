#pragma once

#include <utility>

#include "blamelab/lang/ast.hpp"

namespace blamelab::lang {

// Undirected tree over token indices derived from the syntax tree: each node
// is represented by a head token (leaf token for literals/identifiers, first
// non-paren structural token otherwise, first child's head for bare
// applications); remaining structural tokens hang off their node's head.
// Always has exactly token_count - 1 edges, each stored as (min, max).
std::vector<std::pair<int, int>> token_tree_edges(const Ast& ast,
                                                  const std::vector<Token>& tokens);

// Pairwise path lengths (edge counts) in the token tree. Symmetric, zero
// diagonal, satisfies the triangle inequality.
std::vector<std::vector<int>> tree_distance_matrix(const Ast& ast,
                                                   const std::vector<Token>& tokens);

}  // namespace blamelab::lang
