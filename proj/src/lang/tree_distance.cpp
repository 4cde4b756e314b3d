#include "blamelab/lang/tree_distance.hpp"

#include <algorithm>
#include <queue>

namespace blamelab::lang {

std::vector<std::pair<int, int>> token_tree_edges(const Ast& ast,
                                                  const std::vector<Token>& tokens) {
    const int n_tokens = ast.token_count;
    std::vector<std::pair<int, int>> edges;
    if (n_tokens <= 1) return edges;

    auto is_paren = [&](int t) {
        const std::string& s = tokens[static_cast<size_t>(t)].text;
        return s == "(" || s == ")";
    };

    // The parser appends nodes children-first, so one forward pass resolves
    // every head before its parent needs it.
    std::vector<int> head(ast.nodes.size(), -1);
    for (size_t id = 0; id < ast.nodes.size(); id++) {
        const AstNode& n = ast.at(static_cast<int>(id));
        if (n.leaf_token >= 0) {
            head[id] = n.leaf_token;
            continue;
        }
        int h = -1;
        for (int t : n.structural) {
            if (is_paren(t)) continue;
            if (h < 0 || t < h) h = t;
        }
        if (h < 0) h = head[static_cast<size_t>(n.children[0])];
        head[id] = h;
    }

    for (size_t id = 0; id < ast.nodes.size(); id++) {
        const AstNode& n = ast.at(static_cast<int>(id));
        int h = head[id];
        for (int t : n.structural) {
            if (t != h) edges.emplace_back(std::min(t, h), std::max(t, h));
        }
        for (int c : n.children) {
            int hc = head[static_cast<size_t>(c)];
            if (hc != h) edges.emplace_back(std::min(hc, h), std::max(hc, h));
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<std::vector<int>> tree_distance_matrix(const Ast& ast,
                                                   const std::vector<Token>& tokens) {
    const int n = ast.token_count;
    std::vector<std::vector<int>> dist(static_cast<size_t>(n),
                                       std::vector<int>(static_cast<size_t>(n), 0));
    if (n <= 1) return dist;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [a, b] : token_tree_edges(ast, tokens)) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    for (int s = 0; s < n; s++) {
        auto& row = dist[static_cast<size_t>(s)];
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::queue<int> q;
        q.push(s);
        seen[static_cast<size_t>(s)] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[static_cast<size_t>(u)]) {
                if (!seen[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    row[static_cast<size_t>(v)] = row[static_cast<size_t>(u)] + 1;
                    q.push(v);
                }
            }
        }
    }
    return dist;
}

}  // namespace blamelab::lang
