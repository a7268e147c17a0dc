#pragma once

#include <random>
#include <vector>

#include "indpoly/graph.hpp"

// Test-only graph generators. The labeled enumeration walks every edge
// subset of the complete graph on n vertices; feasible for n <= 7.

namespace testutil {

using indpoly::Graph;
using indpoly::VertexMask;

inline std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> p;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) p.emplace_back(u, v);
    return p;
}

inline Graph graph_from_edge_mask(int n, std::uint64_t mask,
                                  const std::vector<std::pair<int, int>>& pairs) {
    std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) {
            auto [u, v] = pairs[i];
            rows[u] |= indpoly::bit(v);
            rows[v] |= indpoly::bit(u);
        }
    return Graph::from_adjacency(std::move(rows));
}

// Calls fn(g) for every labeled graph on exactly n vertices.
template <typename F>
void for_each_labeled_graph(int n, F&& fn) {
    auto pairs = all_pairs(n);
    std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask)
        fn(graph_from_edge_mask(n, mask, pairs));
}

inline Graph random_graph(std::mt19937_64& rng, int n, double edge_prob) {
    std::bernoulli_distribution flip(edge_prob);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Random order in [1, max_n] and a random density.
inline Graph random_graph(std::mt19937_64& rng, int max_n) {
    std::uniform_int_distribution<int> pick_n(1, max_n);
    std::uniform_real_distribution<double> pick_p(0.05, 0.95);
    return random_graph(rng, pick_n(rng), pick_p(rng));
}

}  // namespace testutil
