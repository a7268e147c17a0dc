#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "indpoly/util.hpp"

namespace indpoly {

// Immutable simple graph on at most 64 vertices. Adjacency is stored as one
// bit row per vertex so neighborhood unions and independence tests are
// single-word operations. Every constructor validates symmetry,
// irreflexivity and the vertex range.
class Graph {
  public:
    static constexpr int max_vertices = 64;

    Graph() = default;

    Graph(int n, const std::vector<std::pair<int, int>>& edges)
        : n_(check_order(n)), adj_(static_cast<std::size_t>(n), 0) {
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw std::out_of_range("edge endpoint out of range");
            if (u == v) throw std::invalid_argument("self-loop rejected");
            adj_[u] |= bit(v);
            adj_[v] |= bit(u);
        }
        validate();
    }

    static Graph from_adjacency(std::vector<VertexMask> rows) {
        Graph g;
        g.n_ = check_order(static_cast<int>(rows.size()));
        g.adj_ = std::move(rows);
        g.validate();
        return g;
    }

    int n() const { return n_; }
    VertexMask vertex_mask() const { return low_mask(n_); }
    VertexMask adjacency(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return (adj_[u] & bit(v)) != 0; }
    int degree(int v) const { return popcount(adj_[v]); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for_each_bit(adj_[u] & ~low_mask(u + 1),
                         [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    bool has_isolated_vertex() const {
        for (int v = 0; v < n_; ++v)
            if (adj_[v] == 0) return true;
        return false;
    }

  private:
    static int check_order(int n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        if (n > max_vertices)
            throw std::invalid_argument(
                "graph exceeds the supported limit of 64 vertices");
        return n;
    }

    void validate() const {
        VertexMask all = low_mask(n_);
        for (int v = 0; v < n_; ++v) {
            if (adj_[v] & ~all)
                throw std::invalid_argument("adjacency row out of range");
            if (adj_[v] & bit(v))
                throw std::invalid_argument("irreflexivity violated");
        }
        for (int v = 0; v < n_; ++v)
            for_each_bit(adj_[v], [&](int u) {
                if (!(adj_[u] & bit(v)))
                    throw std::invalid_argument("symmetry violated");
            });
    }

    int n_{0};
    std::vector<VertexMask> adj_;
};

// --- named families ------------------------------------------------------

inline Graph empty_graph(int n) { return Graph(n, {}); }

inline Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("K(n) requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph path(int n) {
    if (n < 1) throw std::invalid_argument("P(n) requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("C(n) requires n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(n - 1, 0);
    return Graph(n, e);
}

// Star(m) = K_{1,m}: center is vertex 0, leaves are 1..m.
inline Graph star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("Star(m) requires m >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph(leaves + 1, e);
}

// --- operations -----------------------------------------------------------

// Disjoint union; h's vertices are relabeled by offset g.n().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.n() + h.n();
    if (n > Graph::max_vertices)
        throw std::invalid_argument("union exceeds the 64-vertex limit");
    std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < g.n(); ++v) rows[v] = g.adjacency(v);
    for (int v = 0; v < h.n(); ++v)
        rows[g.n() + v] = h.adjacency(v) << g.n();
    return Graph::from_adjacency(std::move(rows));
}

// Corona g∘{H_v}: g's vertices keep their labels; the copy of H_v occupies a
// contiguous block after all of g, in vertex order, and v is joined to every
// vertex of its block.
inline Graph corona(const Graph& g, std::span<const Graph> family) {
    if (static_cast<int>(family.size()) != g.n())
        throw std::invalid_argument(
            "corona family size must equal the vertex count");
    long long total = g.n();
    for (const Graph& h : family) total += h.n();
    if (total > Graph::max_vertices)
        throw std::invalid_argument("corona exceeds the 64-vertex limit");

    std::vector<VertexMask> rows(static_cast<std::size_t>(total), 0);
    for (int v = 0; v < g.n(); ++v) rows[v] = g.adjacency(v);
    int base = g.n();
    for (int v = 0; v < g.n(); ++v) {
        const Graph& h = family[v];
        for (int w = 0; w < h.n(); ++w) {
            rows[base + w] = (h.adjacency(w) << base) | bit(v);
            rows[v] |= bit(base + w);
        }
        base += h.n();
    }
    return Graph::from_adjacency(std::move(rows));
}

// Uniform corona g∘h: one copy of h per vertex of g.
inline Graph corona(const Graph& g, const Graph& h) {
    std::vector<Graph> family(static_cast<std::size_t>(g.n()), h);
    return corona(g, std::span<const Graph>(family));
}

// Induced subgraph on V minus {v}; remaining vertices keep their relative
// order.
inline Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("vertex out of range");
    std::vector<VertexMask> rows;
    rows.reserve(static_cast<std::size_t>(g.n()) - 1);
    VertexMask keep_low = low_mask(v);
    for (int u = 0; u < g.n(); ++u) {
        if (u == v) continue;
        VertexMask row = g.adjacency(u);
        rows.push_back((row & keep_low) | ((row >> (v + 1)) << v));
    }
    return Graph::from_adjacency(std::move(rows));
}

// Induced subgraph on the given vertex mask, order-preserving relabeling.
inline Graph induced_subgraph(const Graph& g, VertexMask keep) {
    std::vector<int> newIndex(static_cast<std::size_t>(g.n()), -1);
    int m = 0;
    for_each_bit(keep & g.vertex_mask(), [&](int v) { newIndex[v] = m++; });
    std::vector<VertexMask> rows(static_cast<std::size_t>(m), 0);
    for_each_bit(keep & g.vertex_mask(), [&](int v) {
        for_each_bit(g.adjacency(v) & keep,
                     [&](int u) { rows[newIndex[v]] |= bit(newIndex[u]); });
    });
    return Graph::from_adjacency(std::move(rows));
}

// N(A) = {v : N(v) ∩ A ≠ ∅}; may intersect A when A is not independent.
inline VertexMask neighborhood(const Graph& g, VertexMask a) {
    VertexMask out = 0;
    for_each_bit(a & g.vertex_mask(),
                 [&](int v) { out |= g.adjacency(v); });
    return out;
}

inline VertexMask closed_neighborhood(const Graph& g, VertexMask a) {
    return neighborhood(g, a) | (a & g.vertex_mask());
}

// Connected components as vertex masks, ordered by their smallest vertex.
inline std::vector<VertexMask> components(const Graph& g) {
    std::vector<VertexMask> out;
    VertexMask seen = 0;
    VertexMask all = g.vertex_mask();
    while (seen != all) {
        VertexMask comp = bit(lowest_bit(all & ~seen));
        for (;;) {
            VertexMask grown = comp | neighborhood(g, comp);
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        seen |= comp;
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return components(g).size() <= 1;
}

inline bool is_independent(const Graph& g, VertexMask s) {
    return (neighborhood(g, s) & s) == 0;
}

}  // namespace indpoly
