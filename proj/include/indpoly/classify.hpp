#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "indpoly/enumerate.hpp"
#include "indpoly/graph.hpp"

namespace indpoly {

// All maximal independent sets share one cardinality. Scans the maximal
// sets and stops as soon as two sizes appear.
inline bool is_well_covered(const Graph& g) {
    int seen = -1;
    bool uniform = true;
    maximal_independent_sets(g, [&](VertexMask m) {
        int size = popcount(m);
        if (seen < 0) {
            seen = size;
            return true;
        }
        if (size != seen) {
            uniform = false;
            return false;
        }
        return true;
    });
    return uniform;
}

// Well-covered with at least two vertices, and still well-covered after
// deleting any one vertex.
inline bool is_one_well_covered(const Graph& g) {
    if (g.n() < 2 || !is_well_covered(g)) return false;
    for (int v = 0; v < g.n(); ++v)
        if (!is_well_covered(delete_vertex(g, v))) return false;
    return true;
}

namespace detail {

// Fixed-width bitset over an index range, one word per 64 entries.
struct IndexBits {
    std::vector<std::uint64_t> w;
    explicit IndexBits(std::size_t n) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool intersects(const IndexBits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    void or_with(const IndexBits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }
};

inline std::vector<VertexMask> maximum_independent_sets(const Graph& g,
                                                        int alpha) {
    std::vector<VertexMask> out;
    for_each_independent_set(g, [&](VertexMask s, VertexMask, int size) {
        if (size == alpha) out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace detail

// Membership in W2: every two disjoint independent sets (empty sets
// included) lie inside two disjoint maximum independent sets. Decided by
// direct quantifier sweep; a cross-validation oracle, not a production
// path.
inline bool in_class_w2(const Graph& g, int size_limit = 16) {
    if (g.n() > size_limit)
        throw std::invalid_argument("in_class_w2: graph order exceeds limit");
    // An isolated vertex lies in every maximum independent set, so two
    // disjoint maximum sets cannot exist and already the pair (∅,∅) fails.
    if (g.has_isolated_vertex()) return false;

    int alpha = independence_number(g);
    std::vector<VertexMask> maximums = detail::maximum_independent_sets(g, alpha);
    std::size_t m = maximums.size();

    std::vector<detail::IndexBits> compat(m, detail::IndexBits(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if ((maximums[i] & maximums[j]) == 0) compat[i].set(j);

    std::vector<VertexMask> sets;
    for_each_independent_set(g, [&](VertexMask s, VertexMask, int) {
        sets.push_back(s);
        return true;
    });

    // containers[s] = maximums containing set s; reach[s] = maximums
    // disjoint from at least one of them.
    std::vector<detail::IndexBits> containers, reach;
    containers.reserve(sets.size());
    reach.reserve(sets.size());
    for (VertexMask s : sets) {
        detail::IndexBits in(m), rc(m);
        for (std::size_t i = 0; i < m; ++i)
            if ((s & ~maximums[i]) == 0) {
                in.set(i);
                rc.or_with(compat[i]);
            }
        containers.push_back(std::move(in));
        reach.push_back(std::move(rc));
    }

    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a; b < sets.size(); ++b) {
            if (sets[a] & sets[b]) continue;
            if (!reach[a].intersects(containers[b])) return false;
        }
    return true;
}

// Witness pairs for the extension characterization: all unordered pairs of
// disjoint independent sets (B1, B2), both disjoint from A, such that
// A∪B1 and A∪B2 are maximum independent sets. Equivalently, pairs of
// maximum sets M1, M2 ⊇ A with M1 ∩ M2 = A; B_i = M_i \ A.
inline std::vector<std::pair<VertexMask, VertexMask>> extension_witnesses(
    const Graph& g, VertexMask a, int size_limit = 16) {
    if (g.n() > size_limit)
        throw std::invalid_argument(
            "extension_witnesses: graph order exceeds limit");
    a &= g.vertex_mask();
    if (!is_independent(g, a))
        throw std::invalid_argument("extension_witnesses: A is not independent");
    int alpha = independence_number(g);
    if (popcount(a) == alpha)
        throw std::invalid_argument(
            "extension_witnesses: A is already a maximum independent set");

    std::vector<VertexMask> above;
    for (VertexMask mis : detail::maximum_independent_sets(g, alpha))
        if ((a & ~mis) == 0) above.push_back(mis);

    std::vector<std::pair<VertexMask, VertexMask>> out;
    for (std::size_t i = 0; i < above.size(); ++i)
        for (std::size_t j = i + 1; j < above.size(); ++j)
            if ((above[i] & above[j]) == a)
                out.emplace_back(above[i] & ~a, above[j] & ~a);
    return out;
}

// The predicate of the extension characterization theorem: every
// non-maximum independent set has at least one witness pair.
inline bool has_extension_property(const Graph& g, int size_limit = 16) {
    if (g.n() > size_limit)
        throw std::invalid_argument(
            "has_extension_property: graph order exceeds limit");
    int alpha = independence_number(g);
    std::vector<VertexMask> maximums = detail::maximum_independent_sets(g, alpha);

    bool ok = true;
    for_each_independent_set(g, [&](VertexMask s, VertexMask, int size) {
        if (size == alpha) return true;
        bool found = false;
        for (std::size_t i = 0; i < maximums.size() && !found; ++i) {
            if (s & ~maximums[i]) continue;
            for (std::size_t j = i + 1; j < maximums.size(); ++j)
                if ((s & ~maximums[j]) == 0 &&
                    (maximums[i] & maximums[j]) == s) {
                    found = true;
                    break;
                }
        }
        if (!found) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

struct ClassifyOptions {
    bool compute_w2 = false;
    int w2_size_limit = 16;
    int lambda_size_limit = 24;
};

struct ClassificationRecord {
    int n = 0;
    int alpha = 0;
    bool connected = false;
    bool has_isolated = false;
    bool well_covered = false;
    bool very_well_covered = false;
    bool one_well_covered = false;
    std::optional<bool> in_w2;
    Rational lambda_star;  // 0 with an isolated vertex, +inf for the empty graph
};

inline ClassificationRecord classify(const Graph& g,
                                     const ClassifyOptions& opts = {}) {
    if (g.n() > opts.lambda_size_limit)
        throw std::invalid_argument(
            "classify: graph order " + std::to_string(g.n()) +
            " exceeds the lambda* size limit " +
            std::to_string(opts.lambda_size_limit));
    ClassificationRecord r;
    r.n = g.n();
    r.alpha = independence_number(g);
    r.connected = is_connected(g);
    r.has_isolated = g.has_isolated_vertex();
    r.well_covered = is_well_covered(g);
    r.very_well_covered =
        r.well_covered && !r.has_isolated && r.n == 2 * r.alpha;
    r.one_well_covered = r.well_covered && is_one_well_covered(g);
    r.lambda_star = lambda_star(g, opts.lambda_size_limit);
    if (opts.compute_w2) r.in_w2 = in_class_w2(g, opts.w2_size_limit);
    return r;
}

}  // namespace indpoly
