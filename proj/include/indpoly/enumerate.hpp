#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/util.hpp"

namespace indpoly {

// Counts of independent sets by size: coeffs[k] = number of independent
// sets of cardinality k, exact. The degree is the independence number.
struct CoefficientSequence {
    std::vector<BigInt> coeffs;

    int alpha() const { return static_cast<int>(coeffs.size()) - 1; }
    IntPolynomial to_polynomial() const { return IntPolynomial(coeffs); }

    friend bool operator==(const CoefficientSequence& a,
                           const CoefficientSequence& b) {
        return a.coeffs == b.coeffs;
    }
};

namespace detail {

// Coefficient vectors during counting, lowest degree first, no trailing
// zeros (counting polynomials never have interior zeros).
using CountVec = std::vector<BigInt>;

inline CountVec cv_mul(const CountVec& a, const CountVec& b) {
    CountVec c(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Memoized vertex-decomposition counter over the subset lattice of one
// fixed parent graph: count(M) = count(M - v) + x * count(M - N[v]),
// branching on a maximum-degree vertex of the residual graph, with
// component factorization before every branch. The memo key is the
// residual vertex mask; the cache clears itself when full.
class IndependenceCounter {
  public:
    explicit IndependenceCounter(const Graph& g) : g_(g) {}

    CountVec count(VertexMask m) {
        if (m == 0) return {BigInt(1)};
        // Split into connected components of the residual graph; counts of
        // a disjoint union multiply.
        CountVec result{BigInt(1)};
        VertexMask rest = m;
        while (rest) {
            VertexMask comp = bit(lowest_bit(rest));
            for (;;) {
                VertexMask grown = comp;
                for_each_bit(comp, [&](int v) { grown |= g_.adjacency(v) & m; });
                if (grown == comp) break;
                comp = grown;
            }
            rest &= ~comp;
            CountVec part = count_component(comp);
            result = result.size() == 1 && result[0] == 1
                         ? std::move(part)
                         : cv_mul(result, part);
        }
        return result;
    }

  private:
    CountVec count_component(VertexMask m) {
        int size = popcount(m);
        if (size == 1) return {BigInt(1), BigInt(1)};
        auto it = memo_.find(m);
        if (it != memo_.end()) return it->second;

        int v = -1, best_deg = -1;
        for_each_bit(m, [&](int u) {
            int d = popcount(g_.adjacency(u) & m);
            if (d > best_deg) {
                best_deg = d;
                v = u;
            }
        });

        CountVec without = count(m & ~bit(v));
        CountVec with = count(m & ~(g_.adjacency(v) | bit(v)));
        CountVec total(std::max(without.size(), with.size() + 1), BigInt(0));
        for (std::size_t i = 0; i < without.size(); ++i) total[i] = without[i];
        for (std::size_t i = 0; i < with.size(); ++i) total[i + 1] += with[i];

        if (memo_.size() >= memo_capacity) memo_.clear();
        memo_.emplace(m, total);
        return total;
    }

    static constexpr std::size_t memo_capacity = std::size_t{1} << 20;
    const Graph& g_;
    std::unordered_map<VertexMask, CountVec> memo_;
};

}  // namespace detail

// Exact coefficient sequence of the independence polynomial.
inline CoefficientSequence independence_coefficients(const Graph& g) {
    detail::IndependenceCounter counter(g);
    return CoefficientSequence{counter.count(g.vertex_mask())};
}

// Independent oracle: walks all 2^n subsets and tests independence
// directly against the adjacency rows. Shares no code with the memoized
// counter. Counts fit in 64 bits for the supported range.
inline CoefficientSequence brute_force_coefficients(const Graph& g) {
    if (g.n() > 24)
        throw std::invalid_argument(
            "brute_force_coefficients supports n <= 24");
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(g.n()) + 1, 0);
    VertexMask full = g.vertex_mask();
    for (VertexMask s = 0;; ++s) {
        bool independent = true;
        for (VertexMask rest = s; rest; rest &= rest - 1) {
            if (g.adjacency(lowest_bit(rest)) & s) {
                independent = false;
                break;
            }
        }
        if (independent) ++tally[static_cast<std::size_t>(popcount(s))];
        if (s == full) break;
    }
    while (tally.size() > 1 && tally.back() == 0) tally.pop_back();
    CoefficientSequence out;
    out.coeffs.reserve(tally.size());
    for (auto c : tally) out.coeffs.emplace_back(static_cast<unsigned long>(c));
    return out;
}

// Branch-and-bound maximum independent set size; branches on a maximum
// degree vertex of the residual graph.
inline int independence_number(const Graph& g) {
    int best = 0;
    auto rec = [&](auto&& self, int size, VertexMask cand) -> void {
        if (size + popcount(cand) <= best) return;
        if (cand == 0) {
            best = size;
            return;
        }
        int v = -1, best_deg = -1;
        for_each_bit(cand, [&](int u) {
            int d = popcount(g.adjacency(u) & cand);
            if (d > best_deg) {
                best_deg = d;
                v = u;
            }
        });
        self(self, size + 1, cand & ~(g.adjacency(v) | bit(v)));
        self(self, size, cand & ~bit(v));
    };
    rec(rec, 0, g.vertex_mask());
    return best;
}

namespace detail {

// Bron–Kerbosch over non-neighborhoods, candidates processed ascending,
// no pivot: leaves appear in lexicographic order of the sorted vertex
// lists. A subtree is abandoned when some excluded vertex has no
// remaining candidate neighbor (it would stay addable forever).
template <typename Visitor>
bool mis_rec(const Graph& g, VertexMask r, VertexMask p, VertexMask x,
             Visitor& visit) {
    if (p == 0 && x == 0) return visit(r);
    for (VertexMask xs = x; xs; xs &= xs - 1)
        if ((g.adjacency(lowest_bit(xs)) & p) == 0) return true;
    while (p) {
        int v = lowest_bit(p);
        if (!mis_rec(g, r | bit(v), p & ~(g.adjacency(v) | bit(v)),
                     x & ~g.adjacency(v), visit))
            return false;
        p &= ~bit(v);
        x |= bit(v);
    }
    return true;
}

}  // namespace detail

// Emits every maximal independent set exactly once, in lexicographic order
// of the sorted vertex lists. The visitor returns false to stop early.
template <typename Visitor>
bool maximal_independent_sets(const Graph& g, Visitor&& visit) {
    return detail::mis_rec(g, 0, g.vertex_mask(), 0, visit);
}

inline std::vector<VertexMask> collect_maximal_independent_sets(const Graph& g) {
    std::vector<VertexMask> out;
    maximal_independent_sets(g, [&](VertexMask m) {
        out.push_back(m);
        return true;
    });
    return out;
}

// Visits every independent set contained in `allowed` exactly once,
// including the empty set, in ascending-insertion order. The visitor
// receives (set, N(set), |set|) and returns false to stop. `max_size`
// bounds the recursion depth.
template <typename Visitor>
bool for_each_independent_set(const Graph& g, Visitor&& visit,
                              VertexMask allowed, int max_size) {
    if (!visit(VertexMask{0}, VertexMask{0}, 0)) return false;
    if (max_size == 0) return true;
    auto rec = [&](auto&& self, VertexMask s, VertexMask nbrs, int size,
                   VertexMask cand) -> bool {
        while (cand) {
            int v = lowest_bit(cand);
            cand &= cand - 1;
            VertexMask s2 = s | bit(v);
            VertexMask nb2 = nbrs | g.adjacency(v);
            if (!visit(s2, nb2, size + 1)) return false;
            if (size + 1 < max_size &&
                !self(self, s2, nb2, size + 1, cand & ~g.adjacency(v)))
                return false;
        }
        return true;
    };
    return rec(rec, 0, 0, 0, allowed & g.vertex_mask());
}

template <typename Visitor>
bool for_each_independent_set(const Graph& g, Visitor&& visit) {
    return for_each_independent_set(g, visit, g.vertex_mask(),
                                    Graph::max_vertices);
}

// Minimum of |N(S)|/|S| over nonempty independent S contained in
// `allowed`, with neighborhoods taken in the full graph; +infinity when
// no such S exists. Callers restricting `allowed` must guarantee the
// restriction preserves the minimum (e.g. one representative per
// automorphism orbit).
inline Rational lambda_star_over(const Graph& g, VertexMask allowed) {
    long long best_num = 1, best_den = 0;  // +infinity
    for_each_independent_set(
        g,
        [&](VertexMask s, VertexMask nbrs, int size) {
            if (size == 0) return true;
            long long num = popcount(nbrs);
            long long den = size;
            if (num * best_den < best_num * den) {
                best_num = num;
                best_den = den;
                if (best_num == 0) return false;  // cannot go lower
            }
            return true;
        },
        allowed, Graph::max_vertices);
    if (best_den == 0) return Rational::infinity();
    return Rational(best_num, best_den);
}

// Largest lambda such that lambda * |S| <= |N(S)| for every independent S.
// Exponential sweep; guarded by a caller-overridable size limit.
inline Rational lambda_star(const Graph& g, int size_limit = 24) {
    if (g.n() > size_limit)
        throw std::invalid_argument(
            "lambda_star: graph order " + std::to_string(g.n()) +
            " exceeds the size limit " + std::to_string(size_limit));
    return lambda_star_over(g, g.vertex_mask());
}

// Data of the bipartite level graph between size-k and size-(k+1)
// independent sets: Omega_k on one side, Omega_{k+1} on the other, an edge
// for every containment pair.
struct LevelCount {
    int k = 0;
    std::uint64_t omega_k = 0;
    std::uint64_t omega_k1 = 0;
    std::uint64_t edge_count = 0;
    std::uint64_t min_lower_degree = 0;
};

// Materializes both levels and counts containment pairs concretely, from
// both sides: edge_count iterates the k-subsets of each (k+1)-set;
// min_lower_degree scans upward extensions of each k-set.
inline LevelCount level_double_count(const Graph& g, int k,
                                     int size_limit = 24) {
    if (g.n() > size_limit)
        throw std::invalid_argument(
            "level_double_count: graph order exceeds the size limit");
    int alpha = independence_number(g);
    if (k < 0 || k >= alpha)
        throw std::out_of_range("level_double_count: need 0 <= k < alpha");

    std::vector<VertexMask> lower, upper;
    std::unordered_set<VertexMask> lower_set, upper_set;
    for_each_independent_set(
        g,
        [&](VertexMask s, VertexMask, int size) {
            if (size == k) {
                lower.push_back(s);
                lower_set.insert(s);
            } else if (size == k + 1) {
                upper.push_back(s);
                upper_set.insert(s);
            }
            return true;
        },
        g.vertex_mask(), k + 1);

    LevelCount out;
    out.k = k;
    out.omega_k = lower.size();
    out.omega_k1 = upper.size();
    for (VertexMask u : upper)
        for (VertexMask rest = u; rest; rest &= rest - 1)
            if (lower_set.count(u & ~(rest & -rest))) ++out.edge_count;

    bool first = true;
    for (VertexMask w : lower) {
        std::uint64_t deg = 0;
        for (int v = 0; v < g.n(); ++v)
            if (!(w & bit(v)) && upper_set.count(w | bit(v))) ++deg;
        if (first || deg < out.min_lower_degree) {
            out.min_lower_degree = deg;
            first = false;
        }
    }
    return out;
}

}  // namespace indpoly
