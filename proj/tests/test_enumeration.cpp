#include <doctest.h>

#include <random>
#include <set>

#include "indpoly/classify.hpp"
#include "indpoly/enumerate.hpp"
#include "indpoly/graph.hpp"
#include "test_util.hpp"

using namespace indpoly;

namespace {

std::vector<BigInt> seq(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("brute force oracle fixtures") {
    CHECK(brute_force_coefficients(complete(3)).coeffs == seq({1, 3}));
    CHECK(brute_force_coefficients(path(4)).coeffs == seq({1, 4, 3}));
    CHECK(brute_force_coefficients(cycle(7)).coeffs == seq({1, 7, 14, 7}));
    CHECK(brute_force_coefficients(cycle(5)).coeffs == seq({1, 5, 5}));
    CHECK_THROWS_AS(brute_force_coefficients(empty_graph(25)),
                    std::invalid_argument);
}

TEST_CASE("counting fixtures") {
    CHECK(independence_coefficients(cycle(5)).coeffs == seq({1, 5, 5}));
    CHECK(independence_coefficients(corona(star(3), complete(2))).coeffs ==
          seq({1, 12, 51, 93, 62}));

    // Empty(n) counts every subset: binomial coefficients
    for (int n = 0; n <= 10; ++n) {
        auto cs = independence_coefficients(empty_graph(n));
        REQUIRE(cs.alpha() == n);
        BigInt binom = 1;
        for (int k = 0; k <= n; ++k) {
            CHECK(cs.coeffs[k] == binom);
            binom = binom * (n - k) / (k + 1);
        }
    }
}

TEST_CASE("counter agrees with the oracle") {
    for (int n = 0; n <= 4; ++n)
        testutil::for_each_labeled_graph(n, [](const Graph& g) {
            CHECK(independence_coefficients(g) == brute_force_coefficients(g));
        });
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = testutil::random_graph(rng, 14);
        CHECK(independence_coefficients(g) == brute_force_coefficients(g));
    }
    // a few spot checks at the top of the oracle's range
    for (int n : {18, 20}) {
        Graph g = testutil::random_graph(rng, n, 0.3);
        CHECK(independence_coefficients(g) == brute_force_coefficients(g));
    }
}

TEST_CASE("coefficient sequence invariants") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testutil::random_graph(rng, 12);
        auto cs = independence_coefficients(g);
        REQUIRE(cs.coeffs.size() >= 1);
        CHECK(cs.coeffs[0] == 1);
        if (g.n() >= 1) CHECK(cs.coeffs[1] == g.n());
        for (const auto& c : cs.coeffs) CHECK(c > 0);

        // sum of coefficients equals the number of independent sets
        BigInt total = 0;
        for (const auto& c : cs.coeffs) total += c;
        std::uint64_t direct = 0;
        for_each_independent_set(g, [&](VertexMask, VertexMask, int) {
            ++direct;
            return true;
        });
        CHECK(total == direct);
    }
}

TEST_CASE("disjoint union counts multiply") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Graph a = testutil::random_graph(rng, 6);
        Graph b = testutil::random_graph(rng, 6);
        auto product = independence_coefficients(a).to_polynomial() *
                       independence_coefficients(b).to_polynomial();
        CHECK(product ==
              brute_force_coefficients(disjoint_union(a, b)).to_polynomial());
    }
}

TEST_CASE("deleting a vertex drops exactly the sets through it") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testutil::random_graph(rng, 10);
        if (g.n() == 0) continue;
        int v = static_cast<int>(rng() % g.n());
        std::vector<std::uint64_t> avoiding(static_cast<std::size_t>(g.n()) + 1, 0);
        for_each_independent_set(g, [&](VertexMask s, VertexMask, int size) {
            if (!(s & bit(v))) ++avoiding[static_cast<std::size_t>(size)];
            return true;
        });
        auto cs = independence_coefficients(delete_vertex(g, v));
        for (int k = 0; k <= cs.alpha(); ++k)
            CHECK(cs.coeffs[k] == avoiding[static_cast<std::size_t>(k)]);
        for (std::size_t k = cs.coeffs.size(); k < avoiding.size(); ++k)
            CHECK(avoiding[k] == 0);
    }
}

TEST_CASE("independence number") {
    CHECK(independence_number(cycle(7)) == 3);
    for (int n = 1; n <= 6; ++n) CHECK(independence_number(complete(n)) == 1);
    CHECK(independence_number(empty_graph(9)) == 9);
    CHECK(independence_number(empty_graph(0)) == 0);
    // alpha(H o K_2) = |V(H)| for connected H
    for (const Graph& h : {cycle(5), path(3), star(4), complete(4)})
        CHECK(independence_number(corona(h, complete(2))) == h.n());

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testutil::random_graph(rng, 12);
        CHECK(independence_number(g) == independence_coefficients(g).alpha());
    }
}

namespace {

// Maximality filter straight from the definition, for cross-checking.
std::vector<VertexMask> brute_maximal_sets(const Graph& g) {
    std::vector<VertexMask> out;
    VertexMask full = g.vertex_mask();
    for (VertexMask s = 0;; ++s) {
        if (is_independent(g, s)) {
            bool maximal = true;
            for (int v = 0; v < g.n() && maximal; ++v)
                if (!(s & bit(v)) && is_independent(g, s | bit(v)))
                    maximal = false;
            if (maximal) out.push_back(s);
        }
        if (s == full) break;
    }
    return out;
}

}  // namespace

TEST_CASE("maximal independent set stream") {
    CHECK(collect_maximal_independent_sets(cycle(4)) ==
          std::vector<VertexMask>{bit(0) | bit(2), bit(1) | bit(3)});
    CHECK(collect_maximal_independent_sets(path(4)) ==
          std::vector<VertexMask>{bit(0) | bit(2), bit(0) | bit(3),
                                  bit(1) | bit(3)});
    for (int n = 1; n <= 5; ++n) {
        auto singletons = collect_maximal_independent_sets(complete(n));
        REQUIRE(static_cast<int>(singletons.size()) == n);
        for (int v = 0; v < n; ++v) CHECK(singletons[v] == bit(v));
    }
    CHECK(collect_maximal_independent_sets(empty_graph(0)) ==
          std::vector<VertexMask>{0});
}

TEST_CASE("maximal sets match the brute filter, in lexicographic order") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = trial < 55 ? testutil::random_graph(rng, 11)
                             : testutil::random_graph(rng, 16, 0.35);
        auto fast = collect_maximal_independent_sets(g);
        auto slow = brute_maximal_sets(g);

        REQUIRE(fast.size() == slow.size());
        std::set<VertexMask> fast_set(fast.begin(), fast.end());
        for (VertexMask m : slow) CHECK(fast_set.count(m) == 1);

        // emitted sets are independent, maximal, and lex-sorted by their
        // sorted vertex lists (ascending-vertex insertion makes that the
        // colex-free comparison below)
        int alpha = 0;
        for (std::size_t i = 0; i < fast.size(); ++i) {
            CHECK(is_independent(g, fast[i]));
            alpha = std::max(alpha, popcount(fast[i]));
            if (i > 0) {
                VertexMask a = fast[i - 1], b = fast[i];
                VertexMask diff = a ^ b;
                REQUIRE(diff != 0);
                // lex order on sorted vertex lists: the smallest
                // differing vertex belongs to the earlier set
                CHECK((a & bit(lowest_bit(diff))) != 0);
            }
        }
        CHECK(alpha == independence_number(g));
    }
}

TEST_CASE("maximal set stream supports early exit") {
    int calls = 0;
    maximal_independent_sets(path(4), [&](VertexMask) {
        ++calls;
        return false;
    });
    CHECK(calls == 1);
}

TEST_CASE("level double counting") {
    LevelCount lc = level_double_count(cycle(5), 1);
    CHECK(lc.omega_k == 5);
    CHECK(lc.omega_k1 == 5);
    CHECK(lc.edge_count == 10);
    CHECK(lc.min_lower_degree == 2);

    // k = 0: Omega_0 = { empty set }, every singleton contains it
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = testutil::random_graph(rng, 9, 0.4);
        if (independence_number(g) < 1) continue;
        LevelCount base = level_double_count(g, 0);
        CHECK(base.omega_k == 1);
        CHECK(base.edge_count == static_cast<std::uint64_t>(g.n()));
    }

    LevelCount c7 = level_double_count(cycle(7), 2);
    CHECK(c7.edge_count == 21);

    // |Y| = (k+1) * s_{k+1} for every level
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = testutil::random_graph(rng, 10);
        auto cs = independence_coefficients(g);
        for (int k = 0; k < cs.alpha(); ++k) {
            LevelCount lvl = level_double_count(g, k);
            CHECK(BigInt(static_cast<unsigned long>(lvl.edge_count)) ==
                  cs.coeffs[k + 1] * (k + 1));
            CHECK(lvl.omega_k == cs.coeffs[k]);
            CHECK(lvl.omega_k1 == cs.coeffs[k + 1]);
        }
    }

    CHECK_THROWS_AS(level_double_count(cycle(5), 2), std::out_of_range);
    CHECK_THROWS_AS(level_double_count(cycle(5), -1), std::out_of_range);
}

TEST_CASE("lambda star") {
    CHECK(lambda_star(cycle(7)) == Rational(4, 3));
    CHECK(lambda_star(cycle(5)) == Rational(3, 2));
    CHECK(lambda_star(complete(2)) == Rational(1));
    CHECK(lambda_star(disjoint_union(complete(3), complete(1))) == Rational(0));
    CHECK(lambda_star(empty_graph(0)).is_infinite());
    CHECK(lambda_star(corona(cycle(3), complete(2)), 24) == Rational(2));
    CHECK_THROWS_AS(lambda_star(empty_graph(10), 5), std::invalid_argument);

    // scale consistency: lambda-quasi-regularizable iff lambda <= lambda*
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = testutil::random_graph(rng, 9);
        Rational ls = lambda_star(g);
        if (ls.is_infinite()) continue;
        bool attained = false;
        for_each_independent_set(g, [&](VertexMask s, VertexMask nb, int size) {
            if (size == 0) return true;
            long long num = popcount(nb), den = size;
            CHECK(ls.num * den <= num * ls.den);  // lambda* * |S| <= |N(S)|
            if (ls.num * den == num * ls.den) attained = true;
            return true;
        });
        if (g.n() >= 1) CHECK(attained);
    }
}
