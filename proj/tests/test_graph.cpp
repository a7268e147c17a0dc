#include <doctest.h>

#include <random>
#include <set>

#include "indpoly/graph.hpp"
#include "indpoly/graph6.hpp"
#include "indpoly/graphspec.hpp"
#include "test_util.hpp"

using namespace indpoly;

namespace {

std::set<std::pair<int, int>> edge_set(const Graph& g) {
    auto e = g.edges();
    return {e.begin(), e.end()};
}

}  // namespace

TEST_CASE("named families") {
    Graph c4 = cycle(4);
    CHECK(c4.n() == 4);
    CHECK(edge_set(c4) ==
          std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});

    Graph k2 = complete(2);
    CHECK(k2.edge_count() == 1);

    Graph p4 = path(4);
    CHECK(edge_set(p4) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    Graph s3 = star(3);
    CHECK(s3.n() == 4);
    CHECK(s3.degree(0) == 3);
    for (int leaf = 1; leaf <= 3; ++leaf) CHECK(s3.degree(leaf) == 1);

    CHECK(empty_graph(5).edge_count() == 0);

    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(complete(0), std::invalid_argument);
    CHECK_THROWS_AS(path(0), std::invalid_argument);
    CHECK_THROWS_AS(star(0), std::invalid_argument);
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), std::out_of_range);
    CHECK_THROWS_AS(Graph(65, {}), std::invalid_argument);
    // asymmetric adjacency rows
    CHECK_THROWS_AS(Graph::from_adjacency({bit(1), 0}), std::invalid_argument);
    // self-loop in a row
    CHECK_THROWS_AS(Graph::from_adjacency({bit(0)}), std::invalid_argument);
    // out-of-range bit
    CHECK_THROWS_AS(Graph::from_adjacency({bit(7)}), std::invalid_argument);
}

TEST_CASE("disjoint union") {
    Graph u = disjoint_union(complete(3), complete(1));
    CHECK(u.n() == 4);
    auto comps = components(u);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == low_mask(3));
    CHECK(comps[1] == bit(3));
    CHECK(u.has_isolated_vertex());

    Graph g = cycle(5);
    CHECK(to_graph6(disjoint_union(empty_graph(0), g)) == to_graph6(g));

    Graph twok2 = disjoint_union(complete(2), complete(2));
    CHECK(twok2.n() == 4);
    CHECK(twok2.edge_count() == 2);
    CHECK(twok2.has_edge(2, 3));
    CHECK(!twok2.has_edge(1, 2));
}

TEST_CASE("corona construction") {
    CHECK(to_graph6(corona(complete(1), complete(1))) == to_graph6(complete(2)));

    Graph g = corona(cycle(3), complete(2));
    CHECK(g.n() == 9);
    // each base vertex joined to its whole copy
    CHECK(g.has_edge(0, 3));
    CHECK(g.has_edge(0, 4));
    CHECK(g.has_edge(3, 4));
    CHECK(!g.has_edge(1, 3));

    CHECK(corona(star(3), complete(2)).n() == 12);

    std::vector<Graph> family{path(2), empty_graph(1), complete(3)};
    CHECK_THROWS_AS(corona(complete(2), std::span<const Graph>(family)),
                    std::invalid_argument);
}

TEST_CASE("corona vertex and edge counts") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph base = testutil::random_graph(rng, 4);
        std::vector<Graph> family;
        int vsum = 0, esum = 0;
        for (int v = 0; v < base.n(); ++v) {
            family.push_back(testutil::random_graph(rng, 3));
            vsum += family.back().n();
            esum += family.back().edge_count() + family.back().n();
        }
        Graph g = corona(base, std::span<const Graph>(family));
        CHECK(g.n() == base.n() + vsum);
        CHECK(g.edge_count() == base.edge_count() + esum);
    }
}

TEST_CASE("vertex deletion") {
    CHECK(to_graph6(delete_vertex(path(4), 0)) == to_graph6(path(3)));
    CHECK(to_graph6(delete_vertex(cycle(4), 0)) == to_graph6(path(3)));
    CHECK(delete_vertex(complete(1), 0).n() == 0);
    CHECK_THROWS_AS(delete_vertex(path(3), 3), std::out_of_range);
    // order-preserving relabeling: dropping the middle of a path leaves 2K_1
    Graph h = delete_vertex(path(3), 1);
    CHECK(h.n() == 2);
    CHECK(h.edge_count() == 0);
}

TEST_CASE("induced subgraphs") {
    // dropping one vertex is the induced subgraph on its complement
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testutil::random_graph(rng, 9);
        if (g.n() == 0) continue;
        int v = static_cast<int>(rng() % g.n());
        Graph a = delete_vertex(g, v);
        Graph b = induced_subgraph(g, g.vertex_mask() & ~bit(v));
        CHECK(to_graph6(a) == to_graph6(b));
    }
    Graph mid = induced_subgraph(cycle(5), bit(1) | bit(2) | bit(3));
    CHECK(to_graph6(mid) == to_graph6(path(3)));
    CHECK(induced_subgraph(cycle(5), 0).n() == 0);
}

TEST_CASE("set neighborhoods") {
    CHECK(neighborhood(cycle(4), bit(0)) == (bit(1) | bit(3)));
    CHECK(neighborhood(cycle(4), 0) == 0);
    CHECK(neighborhood(cycle(5), bit(0) | bit(2)) == (bit(1) | bit(3) | bit(4)));
    // N(A) may meet A for non-independent A
    CHECK((neighborhood(complete(3), bit(0) | bit(1)) & (bit(0) | bit(1))) != 0);
}

TEST_CASE("components and connectivity") {
    CHECK(components(empty_graph(3)).size() == 3);
    CHECK(components(cycle(7)).size() == 1);
    CHECK(is_connected(cycle(7)));
    CHECK(!is_connected(disjoint_union(complete(3), complete(1))));
    CHECK(is_connected(empty_graph(0)));
}

TEST_CASE("graph6 round trips") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = testutil::random_graph(rng, 13);
        Graph back = parse_graph6(to_graph6(g));
        CHECK(to_graph6(back) == to_graph6(g));
        CHECK(back.n() == g.n());
        for (int v = 0; v < g.n(); ++v) CHECK(back.adjacency(v) == g.adjacency(v));
    }
    // serializer-parser identity on canonical catalog lines
    // ("?", "@", "A_", "B_" are the empty graph, K_1, K_2, K_2 + K_1;
    //  "Ch" is P_4, "DqK" is a relabeled C_5, "C~" is K_4)
    for (const char* line : {"?", "@", "A_", "B_", "Ch", "DqK", "C~"}) {
        CHECK(to_graph6(parse_graph6(line)) == line);
    }
    CHECK(to_graph6(path(4)) == "Ch");
    CHECK(to_graph6(cycle(5)) == "Dhc");
    CHECK(to_graph6(complete(4)) == "C~");
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);  // long form
    CHECK_THROWS_AS(parse_graph6("D"), std::invalid_argument);    // truncated
    CHECK_THROWS_AS(parse_graph6("DqKq"), std::invalid_argument); // too long
    CHECK_THROWS_AS(parse_graph6("D K"), std::invalid_argument);  // bad byte
    // C_5 payload with a nonzero padding bit
    CHECK_THROWS_AS(parse_graph6("Dq]"), std::invalid_argument);
    CHECK(to_graph6(parse_graph6(">>graph6<<DqK")) == "DqK");
}

TEST_CASE("edge list format") {
    Graph g = cycle(5);
    Graph back = parse_edge_list(to_edge_list(g));
    CHECK(to_graph6(back) == to_graph6(g));
    CHECK_THROWS_AS(parse_edge_list("abc\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3\n0 0\n"), std::invalid_argument);
    Graph iso = parse_edge_list("4\n0 1\n\n2 3\n");
    CHECK(iso.edge_count() == 2);
}

TEST_CASE("graph spec language") {
    CHECK(parse_graph_spec("C(4)").n() == 4);
    CHECK(parse_graph_spec("3*K(2)").n() == 6);
    CHECK(parse_graph_spec("3*K(2)").edge_count() == 3);
    CHECK(parse_graph_spec("union(C(3), K(1))").n() == 4);
    CHECK(parse_graph_spec("corona(Star(3), K(2))").n() == 12);
    CHECK(parse_graph_spec(" corona( C(3) , 2*K(1) ) ").n() == 9);
    CHECK(parse_graph_spec("Empty(0)").n() == 0);
    CHECK(parse_graph_spec("(P(4))").n() == 4);

    CHECK_THROWS_AS(parse_graph_spec("C(2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("Q(3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("C(4) K(2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("union(C(3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("K(100)"), std::invalid_argument);
}

TEST_CASE("cli graph argument forms") {
    CHECK(parse_graph_argument("g6:DqK").n() == 5);
    CHECK(parse_graph_argument("C(5)").n() == 5);
    CHECK_THROWS_AS(parse_graph_argument("@/no/such/file"), std::invalid_argument);
}

TEST_CASE("parsers reject noise without crashing") {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<int> len(0, 12), ch(32, 126);
    for (int trial = 0; trial < 1000; ++trial) {
        std::string junk;
        int m = len(rng);
        for (int i = 0; i < m; ++i) junk.push_back(static_cast<char>(ch(rng)));
        try {
            Graph g = parse_graph6(junk);
            // a successful parse must round-trip exactly
            CHECK(to_graph6(g) == junk);
        } catch (const std::invalid_argument&) {
        }
        try {
            parse_graph_spec(junk);
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
}
