#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gssp/graph.hpp"
#include "test_util.hpp"

using namespace gssp;
using gssp_test::for_all_graphs;
using gssp_test::make_graph;

TEST_CASE("graph basics") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.closed_neighborhood(1) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK(g.subgraph_of(complete(4)));
    CHECK(!complete(4).subgraph_of(g));
}

TEST_CASE("graph6 known encodings") {
    // bit order for n=4: (0,1),(0,2),(1,2),(0,3),(1,3),(2,3)
    CHECK(encode_graph6(complete(4)) == "C~");
    CHECK(encode_graph6(Graph(4)) == "C?");
    CHECK(encode_graph6(make_graph(4, {{0, 1}, {2, 3}})) == "C`");
    CHECK(parse_graph6("C~") == complete(4));
    CHECK(parse_graph6("C?") == Graph(4));
    CHECK(parse_graph6("?") == Graph(0));
}

TEST_CASE("graph6 round trip exhaustive on n = 4") {
    for_all_graphs(4, [](const Graph& g) {
        std::string s = encode_graph6(g);
        CHECK(parse_graph6(s) == g);
    });
}

TEST_CASE("graph6 round trip on larger seeded graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = gssp_test::random_graph(seed, 5 + static_cast<int>(seed % 30));
        CHECK(parse_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("C"), std::invalid_argument);      // truncated
    CHECK_THROWS_AS(parse_graph6("C~~"), std::invalid_argument);    // too long
    CHECK_THROWS_AS(parse_graph6("C\x1f"), std::invalid_argument);  // bad char
    CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);    // long form
    // n = 5 needs 10 bits; the last two bits of the second char are padding
    CHECK_THROWS_AS(parse_graph6("D?A"), std::invalid_argument);
}

TEST_CASE("edge list round trip and errors") {
    Graph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(parse_edge_list(format_edge_list(g)) == g);
    CHECK(parse_edge_list("3 0 1 0 1") == make_graph(3, {{0, 1}}));
    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3 0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3 0 3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3 1 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("x"), std::invalid_argument);
}

TEST_CASE("complement is an involution") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = gssp_test::random_graph(seed, 8);
        CHECK(complement(complement(g)) == g);
    }
    CHECK(complement(complete(5)) == Graph(5));
}

TEST_CASE("join, tensor, corona, union edge counts") {
    Graph p3 = path(3), c4 = cycle(4);
    Graph j = join(p3, c4);
    CHECK(j.n() == 7);
    CHECK(j.edge_count() == 2 + 4 + 3 * 4);
    Graph t = tensor(p3, c4);
    CHECK(t.n() == 12);
    CHECK(t.edge_count() == 2 * 2 * 4);
    Graph cor = corona_empty(c4, 2);
    CHECK(cor.n() == 12);
    CHECK(cor.edge_count() == 4 + 8);
    for (int v = 0; v < 4; ++v) {
        CHECK(cor.has_edge(v, 4 + v));
        CHECK(cor.has_edge(v, 8 + v));
    }
    Graph du = disjoint_union(p3, c4);
    CHECK(du.n() == 7);
    CHECK(du.edge_count() == 6);
    CHECK(!du.has_edge(2, 3));
}

TEST_CASE("induced subgraph relabels") {
    Graph g = make_graph(5, {{0, 2}, {2, 4}, {1, 3}});
    Graph h = induced(g, {0, 2, 4});
    CHECK(h == path(3));
}

TEST_CASE("bfs distances and layers") {
    Graph g = disjoint_union(path(4), Graph(1));
    auto d = bfs_distances(g, 0);
    CHECK(d[3] == 3);
    CHECK(!d[4].has_value());
    auto layer2 = distance_layer(path(4), 2);
    CHECK(layer2 == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
}

TEST_CASE("builders") {
    CHECK(path(1) == Graph(1));
    CHECK(cycle(3) == complete(3));
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    Graph l = lollipop(3, 2);
    CHECK(l.n() == 5);
    CHECK(l.edge_count() == 5);
    CHECK(l.degree(0) == 1);  // pendant tip
    CHECK(induced(l, {2, 3, 4}).is_complete());
    Graph sp = spider(2, 3, 4);
    CHECK(sp.n() == 10);
    CHECK(is_tree(sp));
    CHECK(sp.degree(0) == 3);
    Graph pc = path_with_chord(6, 2);
    CHECK(pc.edge_count() == 6);
    CHECK(pc.degree(5) == 2);  // chord triangle vertex
    Graph pe = petersen();
    CHECK(pe.n() == 10);
    CHECK(is_regular(pe));
    CHECK(pe.edge_count() == 15);
    CHECK_THROWS_AS(lollipop(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(spider(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(path_with_chord(4, 3), std::invalid_argument);
}

TEST_CASE("structure queries") {
    CHECK(is_tree(path(6)));
    CHECK(!is_tree(cycle(6)));
    CHECK(!is_tree(disjoint_union(path(2), path(2))));
    CHECK(is_connected(cycle(5)));
    CHECK(!is_connected(Graph(2)));
    CHECK(is_regular(cycle(7)));
    CHECK(!is_regular(path(3)));
    CHECK(is_unicyclic(lollipop(3, 2)));
    CHECK(!is_unicyclic(path(4)));
    CHECK(!is_unicyclic(complete(4)));
    auto cyc = unique_cycle(lollipop(3, 2));
    std::set<int> cs(cyc.begin(), cyc.end());
    CHECK(cs == std::set<int>{2, 3, 4});
    CHECK_THROWS_AS(unique_cycle(path(4)), std::invalid_argument);
    CHECK(components(disjoint_union(path(2), cycle(3))).size() == 2);
}

TEST_CASE("small isomorphism") {
    Graph a = cycle(5);
    Graph b = make_graph(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
    auto sigma = isomorphism_small(a, b);
    REQUIRE(sigma.has_value());
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            CHECK(a.has_edge(u, v) == b.has_edge((*sigma)[u], (*sigma)[v]));
    CHECK(!isomorphic_small(path(4), make_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
    CHECK(!isomorphic_small(path(4), path(5)));
    CHECK_THROWS_AS(isomorphic_small(petersen(), petersen()), std::invalid_argument);
}
