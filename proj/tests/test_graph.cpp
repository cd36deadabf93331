#include "capev/canonical.hpp"
#include "capev/graph.hpp"
#include "capev/graph_io.hpp"
#include "capev/oracles.hpp"

#include "support/brute.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace capev;

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}});
    CHECK(g.edge_count() == 1); // duplicates collapse
}

TEST_CASE("induced subgraph basics") {
    Graph c5 = cycle_graph(5);

    SUBCASE("full vertex set is the identity") {
        std::vector<int> all{0, 1, 2, 3, 4};
        auto sub = induced_subgraph(c5, std::span<const int>(all));
        CHECK(sub.graph == c5);
        CHECK(sub.old_ids == all);
    }
    SUBCASE("consecutive cycle vertices give a path") {
        std::vector<int> s{0, 1, 2};
        auto sub = induced_subgraph(c5, std::span<const int>(s));
        CHECK(sub.graph == path_graph(3));
    }
    SUBCASE("empty selector gives the empty graph") {
        auto sub = induced_subgraph(complete_graph(4), std::span<const int>{});
        CHECK(sub.graph.vertex_count() == 0);
    }
    SUBCASE("out of range id is an input error") {
        std::vector<int> s{0, 7};
        CHECK_THROWS_AS(induced_subgraph(c5, std::span<const int>(s)), std::invalid_argument);
    }
}

TEST_CASE("induced subgraph is monotone in omega") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        Graph g = brute::random_graph(rng, 8, 0.4);
        unsigned mask = unsigned(rng() % 256);
        auto s = brute::bits_of(mask);
        auto sub = induced_subgraph(g, std::span<const int>(s));
        CHECK(max_clique_size(sub.graph).value <= max_clique_size(g).value);
    }
}

TEST_CASE("are_anticomplete") {
    Graph c5 = cycle_graph(5);
    CHECK(are_anticomplete(c5, VertexSet::of(5, std::vector<int>{0}),
                           VertexSet::of(5, std::vector<int>{2})));
    CHECK_FALSE(are_anticomplete(c5, VertexSet::of(5, std::vector<int>{0}),
                                 VertexSet::of(5, std::vector<int>{1})));
    CHECK(are_anticomplete(c5, VertexSet(5), VertexSet::of(5, std::vector<int>{0, 1})));
    VertexSet overlap = VertexSet::of(5, std::vector<int>{0, 1});
    CHECK_THROWS_AS(are_anticomplete(c5, overlap, overlap), std::invalid_argument);
}

TEST_CASE("connected components") {
    Graph g = Graph::from_edges(6, {{0, 1}, {2, 3}, {3, 4}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3, 4});
    CHECK(comps[2] == std::vector<int>{5});
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(cycle_graph(5)));
}

TEST_CASE("canonical form distinguishes and identifies") {
    CHECK(is_isomorphic(cycle_graph(5), cycle_graph(5)));
    CHECK_FALSE(is_isomorphic(cycle_graph(6), cycle_graph(5)));
    CHECK_FALSE(is_isomorphic(path_graph(4), cycle_graph(4)));

    // Same graph under a random relabeling.
    std::mt19937_64 rng(7);
    for (int it = 0; it < 25; ++it) {
        Graph g = brute::random_graph(rng, 9, 0.35);
        std::vector<int> perm(9);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
        Graph h = Graph::from_edges(9, edges);
        CHECK(is_isomorphic(g, h));
    }

    // Petersen vs a different 3-regular graph on 10 vertices (prism-like).
    Graph prism = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                         {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5},
                                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    CHECK_FALSE(is_isomorphic(petersen_graph(), prism));
}

TEST_CASE("dimacs round trip is bit exact") {
    Graph g = petersen_graph();
    std::ostringstream out;
    write_dimacs(out, g);
    std::string text = out.str();
    std::istringstream in(text);
    Graph back = read_dimacs(in);
    CHECK(back == g);

    std::ostringstream out2;
    write_dimacs(out2, back);
    CHECK(out2.str() == text);
}

TEST_CASE("dimacs parse errors") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return read_dimacs(in);
    };
    CHECK_THROWS_AS(parse("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("p edge 2 1\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse("p edge 2 2\ne 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("garbage\n"), ParseError);
    CHECK(parse("c comment\np edge 3 1\ne 1 2\n").edge_count() == 1);
}

TEST_CASE("graph json round trip") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        Graph g = brute::random_graph(rng, 10, 0.3);
        Graph back = graph_from_json(graph_to_json(g));
        CHECK(back == g);
        CHECK(graph_to_json(back) == graph_to_json(g));
    }
    CHECK_THROWS_AS(graph_from_json("{\"n\": 2}"), ParseError);
    CHECK_THROWS_AS(graph_from_json("{\"n\": 1, \"adj\": [[0]]}"), ParseError);
    CHECK_THROWS_AS(graph_from_json("{\"n\": 2, \"adj\": [[1], []]}"), ParseError);
}
