#include <doctest.h>

#include <stdexcept>

#include "colexent/graph.hpp"
#include "test_util.hpp"

using namespace colexent;
using testutil::ds;

TEST_CASE("Graph construction validates and normalizes") {
    Graph g(4, {{2, 0}, {1, 0}, {3, 2}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.edges() == std::vector<Graph::Edge>{{0, 1}, {0, 2}, {2, 3}});
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 3));

    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

TEST_CASE("degree_sequence examples") {
    const Graph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(degree_sequence(triangle) == ds({2, 2, 2}));

    // K8 plus a vertex joined to 3 clique vertices
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) edges.emplace_back(u, v);
    for (int u = 0; u < 3; ++u) edges.emplace_back(u, 8);
    const Graph c31(9, edges);
    CHECK(c31.size() == 31);
    CHECK(degree_sequence(c31) == ds({8, 8, 8, 7, 7, 7, 7, 7, 3}));

    const Graph matching(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(degree_sequence(matching) == ds({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("DegreeSequence sorts, drops zeros, rejects negatives") {
    const DegreeSequence s(std::vector<int>{1, 3, 0, 2, 0});
    CHECK(s.values() == std::vector<int>{3, 2, 1});
    CHECK(s.sum() == 6);
    CHECK(s.length() == 3);
    CHECK(DegreeSequence(std::vector<int>{0, 0}).empty());
    CHECK_THROWS_AS(DegreeSequence(std::vector<int>{2, -1}), std::invalid_argument);
}

TEST_CASE("handshake holds on random graphs") {
    testutil::Rng rng(20240817);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 24);
        const Graph g = testutil::random_graph(n, 0.1 + 0.8 * (trial % 9) / 8.0, rng);
        long long total = 0;
        for (int d : g.degrees()) total += d;
        CHECK(total == 2LL * g.size());
        CHECK(degree_sequence(g).sum() == 2LL * g.size());
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(Graph(0, {})));
    CHECK(is_connected(Graph(1, {})));
    CHECK_FALSE(is_connected(Graph(2, {})));
    CHECK(is_connected(Graph(3, {{0, 1}, {1, 2}})));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})));
}
