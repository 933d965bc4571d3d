#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "colexent/colex.hpp"
#include "colexent/threshold.hpp"
#include "test_util.hpp"

using namespace colexent;
using testutil::ds;

TEST_CASE("CreationSequence parsing and validation") {
    const auto c = CreationSequence::parse("IDDID");
    CHECK(c.length() == 5);
    CHECK(c.to_string() == "IDDID");
    CHECK_THROWS_AS(CreationSequence::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(CreationSequence::parse("DID"), std::invalid_argument);
    CHECK_THROWS_AS(CreationSequence::parse("IDX"), std::invalid_argument);
}

TEST_CASE("realize") {
    CHECK(realize(CreationSequence::parse("I")) == Graph(1, {}));
    CHECK(realize(CreationSequence::parse("IDD")) == Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(degree_sequence(realize(CreationSequence::parse("IIID"))) == ds({3, 1, 1, 1}));
}

TEST_CASE("enumerate_creation counts 2^(n-1)") {
    CHECK(enumerate_creation(1).size() == 1);
    CHECK(enumerate_creation(3).size() == 4);
    for (int n = 1; n <= 15; ++n) {
        const auto all = enumerate_creation(n);
        CHECK(all.size() == (std::size_t{1} << (n - 1)));
        std::set<std::string> distinct;
        for (const auto& c : all) distinct.insert(c.to_string());
        CHECK(distinct.size() == all.size());
    }
    const auto small = enumerate_creation(3);
    CHECK(small.front().to_string() == "III");
    CHECK(small.back().to_string() == "IDD");
}

TEST_CASE("every realization is a threshold graph") {
    for (int n = 1; n <= 10; ++n)
        enumerate_creation(n, [](const CreationSequence& c) { CHECK(is_threshold(realize(c))); });
}

TEST_CASE("is_threshold examples") {
    CHECK_FALSE(is_threshold(Graph(4, {{0, 1}, {1, 2}, {2, 3}})));          // P4
    CHECK_FALSE(is_threshold(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));  // C4
    CHECK_FALSE(is_threshold(Graph(4, {{0, 1}, {2, 3}})));                  // 2K2
    CHECK(is_threshold(build_colex(31)));
    CHECK(is_threshold(Graph(0, {})));
    CHECK(is_threshold(Graph(5, {})));
}

TEST_CASE("graphs on up to 7 vertices are threshold iff their degree multiset is realized") {
    for (int n = 4; n <= 7; ++n) {
        std::set<std::vector<int>> realized;
        enumerate_creation(n, [&](const CreationSequence& c) {
            auto deg = realize(c).degrees();
            std::sort(deg.begin(), deg.end(), std::greater<>());
            realized.insert(std::move(deg));
        });
        std::vector<Graph::Edge> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        const std::uint64_t total = std::uint64_t{1} << pairs.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::vector<Graph::Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask & (std::uint64_t{1} << i)) edges.push_back(pairs[i]);
            const Graph g(n, std::move(edges));
            auto deg = g.degrees();
            std::sort(deg.begin(), deg.end(), std::greater<>());
            CHECK(is_threshold(g) == (realized.count(deg) > 0));
        }
    }
}

TEST_CASE("clique_number examples") {
    CHECK(clique_number(build_colex_k(10, 5)) == 5);  // K5
    CHECK(clique_number(build_colex(31)) == 8);
    CHECK(clique_number(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})) == 2);  // star S6
    CHECK(clique_number(Graph(4, {{0, 1}, {1, 2}, {2, 3}})) == 2);  // P4, exhaustive fallback
    CHECK(clique_number(Graph(1, {})) == 1);
    CHECK_THROWS_AS(clique_number(Graph(0, {})), std::invalid_argument);
}

TEST_CASE("degree rule agrees with exhaustive search on threshold graphs up to n=12") {
    for (int n = 1; n <= 12; ++n)
        enumerate_creation(n, [](const CreationSequence& c) {
            const Graph g = realize(c);
            CHECK(clique_number(g) == clique_number_exhaustive(g));
        });
}

namespace {

// Threshold graphs of size m without isolated vertices are in bijection with
// partitions of m into distinct parts; this DP counts those independently.
long long distinct_part_partitions(int m) {
    std::vector<long long> ways(static_cast<std::size_t>(m) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= m; ++part)
        for (int total = m; total >= part; --total)
            ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
    return ways[static_cast<std::size_t>(m)];
}

}  // namespace

TEST_CASE("enumerate_threshold_by_size") {
    const auto size1 = enumerate_threshold_by_size(1);
    REQUIRE(size1.size() == 1);
    CHECK(size1.front() == Graph(2, {{0, 1}}));

    const auto size3 = enumerate_threshold_by_size(3);
    std::set<DegreeSequence> seqs;
    for (const auto& g : size3) seqs.insert(degree_sequence(g));
    CHECK(seqs == std::set<DegreeSequence>{ds({2, 2, 2}), ds({3, 1, 1, 1})});

    const auto size6 = enumerate_threshold_by_size(6);
    std::set<DegreeSequence> seqs6;
    for (const auto& g : size6) seqs6.insert(degree_sequence(g));
    CHECK(seqs6.count(ds({3, 3, 3, 3})) == 1);              // K4
    CHECK(seqs6.count(ds({6, 1, 1, 1, 1, 1, 1})) == 1);     // S7

    for (long long m = 1; m <= 20; ++m) {
        std::set<DegreeSequence> distinct;
        long long count = 0;
        enumerate_threshold_by_size(m, [&](const Graph& g) {
            ++count;
            CHECK(g.size() == m);
            CHECK(is_threshold(g));
            CHECK(is_connected(g));
            CHECK(g.order() >= 2);
            CHECK(g.order() <= m + 1);
            auto deg = g.degrees();
            CHECK(*std::min_element(deg.begin(), deg.end()) >= 1);
            distinct.insert(degree_sequence(g));
        });
        CHECK(count == static_cast<long long>(distinct.size()));
        CHECK(count == distinct_part_partitions(static_cast<int>(m)));
    }
    CHECK_THROWS_AS(enumerate_threshold_by_size(0), std::invalid_argument);
}
