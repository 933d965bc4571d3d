#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "colexent/graph.hpp"

namespace colexent::testutil {

using Rng = std::mt19937_64;

inline DegreeSequence ds(std::vector<int> v) { return DegreeSequence(std::move(v)); }

inline Graph random_graph(int n, double p, Rng& rng) {
    std::bernoulli_distribution flip(p);
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// Sorted degree vectors (zeros kept) of every labeled graph on n vertices.
inline std::set<std::vector<int>> all_degree_multisets(int n) {
    std::vector<Graph::Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::set<std::vector<int>> out;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) {
                ++deg[static_cast<std::size_t>(pairs[i].first)];
                ++deg[static_cast<std::size_t>(pairs[i].second)];
            }
        std::sort(deg.begin(), deg.end(), std::greater<>());
        out.insert(std::move(deg));
    }
    return out;
}

// Havel-Hakimi: builds a realization of a graphical sequence, or nullopt.
// Kept independent of the Erdos-Gallai implementation under test.
inline std::optional<Graph> havel_hakimi(std::vector<int> degrees) {
    const int n = static_cast<int>(degrees.size());
    std::vector<std::pair<int, int>> remaining;  // (residual degree, vertex)
    for (int v = 0; v < n; ++v) remaining.emplace_back(degrees[static_cast<std::size_t>(v)], v);
    std::vector<Graph::Edge> edges;
    for (int round = 0; round < n; ++round) {
        std::sort(remaining.begin(), remaining.end(), std::greater<>());
        auto [d, v] = remaining.front();
        if (d == 0) break;
        if (d >= static_cast<int>(remaining.size())) return std::nullopt;
        remaining.front().first = 0;
        for (int i = 1; i <= d; ++i) {
            if (remaining[static_cast<std::size_t>(i)].first == 0) return std::nullopt;
            --remaining[static_cast<std::size_t>(i)].first;
            edges.emplace_back(v, remaining[static_cast<std::size_t>(i)].second);
        }
    }
    return Graph(n, std::move(edges));
}

// Random (x, y) with x majorizing y: y is random, x is y after `transfers`
// unit moves from a poorer entry to a richer one (re-sorted each step).
struct MajorizingPair {
    std::vector<long long> x;
    std::vector<long long> y;
};

inline MajorizingPair random_majorizing_pair(Rng& rng, int max_len = 12, int max_entry = 16,
                                             int max_transfers = 8) {
    std::uniform_int_distribution<int> len_dist(2, max_len);
    std::uniform_int_distribution<long long> entry_dist(0, max_entry);
    const int len = len_dist(rng);
    std::vector<long long> y(static_cast<std::size_t>(len));
    for (auto& v : y) v = entry_dist(rng);
    std::sort(y.begin(), y.end(), std::greater<>());
    std::vector<long long> x = y;
    std::uniform_int_distribution<int> transfer_dist(0, max_transfers);
    const int transfers = transfer_dist(rng);
    std::uniform_int_distribution<int> idx(0, len - 1);
    for (int t = 0; t < transfers; ++t) {
        const int i = idx(rng);
        const int j = idx(rng);
        if (i >= j || x[static_cast<std::size_t>(j)] == 0) continue;
        ++x[static_cast<std::size_t>(i)];
        --x[static_cast<std::size_t>(j)];
        std::sort(x.begin(), x.end(), std::greater<>());
    }
    return {std::move(x), std::move(y)};
}

}  // namespace colexent::testutil
