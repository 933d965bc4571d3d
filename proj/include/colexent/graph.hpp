#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace colexent {

/// Simple undirected graph on vertices 0..n-1. Edges are kept as a sorted
/// set of (min,max) pairs so iteration and serialization are deterministic.
/// Immutable after construction.
class Graph {
public:
    using Edge = std::pair<int, int>;

    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(int u, int v) const;

    /// Per-vertex degrees, indexed by vertex.
    std::vector<int> degrees() const;

    /// Sorted adjacency lists.
    std::vector<std::vector<int>> adjacency() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Non-increasing sequence of positive vertex degrees. Degree-0 vertices are
/// never stored: they contribute nothing to the functionals computed here.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> degrees);

    bool empty() const noexcept { return degrees_.empty(); }
    std::size_t length() const noexcept { return degrees_.size(); }
    const std::vector<int>& values() const noexcept { return degrees_; }
    long long sum() const noexcept { return sum_; }

    int operator[](std::size_t i) const { return degrees_[i]; }
    auto begin() const noexcept { return degrees_.begin(); }
    auto end() const noexcept { return degrees_.end(); }

    bool operator==(const DegreeSequence&) const = default;
    auto operator<=>(const DegreeSequence& other) const {
        return degrees_ <=> other.degrees_;
    }

private:
    std::vector<int> degrees_;
    long long sum_ = 0;
};

/// Sorted positive degrees of g; the degree sum equals 2|E(g)|.
DegreeSequence degree_sequence(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace colexent
