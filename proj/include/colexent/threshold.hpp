#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "colexent/graph.hpp"

namespace colexent {

enum class Step : std::uint8_t { Isolated, Dominating };

/// Build recipe for a threshold graph: vertex i is added either isolated or
/// dominating (adjacent to every earlier vertex). The first step is always
/// Isolated, so there are 2^(n-1) sequences of length n. Serializes as a
/// string over {I,D}, e.g. "IDDID".
class CreationSequence {
public:
    explicit CreationSequence(std::vector<Step> steps);
    static CreationSequence parse(std::string_view text);

    int length() const noexcept { return static_cast<int>(steps_.size()); }
    const std::vector<Step>& steps() const noexcept { return steps_; }
    std::string to_string() const;

    bool operator==(const CreationSequence&) const = default;

private:
    std::vector<Step> steps_;
};

Graph realize(const CreationSequence& c);

/// All 2^(n-1) creation sequences of length n in lexicographic order
/// (Isolated < Dominating).
void enumerate_creation(int n, const std::function<void(const CreationSequence&)>& visit);
std::vector<CreationSequence> enumerate_creation(int n);

/// Dismantling test: repeatedly remove an isolated or dominating vertex;
/// the graph is threshold iff this empties it.
bool is_threshold(const Graph& g);

/// Clique number. Threshold graphs use the split-graph degree rule
/// omega = max{ i : d_i >= i-1 } (degrees sorted non-increasing, 1-indexed);
/// anything else falls back to exhaustive search.
int clique_number(const Graph& g);

/// Branch-and-bound maximum clique over bitset adjacency; requires n <= 64.
int clique_number_exhaustive(const Graph& g);

/// Every threshold graph with exactly m edges and no isolated vertices,
/// each isomorphism class once (threshold graphs are determined by their
/// degree sequence), vertex counts ascending from 2 to m+1.
void enumerate_threshold_by_size(long long m, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_threshold_by_size(long long m);

}  // namespace colexent
