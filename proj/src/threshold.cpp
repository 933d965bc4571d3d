#include "colexent/threshold.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>

namespace colexent {

CreationSequence::CreationSequence(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw std::invalid_argument("CreationSequence: empty");
    if (steps_.front() != Step::Isolated)
        throw std::invalid_argument("CreationSequence: first step must be Isolated");
}

CreationSequence CreationSequence::parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        if (c == 'I') steps.push_back(Step::Isolated);
        else if (c == 'D') steps.push_back(Step::Dominating);
        else throw std::invalid_argument("CreationSequence: expected 'I' or 'D'");
    }
    return CreationSequence(std::move(steps));
}

std::string CreationSequence::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(s == Step::Isolated ? 'I' : 'D');
    return out;
}

Graph realize(const CreationSequence& c) {
    const int n = c.length();
    std::vector<Graph::Edge> edges;
    const auto& steps = c.steps();
    for (int i = 1; i < n; ++i)
        if (steps[static_cast<std::size_t>(i)] == Step::Dominating)
            for (int j = 0; j < i; ++j) edges.emplace_back(j, i);
    return Graph(n, std::move(edges));
}

void enumerate_creation(int n, const std::function<void(const CreationSequence&)>& visit) {
    if (n < 1) throw std::invalid_argument("enumerate_creation: n must be positive");
    if (n > 40) throw std::invalid_argument("enumerate_creation: n too large to enumerate");
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    std::vector<Step> steps(static_cast<std::size_t>(n), Step::Isolated);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (int i = 1; i < n; ++i)
            steps[static_cast<std::size_t>(i)] =
                ((mask >> (n - 1 - i)) & 1) ? Step::Dominating : Step::Isolated;
        visit(CreationSequence(steps));
    }
}

std::vector<CreationSequence> enumerate_creation(int n) {
    std::vector<CreationSequence> all;
    enumerate_creation(n, [&](const CreationSequence& c) { all.push_back(c); });
    return all;
}

bool is_threshold(const Graph& g) {
    const int n = g.order();
    if (n == 0) return true;
    auto deg = g.degrees();
    const auto adj = g.adjacency();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    int remaining = n;
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            if (deg[static_cast<std::size_t>(v)] == 0 ||
                deg[static_cast<std::size_t>(v)] == remaining - 1)
                pick = v;
        }
        if (pick < 0) return false;
        alive[static_cast<std::size_t>(pick)] = 0;
        --remaining;
        for (int u : adj[static_cast<std::size_t>(pick)])
            if (alive[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
        deg[static_cast<std::size_t>(pick)] = 0;
    }
    return true;
}

namespace {

// omega = max{ i : d_i >= i-1 } on degrees sorted non-increasing; valid for
// split graphs, hence for threshold graphs.
int degree_rule_clique_number(const Graph& g) {
    auto deg = g.degrees();
    std::sort(deg.begin(), deg.end(), std::greater<>());
    int omega = 1;
    for (int i = 0; i < static_cast<int>(deg.size()); ++i) {
        if (deg[static_cast<std::size_t>(i)] >= i) omega = i + 1;
        else break;
    }
    return omega;
}

}  // namespace

int clique_number(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("clique_number: empty graph");
    if (is_threshold(g)) return degree_rule_clique_number(g);
    return clique_number_exhaustive(g);
}

int clique_number_exhaustive(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("clique_number_exhaustive: empty graph");
    if (n > 64) throw std::invalid_argument("clique_number_exhaustive: more than 64 vertices");
    std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        nbr[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        nbr[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    int best = 1;
    const auto expand = [&](const auto& self, int size, std::uint64_t cand) -> void {
        while (cand != 0) {
            if (size + std::popcount(cand) <= best) return;
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (size + 1 > best) best = size + 1;
            const std::uint64_t next = cand & nbr[static_cast<std::size_t>(v)];
            if (next != 0) self(self, size + 1, next);
        }
    };
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    expand(expand, 0, all);
    return best;
}

namespace {

// A threshold graph with m edges and no isolated vertex corresponds to a
// partition of m into distinct parts: the positions of the Dominating steps
// (a Dominating step at position p contributes p edges, and "no isolated
// vertices" forces the last step to dominate).
template <typename Emit>
void distinct_parts(long long remaining, long long max_next, std::vector<int>& parts, Emit&& emit) {
    if (remaining == 0) {
        emit(parts);
        return;
    }
    for (long long p = std::min(max_next, remaining); p >= 1; --p) {
        if (p * (p + 1) / 2 < remaining) break;
        parts.push_back(static_cast<int>(p));
        distinct_parts(remaining - p, p - 1, parts, emit);
        parts.pop_back();
    }
}

}  // namespace

void enumerate_threshold_by_size(long long m, const std::function<void(const Graph&)>& visit) {
    if (m < 1) throw std::invalid_argument("enumerate_threshold_by_size: m must be positive");
    std::set<std::vector<int>> seen;
    for (long long largest = 1; largest <= m; ++largest) {
        if (largest * (largest + 1) / 2 < m) continue;
        std::vector<int> parts{static_cast<int>(largest)};
        distinct_parts(m - largest, largest - 1, parts, [&](const std::vector<int>& positions) {
            std::vector<Step> steps(static_cast<std::size_t>(largest) + 1, Step::Isolated);
            for (int p : positions) steps[static_cast<std::size_t>(p)] = Step::Dominating;
            Graph g = realize(CreationSequence(std::move(steps)));
            auto key = g.degrees();
            std::sort(key.begin(), key.end(), std::greater<>());
            if (seen.insert(std::move(key)).second) visit(g);
        });
    }
}

std::vector<Graph> enumerate_threshold_by_size(long long m) {
    std::vector<Graph> all;
    enumerate_threshold_by_size(m, [&](const Graph& g) { all.push_back(g); });
    return all;
}

}  // namespace colexent
