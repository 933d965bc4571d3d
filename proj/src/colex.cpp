#include "colexent/colex.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace colexent {

GlobalDecomposition decompose_global(long long m) {
    if (m < 1) throw std::invalid_argument("decompose_global: m must be positive");
    long long k = (1 + static_cast<long long>(std::sqrt(8.0 * static_cast<double>(m) + 1.0))) / 2;
    if (k < 2) k = 2;
    while (binom2(k + 1) <= m) ++k;
    while (k > 2 && binom2(k) > m) --k;
    const long long ell = m - binom2(k);
    return {static_cast<int>(k), static_cast<int>(ell)};
}

ColexDecomposition decompose(long long m, int k) {
    if (m < 1) throw std::invalid_argument("decompose: m must be positive");
    if (k < 2) throw std::invalid_argument("decompose: clique parameter k must be at least 2");
    const long long base = binom2(k - 1);
    if (m < base)
        throw std::invalid_argument("decompose: m too small for clique parameter k (m=" +
                                    std::to_string(m) + ", k=" + std::to_string(k) + ")");
    const long long rest = m - base;
    return {m, k, rest / (k - 1), static_cast<int>(rest % (k - 1))};
}

LiftedDecomposition lift_decomposition(long long m, int k) {
    if (k < 3) throw std::invalid_argument("lift_decomposition: requires k >= 3");
    const ColexDecomposition d = decompose(m, k);
    const long long ab = d.a + d.b;
    return {d.a + 1 + ab / (k - 2), static_cast<int>(ab % (k - 2))};
}

Graph build_colex(long long m) {
    const auto [k, ell] = decompose_global(m);
    const int n = k + (ell > 0 ? 1 : 0);
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    for (int u = 0; u < ell; ++u) edges.emplace_back(u, k);
    return Graph(n, std::move(edges));
}

Graph build_colex_k(long long m, int k) {
    const ColexDecomposition d = decompose(m, k);
    const int clique = k - 1;
    if (d.a > 1000000) throw std::invalid_argument("build_colex_k: graph too large to materialize");
    const int n = clique + static_cast<int>(d.a) + (d.b > 0 ? 1 : 0);
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int u = 0; u < clique; ++u)
        for (int v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
    for (int s = 0; s < static_cast<int>(d.a); ++s)
        for (int u = 0; u < clique; ++u) edges.emplace_back(u, clique + s);
    if (d.b > 0) {
        const int w = n - 1;
        for (int u = 0; u < d.b; ++u) edges.emplace_back(u, w);
    }
    return Graph(n, std::move(edges));
}

DegreeSequence closed_form_degseq(long long m, int k) {
    const ColexDecomposition d = decompose(m, k);
    std::vector<int> deg;
    deg.reserve(static_cast<std::size_t>(k) + static_cast<std::size_t>(d.a) + 1);
    const int a = static_cast<int>(d.a);
    for (int i = 0; i < d.b; ++i) deg.push_back(k - 1 + a);
    for (int i = 0; i < k - 1 - d.b; ++i) deg.push_back(k - 2 + a);
    for (int i = 0; i < a; ++i) deg.push_back(k - 1);
    deg.push_back(d.b);  // dropped by the constructor when b = 0
    return DegreeSequence(std::move(deg));
}

}  // namespace colexent
