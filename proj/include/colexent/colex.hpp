#pragma once

#include "colexent/graph.hpp"

namespace colexent {

constexpr long long binom2(long long x) noexcept { return x * (x - 1) / 2; }

/// m = binom2(k) + ell with 0 <= ell < k and k >= 2.
struct GlobalDecomposition {
    int k;
    int ell;
};

GlobalDecomposition decompose_global(long long m);

/// Parameters of C(m,k): m = binom2(k-1) + a(k-1) + b with a >= 0 and
/// 0 <= b <= k-2. The representation in that range is unique.
struct ColexDecomposition {
    long long m;
    int k;
    long long a;
    int b;
};

ColexDecomposition decompose(long long m, int k);

/// (a', b') with m = binom2(k-2) + a'(k-2) + b' and 0 <= b' <= k-3,
/// computed by the recurrence a' = a + 1 + floor((a+b)/(k-2)),
/// b' = (a+b) mod (k-2). Agrees with decompose(m, k-1). Requires k >= 3.
struct LiftedDecomposition {
    long long a_lift;
    int b_lift;
};

LiftedDecomposition lift_decomposition(long long m, int k);

/// The colex graph C(m): a clique K_k plus, when ell > 0, one extra vertex
/// adjacent to ell clique vertices. Vertices 0..k-1 form the clique; the
/// extra vertex is labeled k.
Graph build_colex(long long m);

/// C(m,k): a clique K_{k-1} (vertices 0..k-2), a stable set of size a fully
/// joined to the clique (next labels), and, when b > 0, one further vertex
/// adjacent to clique vertices 0..b-1 (last label).
Graph build_colex_k(long long m, int k);

/// Degree sequence of C(m,k) in closed form:
/// ((k-1+a)^b, (k-2+a)^(k-1-b), (k-1)^a, b), the trailing b dropped when 0.
DegreeSequence closed_form_degseq(long long m, int k);

}  // namespace colexent
