#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "colexent/colex.hpp"
#include "colexent/entropy.hpp"
#include "colexent/graph.hpp"

namespace colexent {

/// First prefix index (1-based) at which an Erdos-Gallai inequality fails,
/// 0 for an odd degree sum, nullopt when the sequence is graphical.
/// Input must be sorted non-increasing with non-negative entries.
std::optional<int> erdos_gallai_violation(const std::vector<int>& degrees);

bool is_graphical(const std::vector<int>& degrees);

/// Every graphical degree sequence with positive entries summing to 2m,
/// exactly once, in descending lexicographic order. The search space for
/// extremal sweeps: h depends only on degrees and realizability is exactly
/// the Erdos-Gallai criterion, so partitions of 2m replace a graph sweep.
void enumerate_graphical(long long m, const std::function<void(const DegreeSequence&)>& visit);
std::vector<DegreeSequence> enumerate_graphical(long long m);

enum class Verdict { match, mismatch, tie_with_expected };

/// Result of one exact argmax sweep at size m.
struct ExtremalReport {
    long long m = 0;
    std::vector<DegreeSequence> argmax_sequences;  // all exact ties
    double h_float = 0.0;                          // display only
    ExactKey exact_key;
    DegreeSequence expected;                       // degree sequence of C(m)
    Verdict verdict = Verdict::mismatch;
};

ExtremalReport find_max_h(long long m);

struct VerificationOutcome {
    std::string claim_id;
    std::string parameter_range;
    bool holds = true;
    std::vector<std::string> counterexamples;  // non-empty iff !holds
    std::chrono::duration<double> elapsed{0};
    std::vector<ExtremalReport> details;       // per-m rows for sweep claims
};

struct SweepOptions {
    int threads = 1;  // 0 = hardware concurrency
};

/// Theorem oracle: for every 1 <= m <= m_max the unique exact h-argmax over
/// graphical sequences of sum 2m is the degree sequence of C(m).
VerificationOutcome verify_main_theorem(long long m_max, const SweepOptions& opts = {});

/// The all-ones sequence (key 1) is the unique h-minimizer for each m.
VerificationOutcome verify_max_entropy(long long m_max, const SweepOptions& opts = {});

/// Strict h(C(m,k)) > h(C(m,k-1)) for 3 <= k <= k_max and
/// binom2(k) <= m <= binom2(k) + span, by exact keys.
VerificationOutcome verify_lemma_largeclique(int k_max, long long span,
                                             const SweepOptions& opts = {});

/// At m = binom2(k) - 1 the graphs C(m,k) and C(m,k-1) have identical
/// degree sequences, for 3 <= k <= k_max.
VerificationOutcome verify_equality_boundary(int k_max);

/// For each m <= m_max and every k with a > 0 in decompose(m,k): among the
/// threshold graphs of size m and clique number k, the unique h-argmax
/// degree sequence is closed_form_degseq(m,k).
VerificationOutcome verify_threshold_theorem(long long m_max, const SweepOptions& opts = {});

/// Every h-argmax sequence from find_max_h(m) is realized by a connected
/// threshold graph found by creation-sequence enumeration, m <= m_max.
VerificationOutcome verify_extremal_is_threshold(long long m_max, const SweepOptions& opts = {});

/// Over tree degree sequences of order n (positive, length n, sum 2(n-1)):
/// the star is the unique h-max, the path the unique h-min, and for n >= 5
/// the second-smallest h value is attained exactly by (3,2,...,2,1,1,1).
VerificationOutcome verify_trees(int n_max, const SweepOptions& opts = {});

/// Exhaustive check that the near-balanced sequence maximizes
/// Σ f(z+ell) - Σ f(z) over sorted non-negative compositions of t into n
/// parts, for all t <= t_max, n <= n_max, ell <= ell_max. Float comparison;
/// margins <= 1e-9 are reported as counterexamples, never as holds.
VerificationOutcome verify_balanced_gain(long long t_max, int n_max, int ell_max,
                                         const SweepOptions& opts = {});

/// Bounded-degree extremality at size m: over graphical sequences with max
/// entry <= r, the argmax is C(m)'s sequence when m <= binom2(r+1) and
/// otherwise the sequence with all entries r except possibly one equal to
/// 2m mod r.
VerificationOutcome verify_bounded_degree(long long m, int r);
VerificationOutcome verify_bounded_degree_sweep(long long m_max, const std::vector<int>& rs,
                                                const SweepOptions& opts = {});

/// a[f(k+a-1)-f(k+a-2)-f(k-1)+f(k-2)] <= f(k-2+a)+f(k-2-a)-2f(k-2) for
/// 3 <= k <= k_max, 0 <= a <= k-2; equality at a = 0, strict otherwise.
/// Evaluated in extended precision; the minimum strict margin is reported.
VerificationOutcome verify_telescoping(int k_max, const SweepOptions& opts = {});

}  // namespace colexent
