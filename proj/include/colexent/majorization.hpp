#pragma once

#include <vector>

#include "colexent/entropy.hpp"

namespace colexent {

/// Majorization order: x majorizes y iff, after sorting non-increasing and
/// zero-padding to a common length, every prefix sum of x dominates the
/// corresponding prefix sum of y and the totals are equal.
bool majorizes(std::vector<long long> x, std::vector<long long> y);

/// Property-test oracle for Karamata's inequality: given a majorizing pair,
/// checks Σ g(x_i) >= Σ g(y_i) (strictly when requested and the padded
/// multisets differ). Throws std::invalid_argument if x does not majorize y.
bool check_karamata(std::vector<long long> x, std::vector<long long> y,
                    const WeightFunction& g, bool strict_convex = false);

/// The near-balanced sequence maximizing Σ f(z_j + ell) - Σ f(z_j) over
/// non-negative integer sequences of length n summing to t: t mod n entries
/// equal ceil(t/n), the rest floor(t/n).
std::vector<long long> balanced_gain_argmax(long long t, int n, int ell);

}  // namespace colexent
