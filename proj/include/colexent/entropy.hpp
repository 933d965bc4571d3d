#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <functional>

#include "colexent/graph.hpp"

namespace colexent {

/// Exact comparison key Π d_i^{d_i}. Since h = ln Π d_i^{d_i}, comparing h
/// between sequences reduces to comparing these integers; no floating point
/// is involved, so extremality verdicts are base-free and exact.
using ExactKey = boost::multiprecision::cpp_int;

/// Caller-supplied weight d -> g(d) for the generalized functional h_g.
using WeightFunction = std::function<double(long long)>;

/// x*ln(x) with f(0) = 0 by continuity.
double f_xlogx(long long x);

/// h(s) = Σ d_i ln d_i (natural log).
double h_value(const DegreeSequence& s);

ExactKey h_exact_key(const DegreeSequence& s);

/// Exact ordering of h between sequences of equal degree sum.
/// Throws std::invalid_argument when the sums differ.
std::strong_ordering compare_h(const DegreeSequence& a, const DegreeSequence& b);

/// First degree-based entropy I = ln(2m) - h/(2m), the Shannon entropy of
/// the degree distribution d_i/2m. Throws on an empty sequence or an odd
/// degree sum.
double entropy(const DegreeSequence& s);

/// h_g(s) = Σ g(d_i).
double h_generic(const DegreeSequence& s, const WeightFunction& g);

}  // namespace colexent
