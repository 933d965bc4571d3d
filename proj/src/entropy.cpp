#include "colexent/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace colexent {

namespace {

// d^d for small d, grown on demand. thread_local keeps the functions pure
// from the caller's point of view.
const ExactKey& self_power(int d) {
    thread_local std::vector<ExactKey> cache{ExactKey(1), ExactKey(1)};  // 0^0 := 1, 1^1
    while (static_cast<int>(cache.size()) <= d) {
        const unsigned v = static_cast<unsigned>(cache.size());
        cache.push_back(boost::multiprecision::pow(ExactKey(v), v));
    }
    return cache[static_cast<std::size_t>(d)];
}

}  // namespace

double f_xlogx(long long x) {
    if (x < 0) throw std::invalid_argument("f_xlogx: negative argument");
    if (x <= 1) return 0.0;
    const double v = static_cast<double>(x);
    return v * std::log(v);
}

double h_value(const DegreeSequence& s) {
    double total = 0.0;
    for (int d : s) total += f_xlogx(d);
    return total;
}

ExactKey h_exact_key(const DegreeSequence& s) {
    ExactKey key = 1;
    for (int d : s) key *= self_power(d);
    return key;
}

std::strong_ordering compare_h(const DegreeSequence& a, const DegreeSequence& b) {
    if (a.sum() != b.sum())
        throw std::invalid_argument("compare_h: incomparable sizes (degree sums differ)");
    const ExactKey ka = h_exact_key(a);
    const ExactKey kb = h_exact_key(b);
    if (ka < kb) return std::strong_ordering::less;
    if (kb < ka) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double entropy(const DegreeSequence& s) {
    if (s.empty()) throw std::invalid_argument("entropy: empty degree sequence");
    if (s.sum() % 2 != 0) throw std::invalid_argument("entropy: not a graph degree sum");
    const double two_m = static_cast<double>(s.sum());
    return std::log(two_m) - h_value(s) / two_m;
}

double h_generic(const DegreeSequence& s, const WeightFunction& g) {
    double total = 0.0;
    for (int d : s) total += g(d);
    return total;
}

}  // namespace colexent
