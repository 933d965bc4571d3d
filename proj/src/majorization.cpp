#include "colexent/majorization.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace colexent {

namespace {

std::vector<long long> sorted_padded(std::vector<long long> v, std::size_t len) {
    std::sort(v.begin(), v.end(), std::greater<>());
    v.resize(len, 0);
    return v;
}

}  // namespace

bool majorizes(std::vector<long long> x, std::vector<long long> y) {
    const std::size_t len = std::max(x.size(), y.size());
    x = sorted_padded(std::move(x), len);
    y = sorted_padded(std::move(y), len);
    long long px = 0;
    long long py = 0;
    for (std::size_t i = 0; i < len; ++i) {
        px += x[i];
        py += y[i];
        if (px < py) return false;
    }
    return px == py;
}

bool check_karamata(std::vector<long long> x, std::vector<long long> y,
                    const WeightFunction& g, bool strict_convex) {
    if (!majorizes(x, y)) throw std::invalid_argument("check_karamata: not a majorizing pair");
    const std::size_t len = std::max(x.size(), y.size());
    x = sorted_padded(std::move(x), len);
    y = sorted_padded(std::move(y), len);
    double sum_x = 0.0;
    double sum_y = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        sum_x += g(x[i]);
        sum_y += g(y[i]);
    }
    if (strict_convex && x != y) return sum_x > sum_y;
    return sum_x >= sum_y;
}

std::vector<long long> balanced_gain_argmax(long long t, int n, int ell) {
    if (t < 0) throw std::invalid_argument("balanced_gain_argmax: t must be non-negative");
    if (n < 1) throw std::invalid_argument("balanced_gain_argmax: n must be positive");
    if (ell < 1) throw std::invalid_argument("balanced_gain_argmax: ell must be positive");
    std::vector<long long> z(static_cast<std::size_t>(n), t / n);
    for (long long i = 0; i < t % n; ++i) ++z[static_cast<std::size_t>(i)];
    return z;
}

}  // namespace colexent
