#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "colexent/entropy.hpp"
#include "colexent/oracle.hpp"
#include "test_util.hpp"

using namespace colexent;
using testutil::ds;

TEST_CASE("f_xlogx") {
    CHECK(f_xlogx(0) == 0.0);
    CHECK(f_xlogx(1) == 0.0);
    CHECK(f_xlogx(4) == doctest::Approx(4.0 * std::log(4.0)).epsilon(1e-15));
    CHECK_THROWS_AS(f_xlogx(-1), std::invalid_argument);
}

TEST_CASE("h_value examples") {
    CHECK(h_value(ds({1, 1})) == 0.0);
    CHECK(h_value(ds({1, 1, 1, 1, 1, 1, 1, 1})) == 0.0);
    CHECK(h_value(ds({2, 2, 2})) == doctest::Approx(6.0 * std::log(2.0)).epsilon(1e-15));
    CHECK(h_value(ds({3, 2, 2, 1})) ==
          doctest::Approx(3.0 * std::log(3.0) + 4.0 * std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("h_exact_key examples") {
    CHECK(h_exact_key(ds({1, 1, 1, 1})) == 1);
    CHECK(h_exact_key(ds({2, 2, 2})) == 64);
    CHECK(h_exact_key(ds({3, 1, 1, 1})) == 27);
    CHECK(h_exact_key(ds({3, 3, 2, 2})) == 11664);
    CHECK(h_exact_key(ds({3, 3, 3, 1})) == 19683);
    CHECK(h_exact_key(DegreeSequence{}) == 1);
}

TEST_CASE("compare_h") {
    CHECK(compare_h(ds({2, 2, 2}), ds({3, 1, 1, 1})) == std::strong_ordering::greater);
    CHECK(compare_h(ds({2, 2, 1, 1}), ds({2, 2, 1, 1})) == std::strong_ordering::equal);
    CHECK(compare_h(ds({3, 3, 2, 2}), ds({3, 3, 3, 1})) == std::strong_ordering::less);
    CHECK_THROWS_AS(compare_h(ds({2, 2}), ds({2, 2, 2})), std::invalid_argument);
}

TEST_CASE("entropy examples and identity") {
    CHECK(entropy(ds({1, 1})) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(entropy(ds({1, 1, 1, 1, 1, 1})) == doctest::Approx(std::log(6.0)).epsilon(1e-15));
    CHECK(entropy(ds({2, 2, 2})) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
    CHECK_THROWS_AS(entropy(ds({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(entropy(DegreeSequence{}), std::invalid_argument);
}

TEST_CASE("entropy equals Shannon entropy of the degree distribution") {
    testutil::Rng rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 28);
        Graph g = testutil::random_graph(n, 0.15 + 0.7 * (trial % 7) / 6.0, rng);
        if (g.size() == 0) continue;
        const DegreeSequence s = degree_sequence(g);
        const double two_m = static_cast<double>(s.sum());
        CHECK(std::abs(entropy(s) + h_value(s) / two_m - std::log(two_m)) < 1e-12);
        double shannon = 0.0;
        for (int d : s) {
            const double p = d / two_m;
            shannon -= p * std::log(p);
        }
        CHECK(entropy(s) == doctest::Approx(shannon).epsilon(1e-10));
    }
}

TEST_CASE("comparator agrees with floats and is base-free") {
    const auto sequences = enumerate_graphical(7);
    for (const auto& a : sequences) {
        for (const auto& b : sequences) {
            const double diff = h_value(a) - h_value(b);
            const auto order = compare_h(a, b);
            if (diff > 1e-9) CHECK(order == std::strong_ordering::greater);
            if (diff < -1e-9) CHECK(order == std::strong_ordering::less);
        }
    }
    // argmax under the exact key, natural log, and log base 2 all coincide
    for (long long m = 1; m <= 8; ++m) {
        const auto all = enumerate_graphical(m);
        std::size_t by_key = 0, by_ln = 0, by_log2 = 0;
        for (std::size_t i = 1; i < all.size(); ++i) {
            if (h_exact_key(all[i]) > h_exact_key(all[by_key])) by_key = i;
            if (h_value(all[i]) > h_value(all[by_ln])) by_ln = i;
            const auto log2h = [](const DegreeSequence& s) {
                double total = 0.0;
                for (int d : s) total += d * std::log2(static_cast<double>(d));
                return total;
            };
            if (log2h(all[i]) > log2h(all[by_log2])) by_log2 = i;
        }
        CHECK(by_key == by_ln);
        CHECK(by_key == by_log2);
    }
}

TEST_CASE("h >= 0 with equality exactly on all-ones sequences") {
    for (long long m = 1; m <= 6; ++m) {
        for (const auto& s : enumerate_graphical(m)) {
            CHECK(h_value(s) >= 0.0);
            const bool all_ones = s.length() == static_cast<std::size_t>(2 * m);
            CHECK((h_value(s) == 0.0) == all_ones);
            CHECK((h_exact_key(s) == 1) == all_ones);
        }
    }
}

TEST_CASE("h_generic") {
    CHECK(h_generic(ds({2, 2, 1}), [](long long x) { return static_cast<double>(x); }) == 5.0);
    CHECK(h_generic(ds({2, 2, 2}), [](long long x) { return static_cast<double>(x * x); }) == 12.0);
    CHECK(h_generic(ds({3, 2, 2, 1}), f_xlogx) == doctest::Approx(h_value(ds({3, 2, 2, 1}))));
}
