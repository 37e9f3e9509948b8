#include "rtex/error.hpp"
#include "rtex/extremal.hpp"

#include <doctest.h>

#include <cstdint>

using namespace rtex;

namespace {

/// Twice g_k(n, s), from the expanded quadratic in plain integers.
std::int64_t twice_g(std::int64_t n, std::int64_t s, std::int64_t k) {
    return k * (k - 1) * n * n - 2 * k * (3 * k - 4) * n * s + (3 * k - 4) * (3 * k - 1) * s * s;
}

Rational half(std::int64_t x) { return Rational(x, 2); }

} // namespace

TEST_CASE("g_k examples") {
    CHECK(g_k(9, 4, 2) == 17);
    CHECK(g_k(16, 6, 3) == 48);
    for (std::int64_t n = 1; n <= 40; ++n)
        for (std::int64_t s = 0; s <= n; ++s) {
            REQUIRE(g_k(n, s, 2) == n * n - 4 * n * s + 5 * s * s);
            REQUIRE(g_k(n, s, 3) == 3 * n * n - 15 * n * s + 20 * s * s);
        }
    // At s = kn/(3k-1) the bound is ns/2.
    for (std::int64_t k = 1; k <= 10; ++k)
        for (std::int64_t t = 1; t <= 5; ++t) {
            const std::int64_t n = (3 * k - 1) * t, s = k * t;
            CHECK(g_k(n, s, k) == half(n * s));
        }
}

TEST_CASE("expanded and factored forms agree") {
    int points = 0;
    for (std::int64_t k = 1; k <= 10; ++k)
        for (std::int64_t n = 1; n <= 45; ++n)
            for (std::int64_t s = 1; s <= n; ++s) {
                const Rational expect = half(twice_g(n, s, k));
                REQUIRE(g_k(n, s, k) == expect);
                REQUIRE(g_k_factored(n, s, k) == expect);
                ++points;
            }
    CHECK(points >= 10000);
    // Large arguments still agree exactly.
    CHECK(g_k(1'000'000'007, 400'000'003, 9) == g_k_factored(1'000'000'007, 400'000'003, 9));
}

TEST_CASE("minimum over k") {
    GMin m = g_min(9, 4);
    CHECK(m.value == 17);
    CHECK(m.argmin == 2);
    m = g_min(10, 4);
    CHECK(m.value == 20);
    CHECK(m.argmin == 2);
    CHECK(g_k(10, 4, 2) == 20);
    CHECK(g_k(10, 4, 3) == 20);
    m = g_min(16, 6);
    CHECK(m.value == 48);
    CHECK(m.argmin == 3);
    CHECK_THROWS_AS(g_min(9, 3), OutOfRange);
    // Above n/2 the value is the Mantel bound.
    m = g_min(9, 5);
    CHECK(m.value == 20);
    CHECK_FALSE(m.argmin.has_value());
}

TEST_CASE("the minimising piece on each window") {
    for (std::int64_t n = 1; n <= 60; ++n)
        for (std::int64_t k = 2; k <= 8; ++k)
            for (std::int64_t s = 1; s <= n; ++s) {
                // k n <= (3k-1) s and (3k-4) s < (k-1) n
                if (k * n > (3 * k - 1) * s || (3 * k - 4) * s >= (k - 1) * n)
                    continue;
                GMin m = g_min(n, s);
                REQUIRE(m.argmin == static_cast<int>(k));
                // Brute minimum over a generous range of k.
                std::int64_t best = twice_g(n, s, 1);
                for (std::int64_t j = 2; j <= 4 * n; ++j)
                    best = std::min(best, twice_g(n, s, j));
                REQUIRE(m.value == half(best));
            }
}

TEST_CASE("cusps") {
    for (std::int64_t k = 2; k <= 8; ++k)
        for (std::int64_t t = 1; t <= 6; ++t) {
            const std::int64_t n = (3 * k - 1) * t, s = k * t;
            CHECK(g_k(n, s, k) == g_k(n, s, k + 1));
            CHECK(g_k(n, s, k) == half(n * s));
        }
}

TEST_CASE("critical points and windows") {
    CHECK(critical_point(2) == Rational(2, 5));
    CHECK(critical_point(3) == Rational(3, 8));
    auto w = theorem_window(2);
    CHECK(w.first == Rational(2, 5));
    CHECK(w.second == Rational(2, 5) + Rational(1, 38400));
    auto w5 = theorem_window(5);
    CHECK(w5.second - w5.first == Rational(1, 600 * 15625));
}

TEST_CASE("lambda and class bounds") {
    CHECK(lambda(9, 4, 2) == 2);
    CHECK(lambda(10, 4, 2) == 0);
    CHECK(lambda(29, 10, 10) == 0);
    CHECK(class_size_bounds(9, 4, 2) == std::pair<std::int64_t, std::int64_t>{1, 3});
    CHECK(class_size_bounds(10, 4, 2) == std::pair<std::int64_t, std::int64_t>{2, 2});
    CHECK(class_size_bounds(16, 6, 3) == std::pair<std::int64_t, std::int64_t>{2, 2});
    for (std::int64_t n = 1; n <= 50; ++n)
        for (std::int64_t s = 1; s <= n; ++s)
            for (std::int64_t k = 1; k <= 12; ++k) {
                const std::int64_t l = lambda(n, s, k);
                REQUIRE(l == k * (3 * s - n) - s);
                REQUIRE((l >= 0) == (k * n <= (3 * k - 1) * s));
                auto [lo, hi] = class_size_bounds(n, s, k);
                REQUIRE((lo <= hi) == (l >= 0));
                REQUIRE(hi - lo == l);
            }
}

TEST_CASE("range rule for the upper bound") {
    CHECK_FALSE(fact_s_range_bound(9, 4, 2));
    CHECK(fact_s_range_bound(10, 4, 2));
    CHECK(fact_s_range_bound(9, 4, 3));
    for (std::int64_t n = 1; n <= 40; ++n)
        for (std::int64_t s = 1; s <= n; ++s)
            for (std::int64_t k = 2; k <= 8; ++k) {
                const bool inside = k * n < (3 * k - 1) * s && (3 * k - 4) * s < (k - 1) * n;
                REQUIRE(fact_s_range_bound(n, s, k) == !inside);
            }
    CHECK_THROWS_AS(fact_s_range_bound(9, 4, 1), BadParams);
}

TEST_CASE("Mantel") {
    for (std::int64_t n = 0; n <= 30; ++n)
        CHECK(mantel(n) == (n / 2) * (n - n / 2));
}
