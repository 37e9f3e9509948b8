#include "rtex/extremal.hpp"

#include "rtex/error.hpp"

namespace rtex {

Rational g_k(std::int64_t n, std::int64_t s, std::int64_t k) {
    const BigInt N(n), S(s), K(k);
    BigInt twice = K * (K - 1) * N * N - 2 * K * (3 * K - 4) * N * S + (3 * K - 4) * (3 * K - 1) * S * S;
    return Rational(twice) / 2;
}

Rational g_k_factored(std::int64_t n, std::int64_t s, std::int64_t k) {
    const BigInt N(n), S(s), K(k);
    BigInt lower = (K - 1) * N - (3 * K - 4) * S;
    BigInt slack = (3 * K - 1) * S - K * N;
    return Rational(N * S - lower * slack) / 2;
}

std::int64_t mantel(std::int64_t n) { return n * n / 4; }

GMin g_min(std::int64_t n, std::int64_t s) {
    if (n < 1 || 3 * s <= n)
        throw OutOfRange("g_min needs s > n/3 (n=" + std::to_string(n) + " s=" +
                         std::to_string(s) + ")");
    if (s > n / 2)
        return {Rational(mantel(n)), std::nullopt};
    GMin best{g_k(n, s, 1), 1};
    for (std::int64_t k = 2; k <= 3 * n; ++k) {
        Rational v = g_k(n, s, k);
        if (v < best.value)
            best = {v, static_cast<int>(k)};
    }
    return best;
}

Rational critical_point(std::int64_t k) { return Rational(k, 3 * k - 1); }

std::pair<Rational, Rational> theorem_window(std::int64_t k) {
    BigInt k6 = BigInt(k) * k * k * k * k * k;
    Rational lo = critical_point(k);
    return {lo, lo + Rational(BigInt(1), 600 * k6)};
}

std::int64_t lambda(std::int64_t n, std::int64_t s, std::int64_t k) {
    return (3 * k - 1) * s - k * n;
}

std::pair<std::int64_t, std::int64_t> class_size_bounds(std::int64_t n, std::int64_t s,
                                                        std::int64_t k) {
    return {(k - 1) * n - (3 * k - 4) * s, 3 * s - n};
}

bool fact_s_range_bound(std::int64_t n, std::int64_t s, std::int64_t k) {
    if (k < 2)
        throw BadParams("k must be at least 2");
    Rational S(s);
    bool above_low = S > Rational(k * n, 3 * k - 1);
    bool below_high = S < Rational((k - 1) * n, 3 * k - 4);
    return !(above_low && below_high);
}

bool in_family_window(std::int64_t n, std::int64_t s, std::int64_t k) {
    if (k < 2)
        return false;
    // kn <= (3k-1)s and (3k-4)s <= (k-1)n, cross-multiplied.
    return k * n <= (3 * k - 1) * s && (3 * k - 4) * s <= (k - 1) * n;
}

} // namespace rtex
