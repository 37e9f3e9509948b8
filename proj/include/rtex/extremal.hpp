#pragma once

#include "rtex/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace rtex {

/// k(k-1)n^2/2 - k(3k-4)ns + (3k-4)(3k-1)s^2/2.
Rational g_k(std::int64_t n, std::int64_t s, std::int64_t k);

/// The same quantity as ns/2 - ((k-1)n - (3k-4)s)((3k-1)s - kn)/2.
Rational g_k_factored(std::int64_t n, std::int64_t s, std::int64_t k);

struct GMin {
    Rational value;
    /// Smallest minimising k; empty in the Mantel regime s > floor(n/2),
    /// where value is floor(n^2/4).
    std::optional<int> argmin;
};

/// min over 1 <= k <= 3n of g_k(n, s). Throws OutOfRange when 3s <= n.
GMin g_min(std::int64_t n, std::int64_t s);

/// k / (3k - 1).
Rational critical_point(std::int64_t k);

/// [k/(3k-1), k/(3k-1) + 1/(600 k^6)].
std::pair<Rational, Rational> theorem_window(std::int64_t k);

/// (3k-1)s - kn.
std::int64_t lambda(std::int64_t n, std::int64_t s, std::int64_t k);

/// ((k-1)n - (3k-4)s, 3s - n).
std::pair<std::int64_t, std::int64_t> class_size_bounds(std::int64_t n, std::int64_t s,
                                                        std::int64_t k);

/// True iff s lies outside the open interval (kn/(3k-1), (k-1)n/(3k-4)).
bool fact_s_range_bound(std::int64_t n, std::int64_t s, std::int64_t k);

/// Whether kn/(3k-1) <= s <= (k-1)n/(3k-4), the range on which the k-th
/// conjectured extremal families are defined.
bool in_family_window(std::int64_t n, std::int64_t s, std::int64_t k);

/// floor(n^2 / 4).
std::int64_t mantel(std::int64_t n);

} // namespace rtex
