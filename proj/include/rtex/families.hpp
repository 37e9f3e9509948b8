#pragma once

#include "rtex/blowup.hpp"
#include "rtex/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rtex {

struct FamilyParams {
    char family = 'G';  ///< 'G' (Andrasfai blow-ups) or 'H' (Vega blow-ups)
    int k = 0;
    std::optional<int> i, mu, nu;
    std::optional<std::int64_t> a, b;
    /// Defining clause of a Vega member: 'a' (critical point), 'b' or 'c'.
    std::optional<char> clause;
};

struct FamilyMember {
    WeightVector weights;  ///< over the base graph
    FamilyParams params;
    std::int64_t n = 0, s = 0;
    std::int64_t edges = 0;
    /// edges == g_k(n, s).
    bool edge_check_ok = false;
    std::string canonical;  ///< canonical form of the blow-up

    const Graph& base() const { return weights.base(); }
    /// The blow-up itself (CapacityExceeded beyond kCapacity vertices).
    Graph graph() const { return blow_up(weights); }
};

/// Blow-ups of the Andrasfai graph of parameter k with class sizes L on v_0
/// and v_k, a and b on v_{2k-1} and v_{2k} (a <= b, a + b = L + U), and U
/// elsewhere, where (L, U) = class_size_bounds(n, s, k). Empty outside
/// kn/(3k-1) <= s <= (k-1)n/(3k-4). Pairwise non-isomorphic.
std::vector<FamilyMember> family_G(std::int64_t n, std::int64_t s, int k);

/// Vega blow-ups for k >= 10. At s = kn/(3k-1): (3s-n) omega_{mu nu} for
/// every (mu, nu) with k = 9i - (6+mu+nu). Above it, up to (k-1)n/(3k-4):
/// (3s-n) omega_{0 nu} - lambda f when k = 9i - (6+nu), and
/// (3s-n) omega_{mu 0} - lambda g when k = 9i - (6+mu). Candidates with a
/// negative class are skipped and described in `diagnostics`.
std::vector<FamilyMember> family_H(std::int64_t n, std::int64_t s, int k,
                                   std::vector<std::string>* diagnostics = nullptr);

struct Classification {
    enum class Kind { G, H, Neither };
    Kind kind = Kind::Neither;
    std::optional<FamilyMember> match;
    std::string reason;
};

/// Looks g up among the family members for every k whose window contains s.
/// Graphs that are not triangle-free, have the wrong order, or have
/// independence number above s are rejected before any comparison.
Classification classify_extremal(const Graph& g, std::int64_t n, std::int64_t s);

std::string to_string(Classification::Kind kind);

} // namespace rtex
