#pragma once

#include "rtex/graph.hpp"
#include "rtex/report.hpp"

#include <cstdint>
#include <functional>

namespace rtex {

struct OptimizerOptions {
    /// Smallest admissible class size; 1 restricts to proper blow-ups.
    std::int64_t min_weight = 0;
    std::uint64_t node_budget = 1'000'000'000;
    /// 0 = hardware concurrency.
    unsigned threads = 1;
    /// Called every 2^24 nodes with the running node count.
    std::function<void(std::uint64_t)> progress;
};

/// Maximum of sum_{uv in E(base)} w(u) w(v) over integer w >= min_weight
/// with sum w = n and w(I) <= s for every maximal independent set I of the
/// base, i.e. the most edges of an n-vertex blow-up with independence
/// number at most s. All optimal blow-ups are reported up to isomorphism.
///
/// The base must be triangle-free with at most 64 vertices. Throws
/// Infeasible when no weighting satisfies the constraints and ResourceLimit
/// when the node budget runs out.
SearchReport max_blowup_edges(const Graph& base, std::int64_t n, std::int64_t s,
                              const OptimizerOptions& options = {});

} // namespace rtex
