#pragma once

#include "rtex/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rtex {

bool is_triangle_free(const Graph& g);
bool is_bipartite(const Graph& g);

/// True iff every non-adjacent pair has a common neighbour. Throws
/// NotTriangleFree when g contains a triangle.
bool is_maximal_triangle_free(const Graph& g);

/// Exact independence number (branch and bound on the twin quotient with a
/// greedy clique-cover bound).
int independence_number(const Graph& g);

/// Exact maximum total weight of an independent set; weights must be >= 0.
std::int64_t max_weight_independent_set(const Graph& g, std::span<const std::int64_t> weights);

/// Exact chromatic number, n >= 1 (iterative deepening DSATUR backtracking).
int chromatic_number(const Graph& g);

/// Every maximal independent set of g (Bron-Kerbosch with pivoting on the
/// complement), in discovery order.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

/// Vertices with identical neighbourhoods collapsed into weighted classes.
struct TwinQuotient {
    Graph quotient;
    std::vector<int> class_of;         ///< original vertex -> quotient vertex
    std::vector<std::int64_t> sizes;   ///< quotient vertex -> class size
};
TwinQuotient twin_quotient(const Graph& g);

} // namespace rtex
