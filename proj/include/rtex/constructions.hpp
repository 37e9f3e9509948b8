#pragma once

#include "rtex/blowup.hpp"
#include "rtex/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rtex {

// Small named graphs.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph mycielskian(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Andrasfai graph: vertices v0..v_{3k-2}, v_i ~ v_j iff k <= |i-j| <= 2k-1.
Graph andrasfai(int k);

/// Cayley graph of Z_m: i ~ j iff (i - j) mod m lies in S. S must be
/// symmetric and avoid 0 (AsymmetricConnectionSet / BadParams otherwise).
Graph cayley_cyclic(int m, std::span<const int> S);

/// A vertex of the Andrasfai graph of parameter k whose neighbourhood
/// contains the independent set S: rotate so that v_k is in S, take the
/// extreme indices i <= j, answer v_{j+k}.
int independent_set_cover(int k, std::span<const int> S);

/// Homomorphism of (Andrasfai k) - v_k into a blow-up of (Andrasfai k-1):
/// v_0 joins the class of v_1 and v_{2k} joins the class of v_{2k-1}, the
/// remaining vertices keep their class, and the classes are indexed by the
/// copy of (Andrasfai k-1) sitting on the vertices other than v_0, v_k, v_{2k}.
struct DeletionEmbedding {
    int k = 0;
    /// image[j] for each vertex j != k of the larger graph; image[k] = -1.
    std::vector<int> image;
    /// Number of preimages of each vertex of the smaller graph.
    std::vector<std::int64_t> class_sizes;
    /// Every edge of the larger graph minus v_k maps to an edge.
    bool valid = false;
};
DeletionEmbedding andrasfai_deletion_embedding(int k);

/// Order-preserving index map from the vertices of (Andrasfai k) other than
/// v_0, v_k, v_{2k} onto the vertices of (Andrasfai k-1); -1 on the three
/// deleted vertices.
std::vector<int> andrasfai_reduction_map(int k);

// Vega graphs. Vertex slots in the full graph are x, y, a, b, c, u, v, w,
// then v0..v_{3i-2}.
namespace vega_slot {
inline constexpr int x = 0, y = 1, a = 2, b = 3, c = 4, u = 5, v = 6, w = 7, core = 8;
}

/// The full Vega graph with both optional vertices present.
Graph vega_base(int i);

/// Vega graph: the full graph minus y when mu = 1 and minus v_{2i-1} when
/// nu = 1. Triangle-freeness and the degree pattern are checked on every
/// call.
Graph vega(int i, int mu, int nu);

/// Regularity parameter 9i - (6 + mu + nu).
int vega_k(int i, int mu, int nu);

/// The correction functions over the full Vega graph.
WeightVector vega_f(int i);
WeightVector vega_g(int i);

/// omega_00 - mu f - nu g, over the full Vega graph. Deleted vertices carry
/// weight 0.
WeightVector omega(int i, int mu, int nu);

/// blow_up(omega(i, mu, nu)): k-regular on 3k - 1 vertices.
Graph vega_regular_blowup(int i, int mu, int nu);

} // namespace rtex
