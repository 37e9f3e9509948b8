#pragma once

#include "rtex/graph.hpp"
#include "rtex/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rtex {

/// Integer labelling of a base graph's vertices. Signed values are allowed
/// so that weight arithmetic (differences of labellings) stays closed; a
/// blow-up requires every entry to be nonnegative.
class WeightVector {
  public:
    WeightVector() = default;
    WeightVector(Graph base, std::vector<std::int64_t> weights);

    const Graph& base() const { return base_; }
    const std::vector<std::int64_t>& weights() const { return w_; }
    std::int64_t operator[](int v) const { return w_[v]; }
    std::int64_t total() const { return total_; }
    bool nonnegative() const;

    /// Weight by base-vertex label (see Graph::find_label).
    std::int64_t at(std::string_view label) const;

    WeightVector& operator+=(const WeightVector& o);
    WeightVector& operator-=(const WeightVector& o);
    WeightVector& operator*=(std::int64_t c);
    friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
    friend WeightVector operator*(std::int64_t c, WeightVector a) { return a *= c; }

  private:
    Graph base_;
    std::vector<std::int64_t> w_;
    std::int64_t total_ = 0;
};

/// Replaces each base vertex v by an independent class of w(v) vertices and
/// each base edge by a complete bipartite graph. Classes are laid out in
/// base-vertex order; labels read "<base label>#<copy>".
Graph blow_up(const WeightVector& spec);

/// Sum of w(v) * w(u) over base edges uv.
std::int64_t blowup_edge_count(const WeightVector& spec);

/// Entry v is w(N(v)), the common degree of the vertices of class v.
std::vector<std::int64_t> class_neighborhood_sizes(const WeightVector& spec);

/// Whether the class neighbourhood sizes sum to k times the total weight.
/// Throws NotRegular unless the base is k-regular.
bool check_sum_identity(const WeightVector& spec, int k);

/// ns/2 - x(rs - kn)/2 for a k-regular base on r vertices.
Rational edge_bound(std::int64_t r, std::int64_t k, std::int64_t n, std::int64_t s,
                    std::int64_t x);

/// The unique regularity d >= 2 admitted by the degree window
/// (d+1)n/(3d+2) < delta and Delta < (d-1)n/(3d-4). When several d qualify
/// the largest one is returned.
std::optional<int> infer_regular_parameter(std::int64_t delta, std::int64_t Delta, std::int64_t n);

/// Independence number of the blow-up: max over maximal independent sets I
/// of the base of w(I).
std::int64_t blowup_alpha(const WeightVector& spec);

/// Outcome of the class-size edge bound on a concrete blow-up.
struct EdgeBoundCheck {
    bool hypotheses = false;   ///< every class >= x and every |N(V_i)| <= s
    std::int64_t edges = 0;
    Rational bound;
    bool equality = false;
    /// With equality and rs != kn: some class has size x, and classes larger
    /// than x have |N(V_i)| = s. Vacuously true otherwise.
    bool equality_structure = true;
};
EdgeBoundCheck check_edge_bound(const WeightVector& spec, int k, std::int64_t s, std::int64_t x);

} // namespace rtex
