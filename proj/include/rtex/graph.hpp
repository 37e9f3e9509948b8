#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rtex {

/// Maximum number of vertices of a Graph. Rows are fixed-width bitsets of
/// this many bits.
inline constexpr int kCapacity = 256;

/// Fixed-width set of vertex indices in [0, kCapacity).
class VertexSet {
  public:
    static constexpr int kWords = kCapacity / 64;

    constexpr VertexSet() = default;

    /// The set {0, ..., n-1}.
    static VertexSet prefix(int n) {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.words_[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        return s;
    }

    void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

    int count() const {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }
    bool none() const { return !any(); }

    /// Smallest element, or -1 when empty.
    int first() const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w])
                return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    /// Smallest element greater than v, or -1.
    int next(int v) const {
        ++v;
        if (v >= kCapacity)
            return -1;
        int w = v >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (word)
                return w * 64 + std::countr_zero(word);
            if (++w == kWords)
                return -1;
            word = words_[w];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                f(w * 64 + std::countr_zero(word));
                word &= word - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w)
            words_[w] |= o.words_[w];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    bool intersects(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w])
                return true;
        return false;
    }
    bool subset_of(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w])
                return false;
        return true;
    }

    const std::array<std::uint64_t, kWords>& words() const { return words_; }

  private:
    std::array<std::uint64_t, kWords> words_{};
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows and
/// optional unique symbolic vertex labels.
///
/// Equality compares order and adjacency only; labels are annotations.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int order() const noexcept { return n_; }
    std::int64_t edge_count() const;

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    VertexSet vertices() const { return VertexSet::prefix(n_); }

    /// Adds the edge uv. Loops and out-of-range endpoints are rejected.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int min_degree() const;
    int max_degree() const;
    /// The common degree when the graph is regular (and nonempty).
    std::optional<int> regular_degree() const;

    std::vector<std::pair<int, int>> edges() const;

    /// Subgraph induced by `keep`, in the given order; labels are carried.
    Graph induced(std::span<const int> keep) const;
    Graph without_vertex(int v) const;
    Graph without_vertices(std::span<const int> drop) const;
    /// Vertex i of the result is vertex order[i] of this graph.
    Graph permuted(std::span<const int> order) const;
    /// Appends a vertex adjacent to `nbrs` and returns its index.
    int add_vertex(const VertexSet& nbrs);

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Label of v, or its decimal index when the graph is unlabeled.
    std::string label(int v) const;
    /// Requires one label per vertex, all distinct.
    void set_labels(std::vector<std::string> labels);
    void clear_labels() { labels_.clear(); }
    std::optional<int> find_label(std::string_view label) const;

    friend bool operator==(const Graph& a, const Graph& b);

  private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

/// graph6 encoding of g (no trailing newline).
std::string to_graph6(const Graph& g);
/// Parses a graph6 line; an optional ">>graph6<<" header and trailing
/// whitespace are accepted.
Graph from_graph6(std::string_view line);

} // namespace rtex
