// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond the Graph container.
#pragma once

#include "rtex/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using rtex::Graph;

inline std::vector<std::uint32_t> rows(const Graph& g) {
    std::vector<std::uint32_t> r(static_cast<std::size_t>(g.order()), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v))
                r[u] |= 1U << v;
    return r;
}

/// Largest independent subset by scanning all 2^n subsets (n <= 24).
inline int alpha(const Graph& g) {
    const int n = g.order();
    auto r = rows(g);
    int best = 0;
    for (std::uint32_t S = 0; S < (1U << n); ++S) {
        int c = __builtin_popcount(S);
        if (c <= best)
            continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if ((S >> v & 1U) && (r[v] & S))
                ok = false;
        if (ok)
            best = c;
    }
    return best;
}

inline bool triangle_free(const Graph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
                    return false;
    return true;
}

/// Smallest number of colours by trying every assignment (n <= 9).
inline int chromatic(const Graph& g) {
    const int n = g.order();
    auto edges = g.edges();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> col(static_cast<std::size_t>(n), 0);
        while (true) {
            bool ok = std::all_of(edges.begin(), edges.end(),
                                  [&](auto e) { return col[e.first] != col[e.second]; });
            if (ok)
                return k;
            int p = 0;
            while (p < n && ++col[p] == k)
                col[p++] = 0;
            if (p == n)
                break;
        }
    }
    return n;
}

/// Isomorphism by trying every bijection (n <= 8).
inline bool isomorphic(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count())
        return false;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                ok = a.adjacent(u, v) == b.adjacent(p[u], p[v]);
        if (ok)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Lexicographically smallest upper-triangle bit string over all vertex
/// orders: a complete invariant (n <= 8).
inline std::vector<bool> min_code(const Graph& g) {
    const int n = g.order();
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<bool> best;
    do {
        std::vector<bool> code;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                code.push_back(g.adjacent(p[u], p[v]));
        if (best.empty() || code < best)
            best = code;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

/// Isomorphism classes of maximal triangle-free graphs on n <= 7 vertices,
/// found by checking every labelled graph.
inline std::size_t count_maximal_triangle_free(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    const std::size_t m = pairs.size();
    std::set<std::vector<bool>> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::uint32_t> r(static_cast<std::size_t>(n), 0);
        for (std::size_t t = 0; t < m; ++t)
            if (mask >> t & 1U) {
                r[pairs[t].first] |= 1U << pairs[t].second;
                r[pairs[t].second] |= 1U << pairs[t].first;
            }
        bool ok = true;
        for (std::size_t t = 0; t < m && ok; ++t) {
            auto [u, v] = pairs[t];
            bool edge = mask >> t & 1U;
            bool common = (r[u] & r[v]) != 0;
            // An edge must not close a triangle; a non-edge must have a
            // common neighbour.
            ok = edge ? !common : common;
        }
        if (!ok)
            continue;
        Graph g(n);
        for (std::size_t t = 0; t < m; ++t)
            if (mask >> t & 1U)
                g.add_edge(pairs[t].first, pairs[t].second);
        classes.insert(min_code(g));
    }
    return classes.size();
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

/// Random triangle-free graph: random edge order, keep edges that close no
/// triangle.
inline Graph random_triangle_free(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> cand;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            cand.emplace_back(u, v);
    std::shuffle(cand.begin(), cand.end(), rng);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (auto [u, v] : cand)
        if (coin(rng) && !(g.neighbors(u) & g.neighbors(v)).any())
            g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Edge count of the blow-up, summed vertex by vertex over the
/// materialised graph's classes (independent of the library formula).
inline std::int64_t blowup_edges_direct(const Graph& base, const std::vector<std::int64_t>& w) {
    std::int64_t e = 0;
    for (int u = 0; u < base.order(); ++u)
        for (int v = u + 1; v < base.order(); ++v)
            if (base.adjacent(u, v))
                for (std::int64_t a = 0; a < w[u]; ++a)
                    e += w[v];
    return e;
}

} // namespace oracle
