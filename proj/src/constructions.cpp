#include "rtex/constructions.hpp"

#include "rtex/error.hpp"
#include "rtex/invariants.hpp"

#include <algorithm>
#include <set>

namespace rtex {

namespace {

std::vector<std::string> indexed_labels(const std::string& prefix, int n) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        out.push_back(prefix + std::to_string(j));
    return out;
}

void require_vega_params(int i, int mu, int nu) {
    if (i < 2 || (mu != 0 && mu != 1) || (nu != 0 && nu != 1))
        throw BadParams("Vega graph needs i >= 2 and mu, nu in {0,1} (got i=" +
                        std::to_string(i) + " mu=" + std::to_string(mu) +
                        " nu=" + std::to_string(nu) + ")");
}

int andrasfai_order(int k) { return 3 * k - 1; }

} // namespace

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw BadParams("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph mycielskian(const Graph& g) {
    const int n = g.order();
    if (2 * n + 1 > kCapacity)
        throw CapacityExceeded("Mycielskian too large");
    Graph m(2 * n + 1);
    for (auto [u, v] : g.edges()) {
        m.add_edge(u, v);
        m.add_edge(u, n + v);
        m.add_edge(v, n + u);
    }
    for (int v = 0; v < n; ++v)
        m.add_edge(n + v, 2 * n);
    return m;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > kCapacity)
        throw CapacityExceeded("disjoint union too large");
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(a.order() + u, a.order() + v);
    return g;
}

Graph andrasfai(int k) {
    if (k < 1)
        throw BadParams("Andrasfai graph needs k >= 1");
    const int n = andrasfai_order(k);
    if (n > kCapacity)
        throw CapacityExceeded("Andrasfai graph too large");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + k; j < n && j - i <= 2 * k - 1; ++j)
            g.add_edge(i, j);
    g.set_labels(indexed_labels("v", n));
    return g;
}

Graph cayley_cyclic(int m, std::span<const int> S) {
    if (m < 1)
        throw BadParams("modulus must be positive");
    std::set<int> conn;
    for (int s : S) {
        int r = ((s % m) + m) % m;
        if (r == 0)
            throw BadParams("connection set contains 0");
        conn.insert(r);
    }
    for (int r : conn)
        if (!conn.count((m - r) % m))
            throw AsymmetricConnectionSet("connection set is not closed under negation (" +
                                          std::to_string(r) + " without " +
                                          std::to_string(m - r) + ")");
    Graph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (conn.count((j - i) % m))
                g.add_edge(i, j);
    return g;
}

int independent_set_cover(int k, std::span<const int> S) {
    if (S.empty())
        throw EmptySet("independent set is empty");
    const int n = andrasfai_order(k);
    Graph g = andrasfai(k);
    for (int v : S)
        if (v < 0 || v >= n)
            throw OutOfRange("vertex " + std::to_string(v) + " outside the Andrasfai graph");
    for (std::size_t p = 0; p < S.size(); ++p)
        for (std::size_t q = p + 1; q < S.size(); ++q)
            if (g.adjacent(S[p], S[q]))
                throw NotIndependent("v" + std::to_string(S[p]) + " ~ v" + std::to_string(S[q]));
    // Rotation by r is an automorphism; after it S contains v_k and lies in
    // the interval spanned by its extreme indices i <= j, all of whose
    // elements are within distance k - 1 of each other.
    const int r = ((k - S[0]) % n + n) % n;
    int lo = n, hi = -1;
    for (int v : S) {
        int rv = (v + r) % n;
        lo = std::min(lo, rv);
        hi = std::max(hi, rv);
    }
    const int w = ((hi + k - r) % n + n) % n;
    for (int v : S)
        if (!g.adjacent(v, w))
            throw Error("independent_set_cover: recipe produced a non-covering vertex");
    return w;
}

std::vector<int> andrasfai_reduction_map(int k) {
    if (k < 2)
        throw BadParams("reduction needs k >= 2");
    const int n = andrasfai_order(k);
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int j = 0; j < n; ++j)
        if (j != 0 && j != k && j != 2 * k)
            map[j] = next++;
    return map;
}

DeletionEmbedding andrasfai_deletion_embedding(int k) {
    DeletionEmbedding out;
    out.k = k;
    const std::vector<int> reduce = andrasfai_reduction_map(k);
    const Graph big = andrasfai(k);
    const Graph small = andrasfai(k - 1);
    const int n = big.order();
    out.image.assign(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < n; ++j) {
        if (j == k)
            continue;
        if (j == 0)
            out.image[j] = reduce[1];
        else if (j == 2 * k)
            out.image[j] = reduce[2 * k - 1];
        else
            out.image[j] = reduce[j];
    }
    out.class_sizes.assign(static_cast<std::size_t>(small.order()), 0);
    for (int j = 0; j < n; ++j)
        if (out.image[j] >= 0)
            ++out.class_sizes[out.image[j]];
    out.valid = true;
    for (auto [p, q] : big.edges())
        if (p != k && q != k)
            out.valid = out.valid && small.adjacent(out.image[p], out.image[q]);
    return out;
}

int vega_k(int i, int mu, int nu) {
    require_vega_params(i, mu, nu);
    return 9 * i - (6 + mu + nu);
}

Graph vega_base(int i) {
    require_vega_params(i, 0, 0);
    using namespace vega_slot;
    const int m = 3 * i - 1;
    const int n = core + m;
    if (n > kCapacity)
        throw CapacityExceeded("Vega graph too large");
    Graph g(n);
    const Graph gamma = andrasfai(i);
    for (auto [p, q] : gamma.edges())
        g.add_edge(core + p, core + q);
    // Hexagon a-v-c-u-b-w-a.
    const int hex[6] = {a, v, c, u, b, w};
    for (int t = 0; t < 6; ++t)
        g.add_edge(hex[t], hex[(t + 1) % 6]);
    g.add_edge(x, y);
    for (int z : {a, b, c})
        g.add_edge(x, z);
    for (int z : {u, v, w})
        g.add_edge(y, z);
    for (int j = 0; j < m; ++j) {
        const int seg = j < i ? 0 : j < 2 * i ? 1 : 2;
        const int p = seg == 0 ? a : seg == 1 ? b : c;
        const int q = seg == 0 ? u : seg == 1 ? v : w;
        g.add_edge(p, core + j);
        g.add_edge(q, core + j);
    }
    std::vector<std::string> labels = {"x", "y", "a", "b", "c", "u", "v", "w"};
    for (auto& l : indexed_labels("v", m))
        labels.push_back(std::move(l));
    g.set_labels(std::move(labels));

    // Post-hoc check of the transcription above.
    std::vector<int> expected(static_cast<std::size_t>(n), i + 2);
    expected[x] = expected[y] = 4;
    for (int z : {a, b, u, v})
        expected[z] = i + 3;
    bool ok = is_triangle_free(g) &&
              g.edge_count() == static_cast<std::int64_t>(i) * (3 * i - 1) / 2 + 6 * i + 11;
    for (int z = 0; z < n && ok; ++z)
        ok = g.degree(z) == expected[z];
    if (!ok)
        throw Error("Vega construction failed its self-check for i=" + std::to_string(i));
    return g;
}

Graph vega(int i, int mu, int nu) {
    require_vega_params(i, mu, nu);
    Graph full = vega_base(i);
    std::vector<int> drop;
    if (mu)
        drop.push_back(vega_slot::y);
    if (nu)
        drop.push_back(vega_slot::core + 2 * i - 1);
    Graph g = full.without_vertices(drop);
    if (!is_triangle_free(g) || g.order() != 3 * i + 7 - mu - nu)
        throw Error("Vega construction failed its self-check");
    return g;
}

WeightVector vega_f(int i) {
    using namespace vega_slot;
    Graph base = vega_base(i);
    std::vector<std::int64_t> f(static_cast<std::size_t>(base.order()), 0);
    for (int z : {u, v, w, y})
        f[z] = 1;
    f[x] = -1;
    return WeightVector(std::move(base), std::move(f));
}

WeightVector vega_g(int i) {
    using namespace vega_slot;
    Graph base = vega_base(i);
    std::vector<std::int64_t> g(static_cast<std::size_t>(base.order()), 0);
    for (int z : {b, v, core + i - 1, core + 2 * i - 1})
        g[z] = 1;
    g[core] = -1;
    return WeightVector(std::move(base), std::move(g));
}

WeightVector omega(int i, int mu, int nu) {
    require_vega_params(i, mu, nu);
    using namespace vega_slot;
    Graph base = vega_base(i);
    std::vector<std::int64_t> w00(static_cast<std::size_t>(base.order()), 3);
    w00[x] = w00[y] = 1;
    for (int z : {a, b, u, v})
        w00[z] = 3 * i - 2;
    w00[c] = w00[w] = 3 * i - 3;
    w00[core] = w00[core + 2 * i - 1] = 1;
    WeightVector out(std::move(base), std::move(w00));
    if (mu)
        out -= vega_f(i);
    if (nu)
        out -= vega_g(i);
    return out;
}

Graph vega_regular_blowup(int i, int mu, int nu) { return blow_up(omega(i, mu, nu)); }

} // namespace rtex
