#include "rtex/invariants.hpp"

#include "rtex/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rtex {

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        bool hit = false;
        g.neighbors(u).for_each([&](int v) {
            if (!hit && v > u && g.neighbors(u).intersects(g.neighbors(v)))
                hit = true;
        });
        if (hit)
            return false;
    }
    return true;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> stack;
    for (int root = 0; root < g.order(); ++root) {
        if (side[root] >= 0)
            continue;
        side[root] = 0;
        stack.push_back(root);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            bool ok = true;
            g.neighbors(u).for_each([&](int v) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                } else if (side[v] == side[u]) {
                    ok = false;
                }
            });
            if (!ok)
                return false;
        }
    }
    return true;
}

bool is_maximal_triangle_free(const Graph& g) {
    if (!is_triangle_free(g))
        throw NotTriangleFree("graph contains a triangle");
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v) && !g.neighbors(u).intersects(g.neighbors(v)))
                return false;
    return true;
}

TwinQuotient twin_quotient(const Graph& g) {
    TwinQuotient tq;
    tq.class_of.assign(static_cast<std::size_t>(g.order()), -1);
    std::map<std::array<std::uint64_t, VertexSet::kWords>, int> ids;
    std::vector<int> reps;
    for (int v = 0; v < g.order(); ++v) {
        auto [it, fresh] = ids.try_emplace(g.neighbors(v).words(), static_cast<int>(reps.size()));
        if (fresh) {
            reps.push_back(v);
            tq.sizes.push_back(0);
        }
        tq.class_of[v] = it->second;
        ++tq.sizes[it->second];
    }
    tq.quotient = g.induced(reps);
    tq.quotient.clear_labels();
    return tq;
}

namespace {

class WeightedIndependentSet {
  public:
    WeightedIndependentSet(const Graph& g, std::span<const std::int64_t> w) : g_(g), w_(w) {
        by_weight_.resize(static_cast<std::size_t>(g.order()));
        std::iota(by_weight_.begin(), by_weight_.end(), 0);
        std::stable_sort(by_weight_.begin(), by_weight_.end(),
                         [&](int a, int b) { return w_[a] > w_[b]; });
    }

    std::int64_t solve() {
        VertexSet all = g_.vertices();
        // Greedy seed: heaviest-first maximal independent set.
        VertexSet cand = all;
        std::int64_t seed = 0;
        for (int v : by_weight_)
            if (cand.test(v)) {
                seed += w_[v];
                cand -= g_.neighbors(v);
                cand.reset(v);
            }
        best_ = seed;
        expand(all, 0);
        return best_;
    }

  private:
    std::int64_t cover_bound(VertexSet p) const {
        std::int64_t bound = 0;
        for (int v : by_weight_) {
            if (!p.test(v))
                continue;
            bound += w_[v];
            p.reset(v);
            VertexSet cand = p & g_.neighbors(v);
            while (cand.any()) {
                int u = -1;
                for (int x : by_weight_)
                    if (cand.test(x)) {
                        u = x;
                        break;
                    }
                p.reset(u);
                cand.reset(u);
                cand &= g_.neighbors(u);
            }
        }
        return bound;
    }

    void expand(VertexSet p, std::int64_t cur) {
        VertexSet isolated;
        p.for_each([&](int v) {
            if (!g_.neighbors(v).intersects(p))
                isolated.set(v);
        });
        isolated.for_each([&](int v) { cur += w_[v]; });
        p -= isolated;
        if (p.none()) {
            best_ = std::max(best_, cur);
            return;
        }
        if (cur + cover_bound(p) <= best_)
            return;
        int pick = -1;
        int pick_deg = -1;
        p.for_each([&](int v) {
            int d = (g_.neighbors(v) & p).count();
            if (d > pick_deg || (d == pick_deg && w_[v] > w_[pick])) {
                pick = v;
                pick_deg = d;
            }
        });
        VertexSet with = p - g_.neighbors(pick);
        with.reset(pick);
        expand(with, cur + w_[pick]);
        p.reset(pick);
        expand(p, cur);
    }

    const Graph& g_;
    std::span<const std::int64_t> w_;
    std::vector<int> by_weight_;
    std::int64_t best_ = 0;
};

} // namespace

std::int64_t max_weight_independent_set(const Graph& g, std::span<const std::int64_t> weights) {
    if (static_cast<int>(weights.size()) != g.order())
        throw BadParams("weight vector length does not match graph order");
    for (auto w : weights)
        if (w < 0)
            throw NegativeWeight("independent-set weights must be nonnegative");
    if (g.order() == 0)
        return 0;
    return WeightedIndependentSet(g, weights).solve();
}

int independence_number(const Graph& g) {
    if (g.order() == 0)
        return 0;
    TwinQuotient tq = twin_quotient(g);
    return static_cast<int>(max_weight_independent_set(tq.quotient, tq.sizes));
}

namespace {

class Colouring {
  public:
    explicit Colouring(const Graph& g) : g_(g), colour_(static_cast<std::size_t>(g.order()), -1) {}

    int greedy_dsatur() {
        std::fill(colour_.begin(), colour_.end(), -1);
        int used = 0;
        for (int step = 0; step < g_.order(); ++step) {
            int v = select();
            VertexSet mask = neighbour_colours(v);
            int c = 0;
            while (mask.test(c))
                ++c;
            colour_[v] = c;
            used = std::max(used, c + 1);
        }
        return used;
    }

    bool colourable(int k) {
        std::fill(colour_.begin(), colour_.end(), -1);
        return extend(0, 0, k);
    }

  private:
    VertexSet neighbour_colours(int v) const {
        VertexSet mask;
        g_.neighbors(v).for_each([&](int u) {
            if (colour_[u] >= 0)
                mask.set(colour_[u]);
        });
        return mask;
    }

    int select() const {
        int best = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (colour_[v] >= 0)
                continue;
            int sat = neighbour_colours(v).count();
            int deg = 0;
            g_.neighbors(v).for_each([&](int u) { deg += colour_[u] < 0; });
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool extend(int coloured, int used, int k) {
        if (coloured == g_.order())
            return true;
        int v = select();
        VertexSet mask = neighbour_colours(v);
        if (mask.count() >= k)
            return false;
        for (int c = 0; c < std::min(k, used + 1); ++c) {
            if (mask.test(c))
                continue;
            colour_[v] = c;
            if (extend(coloured + 1, std::max(used, c + 1), k))
                return true;
        }
        colour_[v] = -1;
        return false;
    }

    const Graph& g_;
    std::vector<int> colour_;
};

} // namespace

int chromatic_number(const Graph& g) {
    if (g.order() == 0)
        throw BadParams("chromatic number needs at least one vertex");
    if (g.edge_count() == 0)
        return 1;
    if (is_bipartite(g))
        return 2;
    Graph q = twin_quotient(g).quotient;
    Colouring col(q);
    int upper = col.greedy_dsatur();
    for (int k = 3; k < upper; ++k)
        if (col.colourable(k))
            return k;
    return upper;
}

namespace {

void bron_kerbosch(const std::vector<VertexSet>& non_adj, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    int pivot = -1;
    int most = -1;
    (p | x).for_each([&](int u) {
        int c = (p & non_adj[u]).count();
        if (c > most) {
            most = c;
            pivot = u;
        }
    });
    VertexSet branch = p - non_adj[pivot];
    branch.for_each([&](int v) {
        VertexSet rv = r;
        rv.set(v);
        bron_kerbosch(non_adj, rv, p & non_adj[v], x & non_adj[v], out);
        p.reset(v);
        x.set(v);
    });
}

} // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.order() == 0) {
        out.emplace_back();
        return out;
    }
    VertexSet all = g.vertices();
    std::vector<VertexSet> non_adj(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        non_adj[v] = all - g.neighbors(v);
        non_adj[v].reset(v);
    }
    bron_kerbosch(non_adj, VertexSet{}, all, VertexSet{}, out);
    return out;
}

} // namespace rtex
