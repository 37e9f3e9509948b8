#include "rtex/canonical.hpp"

#include "rtex/error.hpp"
#include "rtex/invariants.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <numeric>

namespace rtex {

namespace {

/// Ordered partition of the vertex set: `lab` lists vertices by position and
/// `cell_end[p]` marks the last position of each cell.
struct Partition {
    std::vector<int> lab;
    std::vector<char> cell_end;
    int cells = 0;

    int size() const { return static_cast<int>(lab.size()); }
    bool discrete() const { return cells == size(); }
    int end_of(int start) const {
        int e = start;
        while (!cell_end[e])
            ++e;
        return e;
    }
};

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

  private:
    std::vector<int> parent_;
};

Partition colour_partition(int n, std::span<const std::int64_t> colours) {
    Partition p;
    p.lab.resize(static_cast<std::size_t>(n));
    std::iota(p.lab.begin(), p.lab.end(), 0);
    p.cell_end.assign(static_cast<std::size_t>(n), 0);
    if (n == 0)
        return p;
    if (colours.empty()) {
        p.cell_end[n - 1] = 1;
        p.cells = 1;
        return p;
    }
    if (static_cast<int>(colours.size()) != n)
        throw BadParams("colour vector length does not match graph order");
    std::stable_sort(p.lab.begin(), p.lab.end(),
                     [&](int a, int b) { return colours[a] < colours[b]; });
    for (int i = 0; i < n; ++i)
        if (i == n - 1 || colours[p.lab[i]] != colours[p.lab[i + 1]]) {
            p.cell_end[i] = 1;
            ++p.cells;
        }
    return p;
}

/// Refines `p` to the coarsest equitable partition finer than it, using the
/// cells starting at `splitters` as the initial work list.
void refine(const Graph& g, Partition& p, std::deque<int> splitters) {
    const int n = p.size();
    std::vector<char> queued(static_cast<std::size_t>(n), 0);
    for (int s : splitters)
        queued[s] = 1;
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    while (!splitters.empty() && !p.discrete()) {
        int a = splitters.front();
        splitters.pop_front();
        queued[a] = 0;
        VertexSet w;
        for (int i = a, e = p.end_of(a); i <= e; ++i)
            w.set(p.lab[i]);
        for (int c = 0; c < n;) {
            int e = p.end_of(c);
            if (e > c) {
                bool uniform = true;
                for (int i = c; i <= e; ++i) {
                    count[p.lab[i]] = (g.neighbors(p.lab[i]) & w).count();
                    uniform = uniform && count[p.lab[i]] == count[p.lab[c]];
                }
                if (!uniform) {
                    std::stable_sort(p.lab.begin() + c, p.lab.begin() + e + 1,
                                     [&](int x, int y) { return count[x] < count[y]; });
                    int start = c;
                    for (int i = c; i < e; ++i)
                        if (count[p.lab[i]] != count[p.lab[i + 1]]) {
                            p.cell_end[i] = 1;
                            ++p.cells;
                            if (!queued[start]) {
                                queued[start] = 1;
                                splitters.push_back(start);
                            }
                            start = i + 1;
                        }
                    if (!queued[start]) {
                        queued[start] = 1;
                        splitters.push_back(start);
                    }
                }
            }
            c = e + 1;
        }
    }
}

void refine_all(const Graph& g, Partition& p) {
    std::deque<int> all;
    for (int c = 0; c < p.size(); c = p.end_of(c) + 1)
        all.push_back(c);
    refine(g, p, std::move(all));
}

using Certificate = std::vector<std::uint64_t>;

Certificate certificate(const Graph& g, const std::vector<int>& lab) {
    const int n = static_cast<int>(lab.size());
    Certificate cert(static_cast<std::size_t>((n * (n - 1) / 2 + 63) / 64), 0);
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i) {
        const VertexSet& row = g.neighbors(lab[i]);
        for (int j = i + 1; j < n; ++j, ++bit)
            if (row.test(lab[j]))
                cert[bit >> 6] |= std::uint64_t{1} << (bit & 63);
    }
    return cert;
}

class CanonicalSearch {
  public:
    static constexpr int kNoJump = INT_MAX;

    explicit CanonicalSearch(const Graph& g) : g_(g) {}

    Labeling run(Partition root) {
        refine_all(g_, root);
        std::vector<int> path;
        search(std::move(root), path);
        Labeling out;
        out.order = best_lab_;
        out.automorphisms_found = automorphisms_.size();
        UnionFind uf(g_.order());
        for (const auto& gamma : automorphisms_)
            for (int x = 0; x < g_.order(); ++x)
                uf.unite(x, gamma[x]);
        out.orbit.resize(static_cast<std::size_t>(g_.order()));
        for (int x = 0; x < g_.order(); ++x)
            out.orbit[x] = uf.find(x);
        return out;
    }

  private:
    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t i = 0;
        while (i < a.size() && i < b.size() && a[i] == b[i])
            ++i;
        return static_cast<int>(i);
    }

    void record(const std::vector<int>& lab, const std::vector<int>& ref) {
        std::vector<int> gamma(static_cast<std::size_t>(g_.order()));
        bool identity = true;
        for (std::size_t i = 0; i < lab.size(); ++i) {
            gamma[lab[i]] = ref[i];
            identity = identity && lab[i] == ref[i];
        }
        if (!identity)
            automorphisms_.push_back(std::move(gamma));
    }

    int leaf(const Partition& p, const std::vector<int>& path) {
        Certificate cert = certificate(g_, p.lab);
        if (!have_first_) {
            have_first_ = true;
            first_cert_ = best_cert_ = std::move(cert);
            first_lab_ = best_lab_ = p.lab;
            first_path_ = best_path_ = path;
            return kNoJump;
        }
        if (cert == first_cert_) {
            record(p.lab, first_lab_);
            return common_prefix(path, first_path_);
        }
        if (cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_lab_ = p.lab;
            best_path_ = path;
            return kNoJump;
        }
        if (cert == best_cert_) {
            record(p.lab, best_lab_);
            return common_prefix(path, best_path_);
        }
        return kNoJump;
    }

    int search(Partition p, std::vector<int>& path) {
        if (p.discrete())
            return leaf(p, path);
        // Target: first smallest non-singleton cell.
        int target = -1;
        int target_size = INT_MAX;
        for (int c = 0; c < p.size();) {
            int e = p.end_of(c);
            if (e > c && e - c + 1 < target_size) {
                target = c;
                target_size = e - c + 1;
            }
            c = e + 1;
        }
        const int depth = static_cast<int>(path.size());
        std::vector<int> members(p.lab.begin() + target, p.lab.begin() + target + target_size);
        std::vector<int> explored;
        UnionFind uf(g_.order());
        std::size_t seen = 0;
        for (int v : members) {
            if (!explored.empty()) {
                for (; seen < automorphisms_.size(); ++seen) {
                    const auto& gamma = automorphisms_[seen];
                    bool fixes = std::all_of(path.begin(), path.end(),
                                             [&](int x) { return gamma[x] == x; });
                    if (fixes)
                        for (int x = 0; x < g_.order(); ++x)
                            uf.unite(x, gamma[x]);
                }
                int rv = uf.find(v);
                if (std::any_of(explored.begin(), explored.end(),
                                [&](int u) { return uf.find(u) == rv; }))
                    continue;
            }
            Partition child = p;
            auto it = std::find(child.lab.begin() + target,
                                child.lab.begin() + target + target_size, v);
            std::iter_swap(child.lab.begin() + target, it);
            child.cell_end[target] = 1;
            ++child.cells;
            refine(g_, child, std::deque<int>{target});
            path.push_back(v);
            int jump = search(std::move(child), path);
            path.pop_back();
            explored.push_back(v);
            if (jump < depth)
                return jump;
        }
        return kNoJump;
    }

    const Graph& g_;
    bool have_first_ = false;
    Certificate first_cert_, best_cert_;
    std::vector<int> first_lab_, best_lab_;
    std::vector<int> first_path_, best_path_;
    std::vector<std::vector<int>> automorphisms_;
};

std::string serialise(const Graph& g, const std::vector<int>& order,
                      std::span<const std::int64_t> colours) {
    std::string out = to_graph6(g.permuted(order));
    out.push_back('|');
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i)
            out.push_back(',');
        out += std::to_string(colours.empty() ? 1 : colours[order[i]]);
    }
    return out;
}

} // namespace

Labeling canonical_labeling(const Graph& g, std::span<const std::int64_t> colours) {
    return CanonicalSearch(g).run(colour_partition(g.order(), colours));
}

std::vector<std::vector<int>> equitable_partition(const Graph& g,
                                                  std::span<const std::int64_t> colours) {
    Partition p = colour_partition(g.order(), colours);
    refine_all(g, p);
    std::vector<std::vector<int>> cells;
    for (int c = 0; c < p.size();) {
        int e = p.end_of(c);
        cells.emplace_back(p.lab.begin() + c, p.lab.begin() + e + 1);
        c = e + 1;
    }
    return cells;
}

std::string coloured_canonical_form(const Graph& g, std::span<const std::int64_t> colours) {
    Labeling lab = canonical_labeling(g, colours);
    return serialise(g, lab.order, colours);
}

std::string weighted_canonical_form(const Graph& base, std::span<const std::int64_t> weights) {
    if (static_cast<int>(weights.size()) != base.order())
        throw BadParams("weight vector length does not match base order");
    std::vector<int> support;
    for (int v = 0; v < base.order(); ++v) {
        if (weights[v] < 0)
            throw NegativeWeight("blow-up weights must be nonnegative");
        if (weights[v] > 0)
            support.push_back(v);
    }
    Graph sub = base.induced(support);
    TwinQuotient tq = twin_quotient(sub);
    std::vector<std::int64_t> merged(tq.sizes.size(), 0);
    for (std::size_t i = 0; i < support.size(); ++i)
        merged[tq.class_of[i]] += weights[support[i]];
    return coloured_canonical_form(tq.quotient, merged);
}

std::string canonical_form(const Graph& g) {
    std::vector<std::int64_t> ones(static_cast<std::size_t>(g.order()), 1);
    return weighted_canonical_form(g, ones);
}

bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edge_count() == b.edge_count() &&
           canonical_form(a) == canonical_form(b);
}

} // namespace rtex
