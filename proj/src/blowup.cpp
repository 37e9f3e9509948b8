#include "rtex/blowup.hpp"

#include "rtex/error.hpp"
#include "rtex/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace rtex {

WeightVector::WeightVector(Graph base, std::vector<std::int64_t> weights)
    : base_(std::move(base)), w_(std::move(weights)) {
    if (static_cast<int>(w_.size()) != base_.order())
        throw BadParams("weight vector length " + std::to_string(w_.size()) +
                        " does not match base order " + std::to_string(base_.order()));
    total_ = std::accumulate(w_.begin(), w_.end(), std::int64_t{0});
}

bool WeightVector::nonnegative() const {
    return std::all_of(w_.begin(), w_.end(), [](auto w) { return w >= 0; });
}

std::int64_t WeightVector::at(std::string_view label) const {
    auto v = base_.find_label(label);
    if (!v)
        throw BadParams("no base vertex labelled '" + std::string(label) + "'");
    return w_[*v];
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
    if (o.w_.size() != w_.size())
        throw BadParams("weight vectors over different bases");
    for (std::size_t i = 0; i < w_.size(); ++i)
        w_[i] += o.w_[i];
    total_ += o.total_;
    return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
    if (o.w_.size() != w_.size())
        throw BadParams("weight vectors over different bases");
    for (std::size_t i = 0; i < w_.size(); ++i)
        w_[i] -= o.w_[i];
    total_ -= o.total_;
    return *this;
}

WeightVector& WeightVector::operator*=(std::int64_t c) {
    for (auto& w : w_)
        w *= c;
    total_ *= c;
    return *this;
}

namespace {

void require_nonnegative(const WeightVector& spec) {
    if (!spec.nonnegative())
        throw NegativeWeight("blow-up weights must be nonnegative");
}

const std::vector<VertexSet>& cached_maximal_independent_sets(const Graph& base) {
    thread_local std::unordered_map<std::string, std::vector<VertexSet>> cache;
    std::string key = to_graph6(base);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    if (cache.size() > 512)
        cache.clear();
    return cache.emplace(std::move(key), maximal_independent_sets(base)).first->second;
}

} // namespace

Graph blow_up(const WeightVector& spec) {
    require_nonnegative(spec);
    const Graph& base = spec.base();
    if (spec.total() > kCapacity)
        throw CapacityExceeded("blow-up with " + std::to_string(spec.total()) +
                               " vertices exceeds capacity");
    Graph h(static_cast<int>(spec.total()));
    std::vector<int> first(static_cast<std::size_t>(base.order()) + 1, 0);
    for (int v = 0; v < base.order(); ++v)
        first[v + 1] = first[v] + static_cast<int>(spec[v]);
    for (auto [u, v] : base.edges())
        for (int a = first[u]; a < first[u + 1]; ++a)
            for (int b = first[v]; b < first[v + 1]; ++b)
                h.add_edge(a, b);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(spec.total()));
    for (int v = 0; v < base.order(); ++v)
        for (std::int64_t c = 0; c < spec[v]; ++c)
            labels.push_back(base.label(v) + "#" + std::to_string(c));
    h.set_labels(std::move(labels));
    return h;
}

std::int64_t blowup_edge_count(const WeightVector& spec) {
    std::int64_t e = 0;
    for (auto [u, v] : spec.base().edges())
        e += spec[u] * spec[v];
    return e;
}

std::vector<std::int64_t> class_neighborhood_sizes(const WeightVector& spec) {
    require_nonnegative(spec);
    const Graph& base = spec.base();
    std::vector<std::int64_t> out(static_cast<std::size_t>(base.order()), 0);
    for (int v = 0; v < base.order(); ++v)
        base.neighbors(v).for_each([&](int u) { out[v] += spec[u]; });
    return out;
}

bool check_sum_identity(const WeightVector& spec, int k) {
    auto d = spec.base().regular_degree();
    if (spec.base().order() > 0 && (!d || *d != k))
        throw NotRegular("base graph is not " + std::to_string(k) + "-regular");
    auto sizes = class_neighborhood_sizes(spec);
    return std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0}) == k * spec.total();
}

Rational edge_bound(std::int64_t r, std::int64_t k, std::int64_t n, std::int64_t s,
                    std::int64_t x) {
    Rational ns(n * s);
    Rational slack(Rational(r) * s - Rational(k) * n);
    return ns / 2 - Rational(x) * slack / 2;
}

std::optional<int> infer_regular_parameter(std::int64_t delta, std::int64_t Delta, std::int64_t n) {
    if (n < 1)
        throw BadParams("order must be positive");
    if (delta > Delta)
        return std::nullopt;
    std::optional<int> found;
    // Beyond d = 3n + 3 the lower window edge (d+1)n/(3d+2) exceeds any
    // admissible delta <= n/3 + 1/3.
    for (std::int64_t d = 2; d <= 3 * n + 3; ++d) {
        bool low = Rational((d + 1) * n, 3 * d + 2) < Rational(delta);
        bool high = Rational(Delta) < Rational((d - 1) * n, 3 * d - 4);
        if (low && high)
            found = static_cast<int>(d);
    }
    return found;
}

std::int64_t blowup_alpha(const WeightVector& spec) {
    require_nonnegative(spec);
    std::int64_t best = 0;
    for (const VertexSet& set : cached_maximal_independent_sets(spec.base())) {
        std::int64_t w = 0;
        set.for_each([&](int v) { w += spec[v]; });
        best = std::max(best, w);
    }
    return best;
}

EdgeBoundCheck check_edge_bound(const WeightVector& spec, int k, std::int64_t s, std::int64_t x) {
    auto d = spec.base().regular_degree();
    if (!d || *d != k)
        throw NotRegular("base graph is not " + std::to_string(k) + "-regular");
    const std::int64_t r = spec.base().order();
    const std::int64_t n = spec.total();
    auto nbhd = class_neighborhood_sizes(spec);
    EdgeBoundCheck out;
    out.edges = blowup_edge_count(spec);
    out.bound = edge_bound(r, k, n, s, x);
    out.hypotheses = true;
    for (int v = 0; v < r; ++v)
        out.hypotheses = out.hypotheses && spec[v] >= x && nbhd[v] <= s;
    out.equality = Rational(out.edges) == out.bound;
    if (out.equality && r * s != k * n) {
        bool has_min = false;
        bool saturated = true;
        for (int v = 0; v < r; ++v) {
            has_min = has_min || spec[v] == x;
            if (spec[v] > x)
                saturated = saturated && nbhd[v] == s;
        }
        out.equality_structure = has_min && saturated;
    }
    return out;
}

} // namespace rtex
