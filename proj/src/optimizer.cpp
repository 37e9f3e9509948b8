#include "rtex/optimizer.hpp"

#include "rtex/blowup.hpp"
#include "rtex/canonical.hpp"
#include "rtex/error.hpp"
#include "rtex/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

namespace rtex {

namespace {

struct Problem {
    const Graph* base = nullptr;
    int r = 0;
    std::int64_t n = 0, s = 0, min_weight = 0;
    std::vector<int> order;                 // assignment order
    std::vector<VertexSet> mis;             // maximal independent sets
    std::vector<std::vector<int>> mis_of;   // vertex -> indices into mis
    std::uint64_t budget = 0;
};

/// Shared between workers: the monotone best value and the witness pool.
struct Pool {
    std::mutex mutex;
    std::atomic<std::int64_t> best{-1};
    std::map<std::string, std::vector<std::int64_t>> witnesses;
    std::atomic<std::uint64_t> nodes{0};
    std::function<void(std::uint64_t)> progress;
};

class Worker {
  public:
    Worker(const Problem& p, Pool& pool)
        : p_(p), pool_(pool), w_(static_cast<std::size_t>(p.r), 0),
          nbr_w_(static_cast<std::size_t>(p.r), 0), mis_w_(p.mis.size(), 0) {}

    /// Explores the subtree where the first vertex in order has weight w0.
    void run_first(std::int64_t w0) {
        const int v = p_.order[0];
        if (w0 > cap(v, p_.n, 0))
            return;
        assign(v, w0);
        descend(1, p_.n - w0);
        unassign(v);
        flush_nodes();
    }

  private:
    std::int64_t cap(int v, std::int64_t remaining, int depth) const {
        std::int64_t c = remaining - p_.min_weight * (p_.r - depth - 1);
        for (int m : p_.mis_of[v])
            c = std::min(c, p_.s - mis_w_[m]);
        return c;
    }

    void assign(int v, std::int64_t x) {
        w_[v] = x;
        edges_ += x * nbr_w_[v];
        p_.base->neighbors(v).for_each([&](int u) { nbr_w_[u] += x; });
        for (int m : p_.mis_of[v])
            mis_w_[m] += x;
    }

    void unassign(int v) {
        const std::int64_t x = w_[v];
        for (int m : p_.mis_of[v])
            mis_w_[m] -= x;
        p_.base->neighbors(v).for_each([&](int u) { nbr_w_[u] -= x; });
        edges_ -= x * nbr_w_[v];
        w_[v] = 0;
    }

    /// Twice an upper bound on the edge count of any completion, given that
    /// the first `depth` vertices are assigned and `rest` weight remains.
    std::int64_t doubled_bound(int depth, std::int64_t rest) const {
        std::int64_t cross = 0;
        for (int t = 0; t < depth; ++t) {
            const int a = p_.order[t];
            cross += w_[a] * std::max<std::int64_t>(0, std::min(rest, p_.s - nbr_w_[a]));
        }
        // Remaining classes span a triangle-free graph (Mantel) and each has
        // degree at most s, which bounds 2e(B) + e(A, B) by rest * s.
        const std::int64_t mantel = 2 * edges_ + 2 * cross + 2 * ((rest * rest) / 4);
        const std::int64_t degree = 2 * edges_ + cross + rest * p_.s;
        return std::min(mantel, degree);
    }

    void count_node() {
        if (++local_nodes_ == 1024)
            flush_nodes();
    }

    void flush_nodes() {
        const std::uint64_t before = pool_.nodes.fetch_add(local_nodes_);
        const std::uint64_t after = before + local_nodes_;
        local_nodes_ = 0;
        if (pool_.progress && (before >> 24) != (after >> 24))
            pool_.progress(after);
        if (after > p_.budget)
            throw ResourceLimit("optimizer node budget of " + std::to_string(p_.budget) +
                                " exhausted");
    }

    void leaf() {
        const std::int64_t e = edges_;
        if (e < pool_.best.load())
            return;
        std::string form = weighted_canonical_form(*p_.base, w_);
        std::lock_guard lock(pool_.mutex);
        std::int64_t best = pool_.best.load();
        if (e < best)
            return;
        if (e > best) {
            pool_.witnesses.clear();
            pool_.best.store(e);
        }
        auto [it, fresh] = pool_.witnesses.emplace(std::move(form), w_);
        if (!fresh && w_ < it->second)
            it->second = w_;
    }

    void descend(int depth, std::int64_t rest) {
        count_node();
        if (2 * pool_.best.load() > doubled_bound(depth, rest))
            return;
        const int v = p_.order[depth];
        if (depth == p_.r - 1) {
            if (rest < p_.min_weight || rest > cap(v, rest, depth))
                return;
            assign(v, rest);
            leaf();
            unassign(v);
            return;
        }
        const std::int64_t hi = cap(v, rest, depth);
        for (std::int64_t x = hi; x >= p_.min_weight; --x) {
            assign(v, x);
            descend(depth + 1, rest - x);
            unassign(v);
        }
    }

    const Problem& p_;
    Pool& pool_;
    std::vector<std::int64_t> w_;
    std::vector<std::int64_t> nbr_w_;
    std::vector<std::int64_t> mis_w_;
    std::int64_t edges_ = 0;
    std::uint64_t local_nodes_ = 0;
};

/// Starts from a vertex of maximum degree, then repeatedly takes the vertex
/// with the most already-ordered neighbours, so that neighbourhood sums are
/// completed early.
std::vector<int> assignment_order(const Graph& g) {
    const int r = g.order();
    std::vector<int> order;
    VertexSet placed;
    while (static_cast<int>(order.size()) < r) {
        int pick = -1, key1 = -1, key2 = -1;
        for (int v = 0; v < r; ++v) {
            if (placed.test(v))
                continue;
            int k1 = (g.neighbors(v) & placed).count();
            int k2 = g.degree(v);
            if (k1 > key1 || (k1 == key1 && k2 > key2)) {
                pick = v;
                key1 = k1;
                key2 = k2;
            }
        }
        order.push_back(pick);
        placed.set(pick);
    }
    return order;
}

} // namespace

SearchReport max_blowup_edges(const Graph& base, std::int64_t n, std::int64_t s,
                              const OptimizerOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    if (base.order() < 1 || base.order() > 64)
        throw BadParams("optimizer base must have 1..64 vertices");
    if (n < 0 || n > 10000 || s < 0 || options.min_weight < 0)
        throw BadParams("optimizer needs 0 <= n <= 10000, s >= 0, min_weight >= 0");
    if (!is_triangle_free(base))
        throw NotTriangleFree("optimizer base must be triangle-free");

    Problem p;
    p.base = &base;
    p.r = base.order();
    p.n = n;
    p.s = s;
    p.min_weight = options.min_weight;
    p.budget = options.node_budget;
    p.order = assignment_order(base);
    p.mis = maximal_independent_sets(base);
    p.mis_of.resize(static_cast<std::size_t>(p.r));
    for (std::size_t m = 0; m < p.mis.size(); ++m)
        p.mis[m].for_each([&](int v) { p.mis_of[v].push_back(static_cast<int>(m)); });

    SearchReport report;
    report.mode = "blowup";
    if (n < p.min_weight * p.r)
        throw Infeasible("n is smaller than min_weight times the base order");

    Pool pool;
    pool.progress = options.progress;
    const std::int64_t first_hi = std::min(n, s);
    std::vector<std::int64_t> tasks;
    for (std::int64_t x = first_hi; x >= p.min_weight; --x)
        tasks.push_back(x);
    if (p.r == 1)
        tasks = {n};

    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        Worker worker(p, pool);
        try {
            for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
                if (p.r == 1) {
                    // A single class: feasible iff it fits under the cap.
                    if (n <= s && n >= p.min_weight) {
                        std::lock_guard lock(pool.mutex);
                        pool.best = 0;
                        std::vector<std::int64_t> w{n};
                        pool.witnesses.emplace(weighted_canonical_form(base, w), w);
                    }
                    continue;
                }
                worker.run_first(tasks[t]);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = tasks.size();
        }
    };
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool_threads;
        for (unsigned t = 0; t < threads; ++t)
            pool_threads.emplace_back(work);
        for (auto& th : pool_threads)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    report.nodes = pool.nodes.load();
    if (pool.best.load() < 0)
        throw Infeasible("no weighting of the base meets n=" + std::to_string(n) +
                         " and s=" + std::to_string(s));
    report.optimum = pool.best.load();
    const std::string base6 = to_graph6(base);
    for (auto& [form, w] : pool.witnesses) {
        Witness wit;
        wit.canonical = form;
        wit.weights = w;
        wit.base_graph6 = base6;
        if (n <= kCapacity)
            wit.graph6 = to_graph6(blow_up(WeightVector(base, w)));
        report.witnesses.push_back(std::move(wit));
    }
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace rtex
