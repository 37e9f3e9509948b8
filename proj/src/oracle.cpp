#include "rtex/oracle.hpp"

#include "rtex/canonical.hpp"
#include "rtex/constructions.hpp"
#include "rtex/error.hpp"
#include "rtex/invariants.hpp"
#include "rtex/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace rtex {

namespace {

void independent_sets(const Graph& g, VertexSet current, VertexSet candidates,
                      std::vector<VertexSet>& out) {
    out.push_back(current);
    for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
        VertexSet rest = candidates;
        // Only candidates after v, to list each set once.
        for (int u = rest.first(); u >= 0 && u <= v; u = rest.next(u))
            rest.reset(u);
        VertexSet with = current;
        with.set(v);
        independent_sets(g, with, rest - g.neighbors(v), out);
    }
}

std::vector<VertexSet> all_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    independent_sets(g, VertexSet{}, g.vertices(), out);
    return out;
}

/// Canonical-deletion test for the child whose newest vertex is v: the
/// distinguished orbit consists of the vertices equivalent to the member of
/// the last equitable cell that sits latest in the canonical labelling.
/// On acceptance `form` receives a complete invariant of the child.
bool accept_child(const Graph& child, int v, std::string& form) {
    auto cells = equitable_partition(child);
    const auto& last = cells.back();
    if (std::find(last.begin(), last.end(), v) == last.end())
        return false;
    Labeling lab = canonical_labeling(child);
    form = to_graph6(child.permuted(lab.order));
    if (last.size() == 1)
        return true;
    std::vector<int> position(static_cast<std::size_t>(child.order()));
    for (int p = 0; p < child.order(); ++p)
        position[lab.order[p]] = p;
    int c = last.front();
    for (int u : last)
        if (position[u] > position[c])
            c = u;
    if (c == v || lab.orbit[c] == lab.orbit[v])
        return true;
    // The automorphisms found need not generate the whole group; decide
    // whether v and c are equivalent exactly.
    std::vector<std::int64_t> mark_v(static_cast<std::size_t>(child.order()), 0);
    std::vector<std::int64_t> mark_c = mark_v;
    mark_v[v] = 1;
    mark_c[c] = 1;
    return coloured_canonical_form(child, mark_v) == coloured_canonical_form(child, mark_c);
}

class Generator {
  public:
    Generator(int n, const EnumerationOptions& options, const std::function<void(const Graph&)>& sink)
        : n_(n), options_(options), sink_(sink) {}

    /// Children of g (order m < n) that pass the cap and the canonical test.
    std::vector<std::pair<Graph, int>> children(const Graph& g, int alpha) {
        const int m = g.order();
        const bool last = m + 1 == n_;
        std::vector<VertexSet> sets = last ? maximal_independent_sets(g) : all_independent_sets(g);
        std::set<std::string> seen;
        std::vector<std::pair<Graph, int>> out;
        for (const VertexSet& S : sets) {
            Graph child = g;
            child.add_vertex(S);
            if (last && !is_maximal_triangle_free(child))
                continue;
            int child_alpha = -1;
            if (options_.alpha_cap) {
                std::vector<int> rest = (g.vertices() - S).to_vector();
                child_alpha = std::max(alpha, 1 + independence_number(g.induced(rest)));
                if (child_alpha > *options_.alpha_cap)
                    continue;
            }
            std::string form;
            if (!accept_child(child, m, form) || !seen.insert(form).second)
                continue;
            out.emplace_back(std::move(child), child_alpha);
        }
        nodes_ += out.size();
        return out;
    }

    void dfs(const Graph& g, int alpha) {
        if (g.order() == n_) {
            emit(g);
            return;
        }
        for (auto& [child, a] : children(g, alpha))
            dfs(child, a);
    }

    void emit(const Graph& g) {
        ++output_;
        if (lock_) {
            std::lock_guard guard(*lock_);
            sink_(g);
        } else {
            sink_(g);
        }
    }

    void set_lock(std::mutex* m) { lock_ = m; }
    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t output() const { return output_; }

  private:
    int n_;
    const EnumerationOptions& options_;
    const std::function<void(const Graph&)>& sink_;
    std::mutex* lock_ = nullptr;
    std::uint64_t nodes_ = 0, output_ = 0;
};

SearchReport finish_report(std::optional<std::int64_t> best, const std::vector<Graph>& graphs,
                           std::uint64_t nodes, double seconds, const std::string& mode) {
    SearchReport r;
    r.optimum = best;
    r.nodes = nodes;
    r.seconds = seconds;
    r.mode = mode;
    std::map<std::string, std::string> by_form;
    for (const Graph& g : graphs) {
        std::string form = canonical_form(g);
        if (!by_form.count(form))
            by_form[form] = to_graph6(g.permuted(canonical_labeling(g).order));
    }
    for (auto& [form, g6] : by_form)
        r.witnesses.push_back(Witness{g6, {}, {}, form});
    return r;
}

double elapsed(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

EnumerationStats for_each_maximal_triangle_free(int n, const EnumerationOptions& options,
                                                const std::function<void(const Graph&)>& visit) {
    if (n < 0)
        throw BadParams("order must be nonnegative");
    if (n > options.max_order)
        throw ResourceLimit("exhaustive enumeration is capped at n=" +
                            std::to_string(options.max_order));
    EnumerationStats stats;
    if (options.alpha_cap && *options.alpha_cap < (n > 0 ? 1 : 0))
        return stats;
    if (n <= 1) {
        visit(Graph(n));
        stats.output = stats.nodes = 1;
        return stats;
    }
    const Graph root(1);
    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    if (threads <= 1 || n < 8) {
        Generator gen(n, options, visit);
        gen.dfs(root, 1);
        stats.nodes = gen.nodes() + 1;
        stats.output = gen.output();
        return stats;
    }
    // Breadth-first down to a split level, then independent subtrees.
    const int split = n - 4;
    std::vector<std::pair<Graph, int>> frontier{{root, 1}};
    Generator head(n, options, visit);
    while (frontier.front().first.order() < split) {
        std::vector<std::pair<Graph, int>> next;
        for (auto& [g, a] : frontier)
            for (auto& c : head.children(g, a))
                next.push_back(std::move(c));
        frontier = std::move(next);
        if (frontier.empty())
            return {head.nodes() + 1, 0};
    }
    std::mutex sink_lock;
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> nodes{head.nodes() + 1}, output{0};
    auto work = [&] {
        Generator gen(n, options, visit);
        gen.set_lock(&sink_lock);
        for (std::size_t t; (t = next.fetch_add(1)) < frontier.size();)
            gen.dfs(frontier[t].first, frontier[t].second);
        nodes += gen.nodes();
        output += gen.output();
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(work);
    for (auto& th : pool)
        th.join();
    return {nodes.load(), output.load()};
}

std::vector<Graph> enumerate_maximal_triangle_free(int n, const EnumerationOptions& options) {
    std::vector<std::pair<std::string, Graph>> found;
    for_each_maximal_triangle_free(n, options, [&](const Graph& g) {
        found.emplace_back(canonical_form(g), g);
    });
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [form, g] : found)
        out.push_back(std::move(g));
    return out;
}

std::string to_string(OracleMode mode) { return mode == OracleMode::Full ? "full" : "structured"; }

OracleMode parse_oracle_mode(const std::string& text) {
    if (text == "full")
        return OracleMode::Full;
    if (text == "structured")
        return OracleMode::Structured;
    throw BadParams("unknown oracle mode '" + text + "'");
}

namespace {

SearchReport structured_ex(int n, int s, const OracleOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    SearchReport out;
    out.mode = "structured";
    out.flags.push_back("StructuredModeAssumption");
    if (n < 1 || s < 1) {
        out.seconds = elapsed(start);
        return out;
    }
    // Proper blow-ups of an Andrasfai graph with parameter l have
    // sum |N(V_i)| = ln <= (3l-1)s, which needs l/(3l-1) <= s/n.
    int l_min = 1;
    while (l_min * static_cast<std::int64_t>(n) > (3 * l_min - 1) * static_cast<std::int64_t>(s) &&
           3 * l_min - 1 <= n)
        ++l_min;
    std::vector<Graph> bases;
    for (int l = l_min; 3 * l - 1 <= n; ++l)
        bases.push_back(andrasfai(l));
    for (int i = 2; 3 * i + 5 <= n; ++i)
        for (int mu : {0, 1})
            for (int nu : {0, 1})
                if (3 * i + 7 - mu - nu <= n && vega_k(i, mu, nu) >= l_min)
                    bases.push_back(vega(i, mu, nu));

    OptimizerOptions opt;
    opt.min_weight = 1;
    opt.threads = options.threads;
    std::map<std::string, Witness> pool;
    for (const Graph& base : bases) {
        opt.node_budget = options.node_budget - std::min(options.node_budget, out.nodes);
        SearchReport r;
        try {
            r = max_blowup_edges(base, n, s, opt);
        } catch (const Infeasible&) {
            continue;
        }
        out.nodes += r.nodes;
        if (!out.optimum || *r.optimum > *out.optimum) {
            out.optimum = r.optimum;
            pool.clear();
        }
        if (*r.optimum == *out.optimum)
            for (auto& w : r.witnesses)
                pool.emplace(w.canonical, w);
    }
    for (auto& [form, w] : pool)
        out.witnesses.push_back(w);
    out.seconds = elapsed(start);
    return out;
}

} // namespace

SearchReport exact_ex(int n, int s, OracleMode mode, const OracleOptions& options) {
    if (n < 0 || s < 0)
        throw BadParams("exact_ex needs n, s >= 0");
    if (mode == OracleMode::Structured)
        return structured_ex(n, s, options);
    const auto start = std::chrono::steady_clock::now();
    EnumerationOptions eo;
    eo.threads = options.threads;
    eo.max_order = options.max_order;
    if (s < n)
        eo.alpha_cap = s;
    std::optional<std::int64_t> best;
    std::vector<Graph> witnesses;
    auto stats = for_each_maximal_triangle_free(n, eo, [&](const Graph& g) {
        const std::int64_t e = g.edge_count();
        if (!best || e > *best) {
            best = e;
            witnesses.clear();
        }
        if (e == *best)
            witnesses.push_back(g);
    });
    return finish_report(best, witnesses, stats.nodes, elapsed(start), "full");
}

std::vector<SearchReport> ex_table(int n, const OracleOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    EnumerationOptions eo;
    eo.threads = options.threads;
    eo.max_order = options.max_order;
    // Per independence number: the most edges and the graphs attaining it.
    std::map<int, std::pair<std::int64_t, std::vector<Graph>>> by_alpha;
    auto stats = for_each_maximal_triangle_free(n, eo, [&](const Graph& g) {
        const int a = independence_number(g);
        const std::int64_t e = g.edge_count();
        auto [it, fresh] = by_alpha.try_emplace(a, e, std::vector<Graph>{});
        if (!fresh && e > it->second.first) {
            it->second.first = e;
            it->second.second.clear();
        }
        if (e == it->second.first)
            it->second.second.push_back(g);
    });
    const double seconds = elapsed(start);
    std::vector<SearchReport> out;
    for (int s = 1; s <= n; ++s) {
        std::optional<std::int64_t> best;
        for (auto& [a, entry] : by_alpha)
            if (a <= s && (!best || entry.first > *best))
                best = entry.first;
        std::vector<Graph> graphs;
        for (auto& [a, entry] : by_alpha)
            if (a <= s && best && entry.first == *best)
                graphs.insert(graphs.end(), entry.second.begin(), entry.second.end());
        out.push_back(finish_report(best, graphs, stats.nodes, seconds, "full"));
    }
    return out;
}

ResultStore::ResultStore(std::filesystem::path path) : path_(std::move(path)) {}

std::optional<std::filesystem::path> ResultStore::default_path() {
    if (const char* env = std::getenv("RTEX_DB"); env && *env)
        return std::filesystem::path(env);
    return std::nullopt;
}

std::optional<SearchReport> ResultStore::lookup(int n, int s, OracleMode mode) const {
    std::ifstream in(path_);
    if (!in)
        return std::nullopt;
    std::optional<SearchReport> found;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            continue;
        if (j.value("n", -1) != n || j.value("s", -1) != s ||
            j.value("mode", std::string()) != to_string(mode) ||
            j.value("version", std::string()) != kOracleVersion)
            continue;
        SearchReport r;
        if (!j["ex"].is_null())
            r.optimum = j["ex"].get<std::int64_t>();
        for (const auto& g6 : j["witness_graph6"]) {
            Witness w;
            w.graph6 = g6.get<std::string>();
            w.canonical = canonical_form(from_graph6(w.graph6));
            r.witnesses.push_back(std::move(w));
        }
        r.nodes = j.value("nodes", std::uint64_t{0});
        r.seconds = j.value("seconds", 0.0);
        r.mode = to_string(mode);
        r.flags = j.value("flags", std::vector<std::string>{});
        found = std::move(r);
    }
    return found;
}

void ResultStore::append(int n, int s, OracleMode mode, const SearchReport& report) {
    nlohmann::json j;
    j["n"] = n;
    j["s"] = s;
    j["mode"] = to_string(mode);
    j["ex"] = report.optimum ? nlohmann::json(*report.optimum) : nlohmann::json(nullptr);
    j["witness_graph6"] = nlohmann::json::array();
    for (const auto& w : report.witnesses)
        j["witness_graph6"].push_back(w.graph6);
    j["nodes"] = report.nodes;
    j["seconds"] = report.seconds;
    j["version"] = kOracleVersion;
    if (!report.flags.empty())
        j["flags"] = report.flags;
    std::ofstream out(path_, std::ios::app);
    if (!out)
        throw Error("cannot open result store " + path_.string());
    out << j.dump() << '\n';
}

} // namespace rtex
